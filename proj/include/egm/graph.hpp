#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "egm/vertex_set.hpp"

namespace egm {

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Neighbourhoods are stored as sorted adjacency lists (CSR). Small graphs
/// additionally keep one adjacency bitset row per vertex for O(1) adjacency
/// tests and word-parallel counting.
class Graph {
 public:
  static constexpr std::size_t kDenseRowLimit = std::size_t{1} << 12;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  /// Throws InputError on self-loops, duplicates or out-of-range endpoints.
  /// Endpoints may be given in either order.
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph star(std::size_t leaves);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Edges in lexicographic order.
  const EdgeList& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_dense_rows() const { return !rows_.empty(); }

  /// Subgraph on the same vertex set with the given edges (must be edges of this graph).
  Graph spanning_subgraph(std::span<const Edge> edges) const;

  /// Graph induced by `keep`, relabelled 0..|keep|-1 in increasing order of original id.
  Graph induced(const VertexSet& keep) const;

  /// Position of an edge in edges(), or -1.
  std::int64_t edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void build();

  std::size_t n_ = 0;
  EdgeList edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Parameters of the binomial random graph model.
struct GnpParams {
  std::size_t n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Name of the generator recorded in experiment metadata.
inline constexpr const char* kGnpGenerator = "gnp-geometric-skip/xoshiro256**";

/// Samples G(n,p): every pair independently with probability p, determined by
/// the seed. Uses geometric skipping over the lexicographic pair order.
Graph gen_gnp(const GnpParams& params);

/// |E(X)|: edges with both endpoints in x.
std::size_t edges_within(const Graph& g, const VertexSet& x);

/// |∇(Y,Z)|: edges with one endpoint in y and the other in z. y, z must be disjoint.
std::size_t edges_between(const Graph& g, const VertexSet& y, const VertexSet& z);

struct Component {
  VertexSet vertices;
  std::size_t size = 0;
  bool odd() const { return size % 2 == 1; }
};

/// Connected components of g - removed, ordered by smallest member.
std::vector<Component> components(const Graph& g, const VertexSet& removed);
std::vector<Component> components(const Graph& g);

/// True iff g is acyclic.
bool is_forest(const Graph& g);

/// True iff g is 2-colourable.
bool is_bipartite(const Graph& g);

// Plain-text edge list: first line "n m", then m lines "u v" with u < v.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace egm
