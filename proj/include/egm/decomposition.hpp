#pragma once

#include <cstdint>
#include <vector>

#include "egm/graph.hpp"

namespace egm {

/// A partition V = S ∪ A₁ ∪ ⋯ ∪ A_d into a set S and odd blocks.
///
/// Members are kept sorted and blocks are ordered by size (descending), then
/// by smallest member, so A₁ is always a largest block.
class Decomposition {
 public:
  static constexpr std::int32_t kInS = -1;

  Decomposition() = default;
  /// Validates the partition; throws InputError on overlap, missing
  /// vertices, even or empty blocks, or d < s.
  Decomposition(std::size_t n, std::vector<Vertex> s, std::vector<std::vector<Vertex>> blocks);

  /// S = ∅ with every vertex a singleton block.
  static Decomposition singletons(std::size_t n);

  std::size_t order() const { return n_; }
  const std::vector<Vertex>& s() const { return s_; }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& block(std::size_t i) const { return blocks_[i]; }

  std::size_t s_count() const { return s_.size(); }
  std::size_t d() const { return blocks_.size(); }
  std::int64_t r() const { return static_cast<std::int64_t>(d()) - static_cast<std::int64_t>(s_count()); }
  std::size_t a1_size() const { return blocks_.empty() ? 0 : blocks_.front().size(); }
  /// |B| with B = A₂ ∪ ⋯ ∪ A_d.
  std::size_t b_size() const { return n_ - s_count() - a1_size(); }
  /// y = |B| − (d − 1).
  std::size_t y() const { return blocks_.empty() ? 0 : b_size() - (d() - 1); }
  /// The matching-number target k = (n − r)/2 this partition is built for.
  std::size_t k() const { return static_cast<std::size_t>((static_cast<std::int64_t>(n_) - r()) / 2); }

  VertexSet s_set() const { return VertexSet::of(n_, s_); }
  VertexSet block_set(std::size_t i) const { return VertexSet::of(n_, blocks_[i]); }
  VertexSet b_set() const;
  /// label[v] = kInS for v ∈ S, else the index of v's block.
  std::vector<std::int32_t> labels() const;

  /// S = ∅ and every block other than A₁ is a singleton.
  bool is_form_a() const { return s_.empty() && y() == 0; }
  /// Every block is a singleton.
  bool is_form_b() const { return a1_size() <= 1; }
  bool is_canonical() const { return is_form_a() || is_form_b(); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vertex> s_;
  std::vector<std::vector<Vertex>> blocks_;
};

/// Edges of g meeting S or lying inside a block.
EdgeList edge_set(const Graph& g, const Decomposition& pi);

/// |edge_set(g, pi)|, computed without materialising the edges.
std::size_t decomposition_size(const Graph& g, const Decomposition& pi);

/// ν of the subgraph edge_set(g, pi).
std::size_t nu_of_decomposition(const Graph& g, const Decomposition& pi);

/// Checks pi partitions g's vertex range; throws InputError otherwise.
void require_compatible(const Graph& g, const Decomposition& pi);

}  // namespace egm
