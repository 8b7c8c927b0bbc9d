#include "egm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "egm/random.hpp"

namespace egm {

Graph::Graph(std::size_t n) : n_(n) { build(); }

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside vertex range " +
                       std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge");
  }
  build();
}

void Graph::build() {
  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.assign(2 * edges_.size(), 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Lexicographic edge order makes every neighbour list come out sorted:
  // smaller neighbours first, each group ascending.
  for (const Edge& e : edges_) targets_[fill[e.v]++] = e.u;
  for (const Edge& e : edges_) targets_[fill[e.u]++] = e.v;
  rows_.clear();
  row_words_ = 0;
  if (n_ > 0 && n_ <= kDenseRowLimit) {
    row_words_ = (n_ + 63) / 64;
    rows_.assign(n_ * row_words_, 0);
    for (const Edge& e : edges_) {
      rows_[e.u * row_words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
      rows_[e.v * row_words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    }
  }
}

Graph Graph::complete(std::size_t n) {
  EdgeList es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, es);
}

Graph Graph::cycle(std::size_t n) {
  EdgeList es;
  for (Vertex u = 0; u < n; ++u) es.push_back({u, static_cast<Vertex>((u + 1) % n)});
  return Graph(n, es);
}

Graph Graph::path(std::size_t n) {
  EdgeList es;
  for (Vertex u = 0; u + 1 < n; ++u) es.push_back({u, u + 1});
  return Graph(n, es);
}

Graph Graph::star(std::size_t leaves) {
  EdgeList es;
  for (Vertex v = 1; v <= leaves; ++v) es.push_back({0, v});
  return Graph(leaves + 1, es);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  if (!rows_.empty()) return ((rows_[u * row_words_ + (v >> 6)] >> (v & 63)) & 1U) != 0;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return it - edges_.begin();
}

Graph Graph::spanning_subgraph(std::span<const Edge> edges) const {
  for (const Edge& e : edges) {
    if (!adjacent(e.u, e.v)) throw InputError("edge is not present in the host graph");
  }
  return Graph(n_, edges);
}

Graph Graph::induced(const VertexSet& keep) const {
  if (keep.universe() != n_) throw InputError("vertex set universe does not match graph order");
  std::vector<Vertex> local(n_, static_cast<Vertex>(-1));
  Vertex next = 0;
  keep.for_each([&](Vertex v) { local[v] = next++; });
  EdgeList es;
  for (const Edge& e : edges_) {
    if (keep.contains(e.u) && keep.contains(e.v)) es.push_back({local[e.u], local[e.v]});
  }
  return Graph(next, es);
}

Graph gen_gnp(const GnpParams& params) {
  if (params.n < 1) throw InputError("G(n,p) requires n >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw InputError("G(n,p) requires 0 <= p <= 1");
  const std::size_t n = params.n;
  EdgeList es;
  if (params.p >= 1.0) return Graph::complete(n);
  if (params.p <= 0.0 || n < 2) return Graph(n);

  es.reserve(static_cast<std::size_t>(params.p * static_cast<double>(n) * static_cast<double>(n - 1) / 2 * 1.1) + 16);
  Rng rng(params.seed);
  // Batagelj-Brandes skipping over pairs (w, v), w < v, in column order.
  const double log_q = std::log1p(-params.p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform01();
    const double skip = std::floor(std::log1p(-r) / log_q);
    // Any skip past the remaining pair count ends the scan.
    if (skip > static_cast<double>(nn) * static_cast<double>(nn)) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) es.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph(n, es);
}

namespace {

void require_universe(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order()) {
    throw InputError("vertex set over universe " + std::to_string(x.universe()) + " used with graph of order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

std::size_t edges_within(const Graph& g, const VertexSet& x) {
  require_universe(g, x);
  std::size_t count = 0;
  x.for_each([&](Vertex v) {
    for (Vertex u : g.neighbors(v))
      if (u > v && x.contains(u)) ++count;
  });
  return count;
}

std::size_t edges_between(const Graph& g, const VertexSet& y, const VertexSet& z) {
  require_universe(g, y);
  require_universe(g, z);
  if (y.intersects(z)) throw InputError("edges_between requires disjoint vertex sets");
  const VertexSet& small = y.count() <= z.count() ? y : z;
  const VertexSet& large = y.count() <= z.count() ? z : y;
  std::size_t count = 0;
  small.for_each([&](Vertex v) {
    for (Vertex u : g.neighbors(v))
      if (large.contains(u)) ++count;
  });
  return count;
}

std::vector<Component> components(const Graph& g, const VertexSet& removed) {
  require_universe(g, removed);
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  removed.for_each([&](Vertex v) { seen[v] = 1; });
  std::vector<Component> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Component c{VertexSet(n), 0};
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      c.vertices.insert(v);
      ++c.size;
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> components(const Graph& g) { return components(g, VertexSet(g.order())); }

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool is_forest(const Graph& g) {
  std::vector<std::size_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const Edge& e : g.edges()) {
    const std::size_t a = find_root(parent, e.u);
    const std::size_t b = find_root(parent, e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace egm
