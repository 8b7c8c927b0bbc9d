#include "egm/decomposition.hpp"

#include <algorithm>
#include <string>

#include "egm/error.hpp"
#include "egm/matching.hpp"

namespace egm {

Decomposition::Decomposition(std::size_t n, std::vector<Vertex> s, std::vector<std::vector<Vertex>> blocks)
    : n_(n), s_(std::move(s)), blocks_(std::move(blocks)) {
  std::vector<char> seen(n, 0);
  auto claim = [&](Vertex v) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " outside range [0, " + std::to_string(n) + ")");
    if (seen[v] != 0) throw InputError("vertex " + std::to_string(v) + " appears twice in the partition");
    seen[v] = 1;
  };
  std::sort(s_.begin(), s_.end());
  for (Vertex v : s_) claim(v);
  for (auto& b : blocks_) {
    if (b.empty()) throw InputError("empty block");
    if (b.size() % 2 == 0) throw InputError("block of even size " + std::to_string(b.size()));
    std::sort(b.begin(), b.end());
    for (Vertex v : b) claim(v);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (seen[v] == 0) throw InputError("vertex " + std::to_string(v) + " not covered by the partition");
  if (blocks_.size() < s_.size())
    throw InputError("partition has d = " + std::to_string(blocks_.size()) + " < s = " + std::to_string(s_.size()));
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

Decomposition Decomposition::singletons(std::size_t n) {
  std::vector<std::vector<Vertex>> blocks(n);
  for (std::size_t v = 0; v < n; ++v) blocks[v] = {static_cast<Vertex>(v)};
  return Decomposition(n, {}, std::move(blocks));
}

VertexSet Decomposition::b_set() const {
  VertexSet b(n_);
  for (std::size_t i = 1; i < blocks_.size(); ++i)
    for (Vertex v : blocks_[i]) b.insert(v);
  return b;
}

std::vector<std::int32_t> Decomposition::labels() const {
  std::vector<std::int32_t> label(n_, kInS);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (Vertex v : blocks_[i]) label[v] = static_cast<std::int32_t>(i);
  return label;
}

void require_compatible(const Graph& g, const Decomposition& pi) {
  if (g.order() != pi.order())
    throw InputError("partition over " + std::to_string(pi.order()) + " vertices, graph has " +
                     std::to_string(g.order()));
}

EdgeList edge_set(const Graph& g, const Decomposition& pi) {
  require_compatible(g, pi);
  const auto label = pi.labels();
  EdgeList out;
  for (const Edge& e : g.edges()) {
    if (label[e.u] == Decomposition::kInS || label[e.v] == Decomposition::kInS || label[e.u] == label[e.v])
      out.push_back(e);
  }
  return out;
}

std::size_t decomposition_size(const Graph& g, const Decomposition& pi) {
  require_compatible(g, pi);
  const auto label = pi.labels();
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if (label[e.u] == Decomposition::kInS || label[e.v] == Decomposition::kInS || label[e.u] == label[e.v]) ++count;
  }
  return count;
}

std::size_t nu_of_decomposition(const Graph& g, const Decomposition& pi) {
  const EdgeList h = edge_set(g, pi);
  return matching_number(Graph(g.order(), h));
}

}  // namespace egm
