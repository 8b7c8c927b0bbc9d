#include "egm/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace egm {

namespace {

constexpr Vertex kNone = kUnmatched;

/// Edmonds' search: one alternating forest rooted at a single exposed vertex,
/// blossoms contracted through `base_`.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(n_, kNone),
        parent_(n_, kNone),
        base_(n_),
        outer_(n_, 0),
        in_blossom_(n_, 0),
        lca_mark_(n_, 0) {}

  void greedy_init() {
    // Low-degree vertices first tends to leave fewer exposed vertices.
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    for (Vertex v : order) {
      if (match_[v] != kNone) continue;
      Vertex pick = kNone;
      for (Vertex u : g_.neighbors(v)) {
        if (match_[u] == kNone && (pick == kNone || g_.degree(u) < g_.degree(pick))) pick = u;
      }
      if (pick != kNone) {
        match_[v] = pick;
        match_[pick] = v;
      }
    }
  }

  void solve() {
    greedy_init();
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      // An exposed vertex without an augmenting path never gains one later.
      Vertex end = find_path(root);
      if (end != kNone) augment(end);
    }
  }

  /// Vertices reachable from `root` by an even alternating path; valid after
  /// solve() when `root` is exposed.
  std::vector<Vertex> even_reachable(Vertex root) {
    find_path(root);
    std::vector<Vertex> out;
    for (Vertex v : tree_)
      if (outer_[v]) out.push_back(v);
    return out;
  }

  const std::vector<Vertex>& mate() const { return match_; }

 private:
  void touch(Vertex v) {
    if (!touched_[v]) {
      touched_[v] = 1;
      tree_.push_back(v);
    }
  }

  Vertex lca(Vertex a, Vertex b) {
    ++lca_stamp_;
    for (;;) {
      a = base_[a];
      lca_mark_[a] = lca_stamp_;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == lca_stamp_) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    for (Vertex v : tree_) {
      parent_[v] = kNone;
      outer_[v] = 0;
      base_[v] = v;
      touched_[v] = 0;
    }
    if (touched_.size() != n_) {
      touched_.assign(n_, 0);
      std::iota(base_.begin(), base_.end(), Vertex{0});
    }
    tree_.clear();
    queue_.clear();
    outer_[root] = 1;
    touch(root);
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const Vertex cur = lca(v, to);
          for (Vertex t : tree_) in_blossom_[t] = 0;
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < tree_.size(); ++i) {
            const Vertex t = tree_[i];
            if (in_blossom_[base_[t]]) {
              base_[t] = cur;
              if (!outer_[t]) {
                outer_[t] = 1;
                queue_.push_back(t);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          touch(to);
          if (match_[to] == kNone) return to;
          const Vertex next = match_[to];
          outer_[next] = 1;
          touch(next);
          queue_.push_back(next);
        }
      }
    }
    return kNone;
  }

  void augment(Vertex v) {
    while (v != kNone) {
      const Vertex pv = parent_[v];
      const Vertex ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> outer_;
  std::vector<char> in_blossom_;
  std::vector<std::uint64_t> lca_mark_;
  std::uint64_t lca_stamp_ = 0;
  std::vector<char> touched_;
  std::vector<Vertex> tree_;
  std::vector<Vertex> queue_;
};

Matching to_matching(const std::vector<Vertex>& mate) {
  Matching m;
  m.mate = mate;
  for (Vertex v = 0; v < mate.size(); ++v)
    if (mate[v] != kNone && v < mate[v]) m.pairs.push_back({v, mate[v]});
  return m;
}

bool alternating_dfs(const Graph& g, const Matching& m, Vertex v, std::vector<char>& on_path) {
  // v is the current outer vertex; extend along a non-matching edge.
  for (Vertex w : g.neighbors(v)) {
    if (on_path[w] || m.mate[v] == w) continue;
    if (m.mate[w] == kNone) return true;
    const Vertex x = m.mate[w];
    if (on_path[x]) continue;
    on_path[w] = on_path[x] = 1;
    if (alternating_dfs(g, m, x, on_path)) return true;
    on_path[w] = on_path[x] = 0;
  }
  return false;
}

}  // namespace

Matching max_matching(const Graph& g) {
  BlossomSearch search(g);
  search.solve();
  return to_matching(search.mate());
}

std::size_t matching_number(const Graph& g) { return max_matching(g).size(); }

bool has_augmenting_path(const Graph& g, const Matching& m) {
  std::vector<char> on_path(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (m.mate[s] != kNone) continue;
    on_path[s] = 1;
    if (alternating_dfs(g, m, s, on_path)) return true;
    on_path[s] = 0;
  }
  return false;
}

std::size_t odd_components(const Graph& g, const VertexSet& s) {
  std::size_t odd = 0;
  for (const auto& c : components(g, s))
    if (c.odd()) ++odd;
  return odd;
}

namespace {

std::size_t odd_components_mask(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
  std::size_t odd = 0;
  while (alive != 0) {
    std::uint64_t comp = alive & (~alive + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    alive &= ~comp;
  }
  return odd;
}

TBWitness exhaustive_witness(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  std::uint64_t best_set = 0;
  std::size_t best_odd = 0;
  for (std::size_t s = 0; s <= n; ++s) {
    // o(G-S) <= n - |S|, so larger S cannot beat the incumbent once n - 2s <= best.
    if (static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(s) <= best) break;
    std::uint64_t mask = s == 0 ? 0 : (s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1);
    for (;;) {
      const std::size_t odd = odd_components_mask(adj, all & ~mask);
      const std::int64_t value = static_cast<std::int64_t>(odd) - static_cast<std::int64_t>(s);
      if (value > best) {
        best = value;
        best_set = mask;
        best_odd = odd;
      }
      if (s == 0 || s == n) break;
      // Gosper's hack: next mask with the same popcount.
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      if (r == 0 || (r & ~all) != 0) break;
      mask = (((r ^ mask) >> 2) / c) | r;
      if ((mask & ~all) != 0) break;
    }
  }
  TBWitness w;
  w.s_set = VertexSet(n);
  for (Vertex v = 0; v < n; ++v)
    if ((best_set >> v) & 1U) w.s_set.insert(v);
  w.odd_count = best_odd;
  w.deficiency = best;
  w.exhaustive = true;
  return w;
}

}  // namespace

TBWitness tutte_berge_witness(const Graph& g, const TBOptions& options) {
  const std::size_t n = g.order();
  BlossomSearch search(g);
  search.solve();
  const std::size_t nu = to_matching(search.mate()).size();
  const auto target = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(nu);

  TBWitness w;
  if (options.mode == WitnessMode::kExhaustive) {
    if (n > options.n_exact || n > 64) {
      throw CapabilityError("exhaustive Tutte-Berge witness limited to n <= " + std::to_string(options.n_exact) +
                            " (got n = " + std::to_string(n) + ")");
    }
    w = exhaustive_witness(g);
  } else {
    VertexSet even(n);
    for (Vertex r = 0; r < n; ++r) {
      if (search.mate()[r] != kNone) continue;
      for (Vertex v : search.even_reachable(r)) even.insert(v);
    }
    VertexSet s(n);
    even.for_each([&](Vertex v) {
      for (Vertex u : g.neighbors(v))
        if (!even.contains(u)) s.insert(u);
    });
    w.s_set = std::move(s);
    w.odd_count = odd_components(g, w.s_set);
    w.deficiency = static_cast<std::int64_t>(w.odd_count) - static_cast<std::int64_t>(w.s_set.count());
    w.exhaustive = false;
  }
  w.certified = w.deficiency == target;
  return w;
}

}  // namespace egm
