#include "egm/cover.hpp"

#include <algorithm>
#include <bit>

#include "egm/error.hpp"
#include "egm/matching.hpp"

namespace egm {

namespace {

/// Dense adjacency over a relabelled vertex subset.
class LocalGraph {
 public:
  LocalGraph(const Graph& g, const std::vector<Vertex>& vertices)
      : n_(vertices.size()), words_((n_ + 63) / 64), rows_(n_ * words_, 0), global_(vertices) {
    std::vector<std::int64_t> local(g.order(), -1);
    for (std::size_t i = 0; i < n_; ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < n_; ++i) {
      for (Vertex u : g.neighbors(vertices[i])) {
        const std::int64_t j = local[u];
        if (j >= 0) rows_[i * words_ + static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }
  const std::uint64_t* row(std::size_t v) const { return rows_.data() + v * words_; }
  Vertex global(std::size_t v) const { return global_[v]; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<Vertex> global_;
};

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t v) { return ((b[v / 64] >> (v % 64)) & 1U) != 0; }
void set(Bits& b, std::size_t v) { b[v / 64] |= std::uint64_t{1} << (v % 64); }
void clear(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

std::size_t popcount_and(const std::uint64_t* a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < b.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

template <typename F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::uint64_t w = b[i]; w != 0; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
}

std::size_t first_common(const std::uint64_t* a, const Bits& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if ((a[i] & b[i]) != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(a[i] & b[i]));
  return static_cast<std::size_t>(-1);
}

struct BudgetExhausted {};

/// Minimum vertex cover of one connected piece.
class CoverSearch {
 public:
  CoverSearch(const LocalGraph& g, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g), nodes_(nodes), budget_(budget) {}

  /// Searches for a cover smaller than `cap`; returns true when one was found.
  bool run(std::size_t cap) {
    best_ = cap;
    found_ = false;
    Bits alive(g_.words(), 0);
    for (std::size_t v = 0; v < g_.order(); ++v) set(alive, v);
    Bits chosen(g_.words(), 0);
    search(std::move(alive), std::move(chosen), 0);
    return found_;
  }

  std::size_t best() const { return best_; }
  const Bits& best_cover() const { return best_cover_; }

  /// ν of the induced graph on `alive`, greedily (a lower bound on τ).
  std::size_t greedy_matching(const Bits& alive) const {
    Bits free = alive;
    std::size_t m = 0;
    for_each_bit(alive, [&](std::size_t v) {
      if (!test(free, v)) return;
      const std::size_t u = first_common(g_.row(v), free);
      if (u != static_cast<std::size_t>(-1)) {
        clear(free, v);
        clear(free, u);
        ++m;
      }
    });
    return m;
  }

 private:
  void take(Bits& alive, Bits& chosen, std::size_t v, std::size_t& cur) {
    set(chosen, v);
    clear(alive, v);
    ++cur;
  }

  void search(Bits alive, Bits chosen, std::size_t cur) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    const std::size_t words = g_.words();
    bool changed = true;
    while (changed && cur < best_) {
      changed = false;
      for_each_bit(Bits(alive), [&](std::size_t v) {
        if (!test(alive, v)) return;
        const std::size_t deg = popcount_and(g_.row(v), alive);
        if (deg == 0) {
          clear(alive, v);
        } else if (deg == 1) {
          const std::size_t u = first_common(g_.row(v), alive);
          take(alive, chosen, u, cur);
          clear(alive, v);
          changed = true;
        }
      });
      if (changed) continue;
      // Dominance: adjacent u, v with N[u] ⊆ N[v] lets v join the cover.
      for_each_bit(Bits(alive), [&](std::size_t v) {
        if (changed || !test(alive, v)) return;
        const std::uint64_t* rv = g_.row(v);
        for (std::size_t i = 0; i < words && !changed; ++i) {
          for (std::uint64_t w = rv[i] & alive[i]; w != 0 && !changed; w &= w - 1) {
            const std::size_t u = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
            const std::uint64_t* ru = g_.row(u);
            bool dominated = true;
            for (std::size_t j = 0; j < words; ++j) {
              std::uint64_t closed_u = ru[j] & alive[j];
              std::uint64_t closed_v = rv[j] & alive[j];
              if (j == u / 64) closed_u |= std::uint64_t{1} << (u % 64);
              if (j == v / 64) closed_v |= std::uint64_t{1} << (v % 64);
              if ((closed_u & ~closed_v) != 0) {
                dominated = false;
                break;
              }
            }
            if (dominated) {
              take(alive, chosen, v, cur);
              changed = true;
            }
          }
        }
      });
    }
    if (cur >= best_) return;

    std::size_t max_deg = 0;
    std::size_t pivot = 0;
    for_each_bit(alive, [&](std::size_t v) {
      const std::size_t d = popcount_and(g_.row(v), alive);
      if (d > max_deg) {
        max_deg = d;
        pivot = v;
      }
    });
    if (max_deg == 0) {
      record(chosen, cur);
      return;
    }
    if (cur + greedy_matching(alive) >= best_) return;
    if (max_deg <= 2) {
      // Only disjoint cycles remain after the degree-1 rule: ⌈len/2⌉ each.
      Bits rest = alive;
      std::size_t extra = 0;
      for_each_bit(alive, [&](std::size_t s) {
        if (!test(rest, s)) return;
        std::size_t len = 0;
        std::size_t v = s;
        bool take_this = true;
        while (v != static_cast<std::size_t>(-1)) {
          clear(rest, v);
          ++len;
          if (take_this) set(chosen, v);
          take_this = !take_this;
          v = first_common(g_.row(v), rest);
        }
        extra += (len + 1) / 2;
      });
      record(chosen, cur + extra);
      return;
    }

    {
      Bits a = alive;
      Bits c = chosen;
      clear(a, pivot);
      set(c, pivot);
      search(std::move(a), std::move(c), cur + 1);
    }
    {
      Bits a = alive;
      Bits c = chosen;
      clear(a, pivot);
      const std::uint64_t* rp = g_.row(pivot);
      for (std::size_t i = 0; i < words; ++i) {
        c[i] |= rp[i] & alive[i];
        a[i] &= ~rp[i];
      }
      search(std::move(a), std::move(c), cur + max_deg);
    }
  }

  void record(const Bits& chosen, std::size_t size) {
    if (size < best_) {
      best_ = size;
      best_cover_ = chosen;
      found_ = true;
    }
  }

  const LocalGraph& g_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::size_t best_ = 0;
  bool found_ = false;
  Bits best_cover_;
};

std::size_t greedy_cover_size(const LocalGraph& g) {
  Bits alive(g.words(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) set(alive, v);
  std::size_t size = 0;
  for (;;) {
    std::size_t best_deg = 0;
    std::size_t pick = 0;
    for_each_bit(alive, [&](std::size_t v) {
      const std::size_t d = popcount_and(g.row(v), alive);
      if (d > best_deg) {
        best_deg = d;
        pick = v;
      }
    });
    if (best_deg == 0) return size;
    clear(alive, pick);
    ++size;
  }
}

std::vector<std::vector<Vertex>> nontrivial_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : components(g)) {
    if (c.size >= 2) out.push_back(c.vertices.members());
  }
  return out;
}

}  // namespace

CoverResult minimum_vertex_cover(const Graph& g, std::uint64_t node_budget) {
  CoverResult result{0, VertexSet(g.order()), 0};
  const auto comps = nontrivial_components(g);
  std::vector<std::size_t> lower(comps.size());
  std::vector<std::size_t> upper(comps.size());
  std::vector<LocalGraph> locals;
  locals.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    locals.emplace_back(g, comps[i]);
    lower[i] = matching_number(g.induced(VertexSet::of(g.order(), comps[i])));
    upper[i] = greedy_cover_size(locals.back());
  }
  std::size_t i = 0;
  try {
    for (; i < comps.size(); ++i) {
      CoverSearch search(locals[i], result.nodes, node_budget);
      // Greedy upper bound + 1 as cap guarantees an optimum is recorded.
      search.run(upper[i] + 1);
      lower[i] = upper[i] = search.best();
      result.size += search.best();
      for_each_bit(search.best_cover(), [&](std::size_t v) { result.cover.insert(locals[i].global(v)); });
    }
  } catch (const BudgetExhausted&) {
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      lo += lower[j];
      hi += upper[j];
    }
    throw CapabilityError("vertex cover search exceeded node budget " + std::to_string(node_budget),
                          static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi));
  }
  return result;
}

std::size_t vertex_cover_number(const Graph& g, std::uint64_t node_budget) {
  return minimum_vertex_cover(g, node_budget).size;
}

std::optional<bool> vertex_cover_at_most(const Graph& g, std::size_t t, std::uint64_t node_budget) {
  const auto comps = nontrivial_components(g);
  std::vector<std::size_t> lower(comps.size());
  std::size_t lower_total = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    lower[i] = matching_number(g.induced(VertexSet::of(g.order(), comps[i])));
    lower_total += lower[i];
  }
  if (lower_total > t) return false;
  std::uint64_t nodes = 0;
  std::size_t done = 0;
  try {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      lower_total -= lower[i];
      // The rest of the graph needs at least lower_total more vertices.
      const std::size_t cap = t - done - lower_total;
      LocalGraph local(g, comps[i]);
      CoverSearch search(local, nodes, node_budget);
      if (!search.run(cap + 1)) return false;
      done += search.best();
      if (done + lower_total > t) return false;
    }
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
  return true;
}

namespace {

/// Maximum independent set of one connected piece.
class IndependentSearch {
 public:
  IndependentSearch(const LocalGraph& g, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g), nodes_(nodes), budget_(budget) {}

  void run(std::size_t incumbent, std::optional<std::size_t> stop_at) {
    best_ = incumbent;
    stop_at_ = stop_at;
    Bits alive(g_.words(), 0);
    for (std::size_t v = 0; v < g_.order(); ++v) set(alive, v);
    upper_ = clique_cover(alive);
    search(std::move(alive), 0);
  }

  std::size_t best() const { return best_; }
  std::size_t root_upper() const { return upper_; }

  /// Size of a greedy partition of `alive` into cliques; bounds α from above.
  std::size_t clique_cover(const Bits& alive) const {
    Bits rest = alive;
    std::size_t cliques = 0;
    for_each_bit(alive, [&](std::size_t v) {
      if (!test(rest, v)) return;
      ++cliques;
      clear(rest, v);
      Bits cand(g_.words());
      const std::uint64_t* rv = g_.row(v);
      for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = rv[i] & rest[i];
      for (;;) {
        std::size_t u = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < cand.size(); ++i) {
          if (cand[i] != 0) {
            u = i * 64 + static_cast<std::size_t>(std::countr_zero(cand[i]));
            break;
          }
        }
        if (u == static_cast<std::size_t>(-1)) break;
        clear(rest, u);
        const std::uint64_t* ru = g_.row(u);
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] &= ru[i] & rest[i];
      }
    });
    return cliques;
  }

 private:
  bool done() const { return stop_at_ && best_ >= *stop_at_; }

  void search(Bits alive, std::size_t cur) {
    if (done()) return;
    if (++nodes_ > budget_) throw BudgetExhausted{};
    bool changed = true;
    while (changed) {
      changed = false;
      for_each_bit(Bits(alive), [&](std::size_t v) {
        if (!test(alive, v)) return;
        const std::size_t deg = popcount_and(g_.row(v), alive);
        if (deg == 0) {
          clear(alive, v);
          ++cur;
        } else if (deg == 1) {
          const std::size_t u = first_common(g_.row(v), alive);
          clear(alive, v);
          clear(alive, u);
          ++cur;
          changed = true;
        }
      });
    }
    const std::size_t remaining = popcount(alive);
    if (remaining == 0) {
      best_ = std::max(best_, cur);
      return;
    }
    if (cur + remaining <= best_) return;
    if (cur + clique_cover(alive) <= best_) return;

    std::size_t max_deg = 0;
    std::size_t pivot = 0;
    for_each_bit(alive, [&](std::size_t v) {
      const std::size_t d = popcount_and(g_.row(v), alive);
      if (d > max_deg) {
        max_deg = d;
        pivot = v;
      }
    });
    {
      Bits a = alive;
      clear(a, pivot);
      const std::uint64_t* rp = g_.row(pivot);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~rp[i];
      search(std::move(a), cur + 1);
    }
    {
      Bits a = alive;
      clear(a, pivot);
      search(std::move(a), cur);
    }
  }

  const LocalGraph& g_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::size_t best_ = 0;
  std::size_t upper_ = 0;
  std::optional<std::size_t> stop_at_;
};

std::size_t greedy_independent(const LocalGraph& g) {
  Bits alive(g.words(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) set(alive, v);
  std::size_t size = 0;
  for (;;) {
    std::size_t best_deg = static_cast<std::size_t>(-1);
    std::size_t pick = static_cast<std::size_t>(-1);
    for_each_bit(alive, [&](std::size_t v) {
      const std::size_t d = popcount_and(g.row(v), alive);
      if (d < best_deg) {
        best_deg = d;
        pick = v;
      }
    });
    if (pick == static_cast<std::size_t>(-1)) return size;
    ++size;
    clear(alive, pick);
    const std::uint64_t* rp = g.row(pick);
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] &= ~rp[i];
  }
}

}  // namespace

IndependenceBounds independence_number(const Graph& g, std::optional<std::size_t> target,
                                       std::uint64_t node_budget) {
  IndependenceBounds out;
  std::size_t isolated = 0;
  const auto comps = nontrivial_components(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) ++isolated;

  std::vector<LocalGraph> locals;
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
  for (const auto& c : comps) {
    locals.emplace_back(g, c);
    lower.push_back(greedy_independent(locals.back()));
    std::uint64_t scratch = 0;
    IndependentSearch probe(locals.back(), scratch, 0);
    Bits all(locals.back().words(), 0);
    for (std::size_t v = 0; v < locals.back().order(); ++v) set(all, v);
    upper.push_back(std::min(probe.clique_cover(all), c.size() - matching_number(g.induced(VertexSet::of(g.order(), c)))));
  }
  auto totals = [&] {
    std::size_t lo = isolated;
    std::size_t hi = isolated;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      lo += lower[i];
      hi += upper[i];
    }
    out.lower = lo;
    out.upper = hi;
  };
  totals();
  if (target && (out.lower >= *target || out.upper < *target)) return out;

  try {
    for (std::size_t i = 0; i < locals.size(); ++i) {
      if (lower[i] == upper[i]) continue;
      std::optional<std::size_t> stop;
      if (target) {
        // This component reaching `need` settles α >= target.
        std::size_t others = out.lower - lower[i];
        stop = *target > others ? *target - others : 0;
      }
      IndependentSearch search(locals[i], out.nodes, node_budget);
      search.run(lower[i], stop);
      lower[i] = search.best();
      if (!stop || search.best() < *stop) upper[i] = search.best();
      totals();
      if (target && (out.lower >= *target || out.upper < *target)) return out;
    }
  } catch (const BudgetExhausted&) {
    totals();
  }
  return out;
}

}  // namespace egm
