#include "egm/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "egm/error.hpp"
#include "egm/matching.hpp"
#include "egm/moves.hpp"
#include "egm/random.hpp"

namespace egm {

namespace {

double binomial_estimate(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return std::exp(std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                  std::lgamma(static_cast<double>(n - k) + 1));
}

/// Lexicographic k-subset enumeration maximising `score`, keeping the first
/// (lexicographically least) maximiser.
template <typename Gain>
std::pair<std::vector<Vertex>, std::size_t> enumerate_best(std::size_t n, std::size_t size, Gain&& gain) {
  std::vector<Vertex> chosen;
  std::vector<Vertex> best;
  std::size_t best_value = 0;
  bool have = false;
  std::function<void(Vertex, std::size_t)> rec = [&](Vertex next, std::size_t value) {
    if (chosen.size() == size) {
      if (!have || value > best_value) {
        best = chosen;
        best_value = value;
        have = true;
      }
      return;
    }
    for (Vertex v = next; v + (size - chosen.size()) <= n; ++v) {
      const std::size_t add = gain(chosen, v);
      chosen.push_back(v);
      rec(v + 1, value + add);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return {best, best_value};
}

std::size_t adjacent_count(const Graph& g, const std::vector<Vertex>& chosen, Vertex v) {
  std::size_t c = 0;
  for (Vertex u : chosen)
    if (g.adjacent(u, v)) ++c;
  return c;
}

FormResult heuristic_form1(const Graph& g, std::size_t w) {
  const std::size_t n = g.order();
  std::vector<std::size_t> dw(n);
  std::vector<char> in(n, 1);
  std::set<std::pair<std::size_t, Vertex>> order;
  for (Vertex v = 0; v < n; ++v) {
    dw[v] = g.degree(v);
    order.insert({dw[v], v});
  }
  // Peel minimum-degree vertices.
  for (std::size_t left = n; left > w; --left) {
    const Vertex v = order.begin()->second;
    order.erase(order.begin());
    in[v] = 0;
    for (Vertex u : g.neighbors(v)) {
      if (in[u] != 0) {
        order.erase({dw[u], u});
        --dw[u];
        order.insert({dw[u], u});
      } else {
        --dw[u];
      }
    }
  }
  // dw[v] for v outside W counts its neighbours inside W only after the
  // peel; recompute to be safe.
  for (Vertex v = 0; v < n; ++v) {
    std::size_t c = 0;
    for (Vertex u : g.neighbors(v))
      if (in[u] != 0) ++c;
    dw[v] = c;
  }
  // Single best-swap local search.
  const std::size_t rounds = std::min<std::size_t>(n, 1000);
  for (std::size_t round = 0; round < rounds && w < n && w > 0; ++round) {
    Vertex u_best = 0;
    Vertex v_best = 0;
    std::size_t u_deg = static_cast<std::size_t>(-1);
    std::size_t v_deg = 0;
    bool have_v = false;
    for (Vertex v = 0; v < n; ++v) {
      if (in[v] != 0) {
        if (dw[v] < u_deg) {
          u_deg = dw[v];
          u_best = v;
        }
      } else if (!have_v || dw[v] > v_deg) {
        v_deg = dw[v];
        v_best = v;
        have_v = true;
      }
    }
    const std::size_t link = g.adjacent(u_best, v_best) ? 1 : 0;
    if (v_deg <= u_deg + link) break;
    in[u_best] = 0;
    for (Vertex x : g.neighbors(u_best)) --dw[x];
    in[v_best] = 1;
    for (Vertex x : g.neighbors(v_best)) ++dw[x];
  }
  FormResult out{VertexSet(n), 0, false};
  std::size_t twice = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v] != 0) {
      out.set.insert(v);
      twice += dw[v];
    }
  }
  out.size = twice / 2;
  return out;
}

FormResult heuristic_form2(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<std::size_t> covered_at(n, 0);  // edges at v already covered
  std::vector<char> in(n, 0);
  std::priority_queue<std::pair<std::size_t, std::int64_t>> heap;  // (gain, -v)
  for (Vertex v = 0; v < n; ++v) heap.push({g.degree(v), -static_cast<std::int64_t>(v)});
  FormResult out{VertexSet(n), 0, false};
  while (out.set.count() < k && !heap.empty()) {
    auto [gain, neg] = heap.top();
    heap.pop();
    const Vertex v = static_cast<Vertex>(-neg);
    if (in[v] != 0) continue;
    const std::size_t current = g.degree(v) - covered_at[v];
    if (current != gain) {
      heap.push({current, neg});
      continue;
    }
    in[v] = 1;
    out.set.insert(v);
    out.size += current;
    for (Vertex u : g.neighbors(v)) ++covered_at[u];
  }
  return out;
}

}  // namespace

FormResult best_form1(const Graph& g, std::size_t k, std::uint64_t enumeration_budget) {
  const std::size_t n = g.order();
  const std::size_t w = 2 * k + 1;
  if (w > n) throw InputError("2k+1 = " + std::to_string(w) + " exceeds n = " + std::to_string(n));
  if (binomial_estimate(n, w) > static_cast<double>(enumeration_budget)) return heuristic_form1(g, w);
  auto [best, value] =
      enumerate_best(n, w, [&](const std::vector<Vertex>& chosen, Vertex v) { return adjacent_count(g, chosen, v); });
  return {VertexSet::of(n, best), value, true};
}

FormResult best_form2(const Graph& g, std::size_t k, std::uint64_t enumeration_budget) {
  const std::size_t n = g.order();
  if (k > n) throw InputError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  if (binomial_estimate(n, k) > static_cast<double>(enumeration_budget)) return heuristic_form2(g, k);
  auto [best, value] = enumerate_best(n, k, [&](const std::vector<Vertex>& chosen, Vertex v) {
    return g.degree(v) - adjacent_count(g, chosen, v);
  });
  return {VertexSet::of(n, best), value, true};
}

std::vector<FormWitness> classify_forms(const Graph& g, const EdgeList& h, std::size_t k) {
  const std::size_t n = g.order();
  if (n > 64) throw CapabilityError("form classification needs n <= 64, got n = " + std::to_string(n));
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::vector<std::uint64_t> hadj(n, 0);
  std::uint64_t supp = 0;
  for (const Edge& e : h) {
    if (!g.adjacent(e.u, e.v)) throw InputError("edge set is not a subgraph of the host graph");
    hadj[e.u] |= std::uint64_t{1} << e.v;
    hadj[e.v] |= std::uint64_t{1} << e.u;
    supp |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
  }
  std::vector<FormWitness> out;

  // Form1: supp(h) ⊆ W, E_G(supp) = h, padded by vertices with no edges to W.
  const std::size_t w = std::min(2 * k + 1, n);
  const auto supp_count = static_cast<std::size_t>(std::popcount(supp));
  bool supp_closed = true;
  for (std::size_t v = 0; v < n && supp_closed; ++v)
    if (((supp >> v) & 1U) != 0 && (adj[v] & supp) != hadj[v]) supp_closed = false;
  if (supp_closed && supp_count <= w) {
    std::uint64_t candidates = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (((supp >> v) & 1U) == 0 && (adj[v] & supp) == 0) candidates |= std::uint64_t{1} << v;
    }
    std::uint64_t pad = 0;
    std::function<bool(std::uint64_t, std::size_t)> grow = [&](std::uint64_t cand, std::size_t need) -> bool {
      if (need == 0) return true;
      if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
      for (std::uint64_t rest = cand; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::uint64_t bit = std::uint64_t{1} << v;
        pad |= bit;
        const std::uint64_t later = (rest & ~bit) & ~adj[static_cast<std::size_t>(v)];
        if (grow(later, need - 1)) return true;
        pad &= ~bit;
      }
      return false;
    };
    if (grow(candidates, w - supp_count)) {
      VertexSet ws(n);
      for (std::uint64_t m = supp | pad; m != 0; m &= m - 1) ws.insert(static_cast<Vertex>(std::countr_zero(m)));
      out.push_back({FormKind::kForm1, std::move(ws)});
    }
  }

  // Form2: k vertices whose G-edges all lie in h and which cover h.
  std::uint64_t full = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v] == hadj[v]) full |= std::uint64_t{1} << v;
  if (static_cast<std::size_t>(std::popcount(full)) >= k) {
    std::uint64_t chosen = 0;
    std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t need) -> bool {
      // Every h-edge with both ends below `from` must already be covered.
      for (std::size_t v = 0; v < from; ++v) {
        if (((chosen >> v) & 1U) != 0) continue;
        const std::uint64_t below = from >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << from) - 1;
        if ((hadj[v] & below & ~chosen) != 0) return false;
      }
      if (need == 0) {
        for (std::size_t v = 0; v < n; ++v)
          if (((chosen >> v) & 1U) == 0 && (hadj[v] & ~chosen) != 0) return false;
        return true;
      }
      for (std::size_t v = from; v < n; ++v) {
        if (((full >> v) & 1U) == 0) continue;
        chosen |= std::uint64_t{1} << v;
        if (pick(v + 1, need - 1)) return true;
        chosen &= ~(std::uint64_t{1} << v);
      }
      return false;
    };
    if (pick(0, k)) {
      VertexSet ts(n);
      for (std::uint64_t m = chosen; m != 0; m &= m - 1) ts.insert(static_cast<Vertex>(std::countr_zero(m)));
      out.push_back({FormKind::kForm2, std::move(ts)});
    }
  }
  return out;
}

namespace {

using Mask = unsigned __int128;

struct ExactSearch {
  std::size_t n = 0;
  std::vector<std::uint32_t> adj;
  std::vector<std::vector<int>> eid;
  std::vector<Mask> incident;
  std::size_t best = 0;
  std::set<std::pair<std::uint64_t, std::uint64_t>> ties;

  explicit ExactSearch(const Graph& g) : n(g.order()), adj(n, 0), eid(n, std::vector<int>(n, -1)), incident(n, 0) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      adj[e.u] |= 1U << e.v;
      adj[e.v] |= 1U << e.u;
      eid[e.u][e.v] = eid[e.v][e.u] = static_cast<int>(i);
      incident[e.u] |= Mask{1} << i;
      incident[e.v] |= Mask{1} << i;
    }
  }

  static std::size_t popcount(Mask m) {
    return static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(m)) +
                                    std::popcount(static_cast<std::uint64_t>(m >> 64)));
  }

  std::size_t edges_within(std::uint32_t set) const {
    std::size_t twice = 0;
    for (std::uint32_t m = set; m != 0; m &= m - 1) twice += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(m)] & set));
    return twice / 2;
  }

  Mask block_mask(std::uint32_t block) const {
    Mask out = 0;
    for (std::uint32_t m = block; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      for (std::uint32_t w = adj[static_cast<std::size_t>(u)] & block & ~((2U << u) - 1); w != 0; w &= w - 1)
        out |= Mask{1} << eid[static_cast<std::size_t>(u)][static_cast<std::size_t>(std::countr_zero(w))];
    }
    return out;
  }

  void record(std::size_t value, Mask mask) {
    if (value < best) return;
    if (value > best) {
      best = value;
      ties.clear();
    }
    ties.insert({static_cast<std::uint64_t>(mask >> 64), static_cast<std::uint64_t>(mask)});
  }

  /// Odd blocks of size >= 3 inside `avail` with total half-excess `excess`;
  /// the rest of `avail` stays as singletons.
  void blocks(std::uint32_t avail, std::size_t excess, std::size_t base, Mask mask) {
    if (excess == 0) {
      record(base, mask);
      return;
    }
    const auto avail_count = static_cast<std::size_t>(std::popcount(avail));
    if (avail_count < 2 * excess + 1) return;
    const std::size_t cap = std::min(edges_within(avail), (2 * excess + 1) * (2 * excess) / 2);
    if (base + cap < best) return;
    const int v = std::countr_zero(avail);
    const std::uint32_t vbit = 1U << v;
    const std::uint32_t rest = avail & ~vbit;
    // v as a singleton.
    blocks(rest, excess, base, mask);
    // v as the least member of a block of size 2j+1.
    std::vector<int> members;
    for (std::uint32_t m = rest; m != 0; m &= m - 1) members.push_back(std::countr_zero(m));
    for (std::size_t j = 1; j <= excess && 2 * j <= members.size(); ++j) {
      const std::size_t pick = 2 * j;
      std::vector<std::size_t> idx(pick);
      for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
      for (;;) {
        std::uint32_t block = vbit;
        for (std::size_t i : idx) block |= 1U << members[i];
        const Mask bm = block_mask(block);
        blocks(avail & ~block, excess - j, base + popcount(bm), mask | bm);
        // Next combination.
        std::size_t i = pick;
        while (i > 0 && idx[i - 1] == members.size() - pick + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t t = i; t < pick; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
  }

  void run(std::size_t k) {
    const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
    for (std::size_t s = 0; s <= k; ++s) {
      // d = n − 2k + s blocks must fit in the n − s remaining vertices.
      if (n - 2 * k + s > n - s) break;
      if (s == 0) {
        blocks(all, k, 0, 0);
        continue;
      }
      std::uint32_t set = (1U << s) - 1;
      while (set <= all) {
        Mask meet = 0;
        for (std::uint32_t m = set; m != 0; m &= m - 1) meet |= incident[static_cast<std::size_t>(std::countr_zero(m))];
        blocks(all & ~set, k - s, popcount(meet), meet);
        const std::uint32_t c = set & (0U - set);
        const std::uint32_t r = set + c;
        if (r == 0 || r > all) break;
        set = (((r ^ set) >> 2) / c) | r;
      }
    }
  }
};

EdgeList mask_edges(const Graph& g, std::uint64_t hi, std::uint64_t lo) {
  EdgeList out;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool bit = i < 64 ? ((lo >> i) & 1U) != 0 : ((hi >> (i - 64)) & 1U) != 0;
    if (bit) out.push_back(edges[i]);
  }
  return out;
}

ExtremalResult extremal_heuristic(const Graph& g, std::size_t k, const ExtremalOptions& options) {
  const std::size_t n = g.order();
  ExtremalResult out;
  out.k = k;
  out.exact = false;

  // Form2 always fits; Form1 only when 2k+1 <= n.
  const FormResult f2 = best_form2(g, k, options.enumeration_budget);
  std::vector<Vertex> t = f2.set.members();
  std::vector<std::vector<Vertex>> singles;
  for (Vertex v = 0; v < n; ++v)
    if (!f2.set.contains(v)) singles.push_back({v});
  Decomposition best_pi(n, t, singles);
  std::size_t best_size = decomposition_size(g, best_pi);
  if (2 * k + 1 <= n) {
    const FormResult f1 = best_form1(g, k, options.enumeration_budget);
    std::vector<std::vector<Vertex>> blocks{f1.set.members()};
    for (Vertex v = 0; v < n; ++v)
      if (!f1.set.contains(v)) blocks.push_back({v});
    Decomposition pi(n, {}, blocks);
    const std::size_t size = decomposition_size(g, pi);
    if (size > best_size) {
      best_size = size;
      best_pi = std::move(pi);
    }
  }
  for (std::size_t i = 0; i < options.heuristic_restarts; ++i) {
    const std::uint64_t seed = derive_seed(options.seed, i);
    const Decomposition start = random_partition(n, k, seed);
    const ImproveResult res = improve(g, start, options.heuristic_steps, seed);
    const std::size_t size = decomposition_size(g, res.final_partition);
    if (size > best_size) {
      best_size = size;
      best_pi = res.final_partition;
    }
  }
  out.size = best_size;
  Maximizer m;
  m.edges = edge_set(g, best_pi);
  if (best_pi.is_form_a() && best_pi.a1_size() == std::min(2 * k + 1, n))
    m.forms.push_back({FormKind::kForm1, best_pi.block_set(0)});
  if (best_pi.is_form_b() && best_pi.s_count() == k) m.forms.push_back({FormKind::kForm2, best_pi.s_set()});
  out.maximizers.push_back(std::move(m));
  out.partition = std::move(best_pi);
  return out;
}

}  // namespace

ExtremalResult extremal(const Graph& g, std::size_t k, const ExtremalOptions& options) {
  const std::size_t n = g.order();
  const std::size_t nu = matching_number(g);
  if (k > nu) throw InputError("k = " + std::to_string(k) + " exceeds the matching number " + std::to_string(nu));
  if (options.mode == ExtremalMode::kHeuristic) return extremal_heuristic(g, k, options);

  const std::size_t limit = std::min(options.n_exact, kMaxExactExtremal);
  if (n > limit)
    throw CapabilityError("exact extremal search supports n <= " + std::to_string(limit) + ", got n = " +
                          std::to_string(n));
  ExtremalResult out;
  out.k = k;
  if (options.nu_shortcut && k == nu) {
    // Any proper subgraph can gain an edge without exceeding ν(G).
    out.size = g.size();
    out.maximizers.push_back({g.edges(), classify_forms(g, g.edges(), k)});
    return out;
  }
  ExactSearch search(g);
  search.best = best_form2(g, k).size;
  if (2 * k + 1 <= n) search.best = std::max(search.best, best_form1(g, k).size);
  search.run(k);
  out.size = search.best;
  for (const auto& [hi, lo] : search.ties) {
    EdgeList edges = mask_edges(g, hi, lo);
    if (matching_number(Graph(n, edges)) != k) continue;
    auto forms = classify_forms(g, edges, k);
    out.maximizers.push_back({std::move(edges), std::move(forms)});
  }
  std::sort(out.maximizers.begin(), out.maximizers.end(),
            [](const Maximizer& a, const Maximizer& b) { return a.edges < b.edges; });
  return out;
}

EgVerdict eg_check(const Graph& g, std::size_t k, const ExtremalOptions& options) {
  ExtremalOptions exact = options;
  exact.mode = ExtremalMode::kExact;
  const ExtremalResult res = extremal(g, k, exact);
  EgVerdict out;
  out.k = k;
  out.size = res.size;
  out.maximizer_count = res.maximizers.size();
  for (const auto& m : res.maximizers) {
    out.forms.push_back(m.forms);
    if (!m.canonical() && !out.counterexample) {
      out.holds = false;
      out.counterexample = m.edges;
    }
  }
  return out;
}

std::vector<EgVerdict> eg_check_all(const Graph& g, const ExtremalOptions& options) {
  std::vector<EgVerdict> out;
  const std::size_t nu = matching_number(g);
  for (std::size_t k = 0; k <= nu; ++k) out.push_back(eg_check(g, k, options));
  return out;
}

}  // namespace egm
