#include "egm/moves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "egm/error.hpp"
#include "egm/random.hpp"

namespace egm {

CaseThresholds CaseThresholds::for_n(std::size_t n) {
  CaseThresholds t;
  t.n = n;
  const double dn = static_cast<double>(n);
  t.frac_small = dn / 2000.0;
  t.y_small = 1e-4 * dn;
  t.log_half = n >= 2 ? std::sqrt(std::log(dn)) : 0.0;
  t.s_cut = t.log_half > 0 ? dn / t.log_half : dn;
  return t;
}

int classify_case(const Decomposition& pi) {
  if (pi.is_canonical()) throw InputError("partition is already of form (a) or (b)");
  const std::size_t n = pi.order();
  const std::size_t a = pi.a1_size();
  const std::size_t b = pi.b_size();
  const std::size_t y = pi.y();
  const CaseThresholds t = CaseThresholds::for_n(n);
  if (2000 * a < n) return 2000 * y >= n ? 1 : 2;
  if (100 * a <= 399 * b) return 3;
  if (10000 * y >= n) return 4;
  if (y > 0) return 5;
  const auto s = static_cast<double>(pi.s_count());
  if (s > t.s_cut || static_cast<double>(b) < t.log_half) return 6;
  return 7;
}

int classify_case(const Graph& g, const Decomposition& pi) {
  require_compatible(g, pi);
  return classify_case(pi);
}

namespace {

bool in_edge_set(const std::vector<std::int32_t>& label, const Edge& e) {
  return label[e.u] == Decomposition::kInS || label[e.v] == Decomposition::kInS || label[e.u] == label[e.v];
}

void finish(const Graph& g, MoveReport& report) {
  const auto before = report.before.labels();
  const auto after = report.after.labels();
  for (const Edge& e : g.edges()) {
    const bool was = in_edge_set(before, e);
    const bool now = in_edge_set(after, e);
    report.size_before += was ? 1 : 0;
    report.size_after += now ? 1 : 0;
    if (now && !was) ++report.gained;
    if (was && !now) ++report.lost;
  }
  if (report.after.r() != report.before.r())
    throw StructuralError("move changed r from " + std::to_string(report.before.r()) + " to " +
                          std::to_string(report.after.r()));
}

MoveReport start(int case_id, const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  require_compatible(g, pi);
  if (pi.is_canonical()) throw InputError("partition is already of form (a) or (b)");
  if (options.check_guard) {
    const int actual = classify_case(pi);
    if (actual != case_id)
      throw InputError("partition falls in case " + std::to_string(actual) + ", not case " + std::to_string(case_id));
  }
  MoveReport report;
  report.case_id = case_id;
  report.thresholds = CaseThresholds::for_n(pi.order());
  report.before = pi;
  return report;
}

/// Neighbours of v carrying `label`.
std::size_t degree_into(const Graph& g, const std::vector<std::int32_t>& label, Vertex v, std::int32_t target) {
  std::size_t c = 0;
  for (Vertex u : g.neighbors(v))
    if (label[u] == target) ++c;
  return c;
}

/// Vertices of `pool` ordered by degree into A₁ (descending), then by label.
std::vector<Vertex> by_degree_into_a1(const Graph& g, const std::vector<std::int32_t>& label, std::vector<Vertex> pool) {
  std::vector<std::pair<std::size_t, Vertex>> keyed;
  keyed.reserve(pool.size());
  for (Vertex v : pool) keyed.push_back({degree_into(g, label, v, 0), v});
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) pool[i] = keyed[i].second;
  return pool;
}

MoveReport merge_into_a1(int case_id, const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  MoveReport report = start(case_id, g, pi, options);
  if (pi.y() == 0) throw StructuralError("no non-singleton block besides A1 to merge");
  const auto label = pi.labels();
  std::vector<Vertex> a1 = pi.block(0);
  std::vector<std::vector<Vertex>> blocks{{}};
  for (std::size_t i = 1; i < pi.d(); ++i) {
    const auto& block = pi.block(i);
    if (block.size() == 1) {
      blocks.push_back(block);
      continue;
    }
    const auto target = static_cast<std::int32_t>(i);
    Vertex x = block.front();
    std::size_t best = static_cast<std::size_t>(-1);
    for (Vertex v : block) {
      const std::size_t d = degree_into(g, label, v, target);
      if (d < best) {
        best = d;
        x = v;
      }
    }
    report.chosen.push_back(x);
    for (Vertex v : block) {
      if (v == x) continue;
      a1.push_back(v);
      report.moved.push_back(v);
    }
    blocks.push_back({x});
  }
  blocks[0] = std::move(a1);
  report.after = Decomposition(pi.order(), pi.s(), std::move(blocks));
  finish(g, report);
  return report;
}

/// A₁ ∪ S ∪ M with M the s vertices of B of largest degree into A₁.
MoveReport absorb_s(int case_id, const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  MoveReport report = start(case_id, g, pi, options);
  const std::size_t s = pi.s_count();
  if (pi.y() != 0) throw StructuralError("case " + std::to_string(case_id) + " needs y = 0");
  if (s == 0) throw InputError("S is empty; partition is already of form (a)");
  if (s > pi.b_size())
    throw StructuralError("s = " + std::to_string(s) + " exceeds |B| = " + std::to_string(pi.b_size()));
  const auto label = pi.labels();
  std::vector<Vertex> b;
  for (std::size_t i = 1; i < pi.d(); ++i) b.push_back(pi.block(i).front());
  const auto ranked = by_degree_into_a1(g, label, b);
  std::vector<Vertex> a1 = pi.block(0);
  a1.insert(a1.end(), pi.s().begin(), pi.s().end());
  std::vector<std::vector<Vertex>> blocks{{}};
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i < s) {
      a1.push_back(ranked[i]);
      report.moved.push_back(ranked[i]);
    } else {
      blocks.push_back({ranked[i]});
    }
  }
  blocks[0] = std::move(a1);
  std::sort(report.moved.begin(), report.moved.end());
  report.after = Decomposition(pi.order(), {}, std::move(blocks));
  finish(g, report);
  return report;
}

}  // namespace

MoveReport apply_case1(const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  return merge_into_a1(1, g, pi, options);
}

MoveReport apply_case4(const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  return merge_into_a1(4, g, pi, options);
}

MoveReport apply_case2(const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  MoveReport report = start(2, g, pi, options);
  const auto label = pi.labels();
  std::size_t x_block = 0;
  Vertex x = 0;
  std::size_t x_deg = 0;
  bool have_x = false;
  for (std::size_t i = 0; i < pi.d(); ++i) {
    if (pi.block(i).size() != 1) continue;
    const Vertex v = pi.block(i).front();
    std::size_t d = 0;
    for (Vertex u : g.neighbors(v))
      if (label[u] != Decomposition::kInS) ++d;
    if (!have_x || d > x_deg) {
      x_deg = d;
      x = v;
      x_block = i;
      have_x = true;
    }
  }
  if (!have_x) throw StructuralError("case 2 needs a singleton block");

  std::size_t j_block = 0;
  Vertex v_best = 0;
  Vertex z_best = 0;
  std::size_t pair_best = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < pi.d(); ++i) {
    const auto& block = pi.block(i);
    if (block.size() == 1) continue;
    std::vector<std::pair<std::size_t, Vertex>> keyed;
    for (Vertex v : block) keyed.push_back({degree_into(g, label, v, static_cast<std::int32_t>(i)), v});
    std::partial_sort(keyed.begin(), keyed.begin() + 2, keyed.end());
    const std::size_t sum = keyed[0].first + keyed[1].first;
    if (sum < pair_best) {
      pair_best = sum;
      j_block = i;
      v_best = keyed[0].second;
      z_best = keyed[1].second;
    }
  }
  if (pair_best == static_cast<std::size_t>(-1)) throw StructuralError("case 2 needs a non-singleton block");

  std::vector<Vertex> s = pi.s();
  s.push_back(x);
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t i = 0; i < pi.d(); ++i) {
    if (i == x_block) continue;
    if (i == j_block) {
      std::vector<Vertex> rest;
      for (Vertex v : pi.block(i))
        if (v != v_best && v != z_best) rest.push_back(v);
      blocks.push_back(std::move(rest));
      blocks.push_back({v_best});
      blocks.push_back({z_best});
      continue;
    }
    blocks.push_back(pi.block(i));
  }
  report.chosen = {x, v_best, z_best};
  report.moved = {x, v_best, z_best};
  report.after = Decomposition(pi.order(), std::move(s), std::move(blocks));
  finish(g, report);
  return report;
}

MoveReport apply_case3(const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  MoveReport report = start(3, g, pi, options);
  std::vector<Vertex> a1 = pi.block(0);
  Rng rng(options.seed);
  rng.shuffle(std::span<Vertex>(a1));
  const std::size_t half = a1.size() / 2;
  std::vector<Vertex> s = pi.s();
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t i = 0; i < a1.size(); ++i) {
    if (i < half) {
      s.push_back(a1[i]);
      report.moved.push_back(a1[i]);
    } else {
      blocks.push_back({a1[i]});
    }
  }
  for (std::size_t i = 1; i < pi.d(); ++i) blocks.push_back(pi.block(i));
  std::sort(report.moved.begin(), report.moved.end());
  report.after = Decomposition(pi.order(), std::move(s), std::move(blocks));
  finish(g, report);
  return report;
}

MoveReport apply_case5(const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  MoveReport report = start(5, g, pi, options);
  const std::size_t y = pi.y();
  if (y == 0) throw StructuralError("case 5 needs y > 0");
  const auto label = pi.labels();
  const auto ranked = by_degree_into_a1(g, label, pi.b_set().members());
  std::vector<Vertex> a1 = pi.block(0);
  std::vector<std::vector<Vertex>> blocks{{}};
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i < y) {
      a1.push_back(ranked[i]);
      report.moved.push_back(ranked[i]);
    } else {
      blocks.push_back({ranked[i]});
    }
  }
  blocks[0] = std::move(a1);
  std::sort(report.moved.begin(), report.moved.end());
  report.after = Decomposition(pi.order(), pi.s(), std::move(blocks));
  finish(g, report);
  return report;
}

MoveReport apply_case6(const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  return absorb_s(6, g, pi, options);
}

MoveReport apply_case7(const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  return absorb_s(7, g, pi, options);
}

MoveReport apply_case(int case_id, const Graph& g, const Decomposition& pi, const MoveOptions& options) {
  switch (case_id) {
    case 1: return apply_case1(g, pi, options);
    case 2: return apply_case2(g, pi, options);
    case 3: return apply_case3(g, pi, options);
    case 4: return apply_case4(g, pi, options);
    case 5: return apply_case5(g, pi, options);
    case 6: return apply_case6(g, pi, options);
    case 7: return apply_case7(g, pi, options);
    default: throw InputError("unknown case " + std::to_string(case_id));
  }
}

const char* to_string(ImproveStop stop) {
  switch (stop) {
    case ImproveStop::kCanonical: return "canonical";
    case ImproveStop::kNoImprovement: return "no-improvement";
    case ImproveStop::kStepLimit: return "step-limit";
    case ImproveStop::kStuck: return "stuck";
  }
  return "unknown";
}

ImproveResult improve(const Graph& g, const Decomposition& pi, std::size_t max_steps, std::uint64_t seed) {
  require_compatible(g, pi);
  ImproveResult out;
  out.final_partition = pi;
  for (std::size_t step = 0;; ++step) {
    if (out.final_partition.is_canonical()) {
      out.stop = ImproveStop::kCanonical;
      return out;
    }
    if (step == max_steps) {
      out.stop = ImproveStop::kStepLimit;
      return out;
    }
    const int case_id = classify_case(out.final_partition);
    MoveReport report;
    try {
      report = apply_case(case_id, g, out.final_partition, {true, derive_seed(seed, step)});
    } catch (const StructuralError& e) {
      out.stop = ImproveStop::kStuck;
      out.detail = e.what();
      return out;
    }
    const bool better = report.improved();
    out.trace.push_back(std::move(report));
    if (!better) {
      out.stop = ImproveStop::kNoImprovement;
      return out;
    }
    out.final_partition = out.trace.back().after;
    ++out.accepted;
  }
}

Decomposition random_partition(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (2 * k > n) throw InputError("k = " + std::to_string(k) + " needs 2k <= n = " + std::to_string(n));
  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
  rng.shuffle(std::span<Vertex>(order));
  // With n = 2k an all-block partition cannot reach r = 0.
  const std::size_t s_min = (k > 0 && 2 * k == n) ? 1 : 0;
  const std::size_t s = s_min + static_cast<std::size_t>(rng.below(k - s_min + 1));
  std::vector<Vertex> s_part(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s));
  std::vector<std::vector<Vertex>> blocks;
  std::size_t next = s;
  std::size_t excess = k - s;
  while (excess > 0) {
    const std::size_t left = n - next;
    const std::size_t j = left >= 2 * excess + 2 ? 1 + static_cast<std::size_t>(rng.below(excess)) : excess;
    blocks.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(next),
                        order.begin() + static_cast<std::ptrdiff_t>(next + 2 * j + 1));
    next += 2 * j + 1;
    excess -= j;
  }
  for (; next < n; ++next) blocks.push_back({order[next]});
  return Decomposition(n, std::move(s_part), std::move(blocks));
}

}  // namespace egm
