#include "egm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "egm/error.hpp"
#include "egm/extremal.hpp"
#include "egm/matching.hpp"
#include "egm/moves.hpp"
#include "egm/random.hpp"

namespace egm {

const char* to_string(Ternary t) {
  switch (t) {
    case Ternary::kYes: return "yes";
    case Ternary::kNo: return "no";
    case Ternary::kUnknown: return "unknown";
  }
  return "unknown";
}

P3Count count_isolated_p3(const Graph& g) {
  P3Count out;
  std::vector<std::pair<Vertex, P3>> found;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto nb = g.neighbors(v);
    const Vertex a = nb[0];
    const Vertex b = nb[1];
    if (g.degree(a) == 1 && g.degree(b) == 1) found.push_back({std::min({a, v, b}), P3{a, v, b}});
  }
  std::sort(found.begin(), found.end());
  out.count = found.size();
  for (std::size_t i = 0; i < found.size() && i < 2; ++i) out.witnesses.push_back(found[i].second);
  return out;
}

EmptyHalf has_empty_half(const Graph& g, std::uint64_t node_budget) {
  EmptyHalf out;
  const std::size_t target = (g.order() + 1) / 2;
  out.bounds = independence_number(g, target, node_budget);
  if (out.bounds.lower >= target) {
    out.verdict = Ternary::kYes;
  } else if (out.bounds.upper < target) {
    out.verdict = Ternary::kNo;
  } else {
    out.verdict = Ternary::kUnknown;
    out.reason = "independence search hit node budget " + std::to_string(node_budget) + " with alpha in [" +
                 std::to_string(out.bounds.lower) + " " + std::to_string(out.bounds.upper) + "]";
  }
  return out;
}

EgFailure eg_fails_at_nu(const Graph& g, std::uint64_t cover_budget) {
  EgFailure out;
  out.nu = matching_number(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) ++out.support;
  out.support_fits = out.support <= 2 * out.nu + 1;
  const auto at_most = vertex_cover_at_most(g, out.nu, cover_budget);
  if (!at_most) {
    out.tau_eq_nu = Ternary::kUnknown;
  } else {
    out.tau_eq_nu = *at_most ? Ternary::kYes : Ternary::kNo;
  }
  if (out.support_fits) {
    out.fails = Ternary::kNo;
    out.reason = "all edges lie within 2nu+1 vertices";
  } else if (out.tau_eq_nu == Ternary::kYes) {
    out.fails = Ternary::kNo;
    out.reason = "tau = nu";
  } else if (out.tau_eq_nu == Ternary::kNo) {
    out.fails = Ternary::kYes;
    out.reason = "support " + std::to_string(out.support) + " > 2nu+1 and tau > nu";
  } else {
    out.fails = Ternary::kUnknown;
    out.reason = "vertex cover search hit node budget " + std::to_string(cover_budget);
  }
  return out;
}

FailureCertificate certify(const Graph& g, std::uint64_t independence_budget, std::uint64_t cover_budget) {
  FailureCertificate out;
  const P3Count p3 = count_isolated_p3(g);
  out.p3_pair = p3.witnesses;
  const EmptyHalf half = has_empty_half(g, independence_budget);
  out.empty_half = half.verdict;
  out.present = p3.count >= 2 && half.verdict == Ternary::kNo;
  out.check = eg_fails_at_nu(g, cover_budget);
  if (p3.count < 2) {
    out.reason = "fewer than two isolated P3 components";
  } else if (half.verdict == Ternary::kYes) {
    out.reason = "some half of the vertices spans no edge";
  } else if (half.verdict == Ternary::kUnknown) {
    out.reason = half.reason;
  } else {
    out.reason = "two isolated P3 components and every half spans an edge";
  }
  return out;
}

const char* to_string(DensityEvent e) {
  switch (e) {
    case DensityEvent::kDenseSet: return "dense-set";
    case DensityEvent::kLargeSet: return "large-set";
    case DensityEvent::kSparseSet: return "sparse-set";
    case DensityEvent::kBipartite: return "bipartite";
  }
  return "?";
}

bool density_event_holds(const Graph& g, DensityEvent event, const VertexSet& x, const VertexSet* z, double epsilon,
                         double p) {
  const auto size = static_cast<double>(x.count());
  const double pairs = size * (size - 1) / 2;
  switch (event) {
    case DensityEvent::kDenseSet: {
      const auto e = static_cast<double>(edges_within(g, x));
      return e >= (1 - epsilon) * pairs * p && e <= (1 + epsilon) * pairs * p;
    }
    case DensityEvent::kLargeSet:
      return static_cast<double>(edges_within(g, x)) <= 300.0 * pairs * p;
    case DensityEvent::kSparseSet:
      return static_cast<double>(edges_within(g, x)) <= size * std::log(static_cast<double>(g.order())) / 3.0;
    case DensityEvent::kBipartite: {
      if (z == nullptr) throw InputError("bipartite event needs a second set");
      const auto e = static_cast<double>(edges_between(g, x, *z));
      const double expect = size * static_cast<double>(z->count()) * p;
      return e >= (1 - epsilon) * expect && e <= (1 + epsilon) * expect;
    }
  }
  return true;
}

namespace {

/// Random subset of size w (partial Fisher–Yates over `pool`).
VertexSet sample_set(std::vector<Vertex>& pool, std::size_t w, Rng& rng, std::size_t universe) {
  VertexSet out(universe);
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

}  // namespace

DensityAudit density_audit(const Graph& g, double epsilon, double p, std::size_t samples, std::uint64_t seed) {
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("epsilon must lie in (0, 1)");
  if (!(p > 0 && p <= 1)) throw DomainError("reference p must lie in (0, 1]");
  DensityAudit out;
  out.epsilon = epsilon;
  out.p = p;
  const std::size_t n = g.order();
  const auto nd = static_cast<double>(n);
  const double ln_n = n >= 2 ? std::log(nd) : 0.0;
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  Rng rng(seed);

  auto range_line = [&](DensityEvent event, std::int64_t lo, std::int64_t hi) {
    AuditLine line{event};
    lo = std::max<std::int64_t>(lo, 1);
    hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(n));
    if (lo > hi) {
      line.skipped = true;
      return line;
    }
    for (std::size_t i = 0; i < samples; ++i) {
      const auto w = static_cast<std::size_t>(rng.between(lo, hi));
      const VertexSet x = sample_set(pool, w, rng, n);
      ++line.samples;
      if (!density_event_holds(g, event, x, nullptr, epsilon, p)) ++line.violations;
    }
    return line;
  };
  const auto cut = ln_n / (150 * p);
  out.lines.push_back(range_line(DensityEvent::kDenseSet, static_cast<std::int64_t>(std::floor(epsilon * nd)) + 1,
                                 static_cast<std::int64_t>(n)));
  out.lines.push_back(
      range_line(DensityEvent::kLargeSet, static_cast<std::int64_t>(std::floor(cut)) + 1, static_cast<std::int64_t>(n)));
  out.lines.push_back(range_line(DensityEvent::kSparseSet, 1, static_cast<std::int64_t>(std::floor(cut))));

  AuditLine bip{DensityEvent::kBipartite};
  const auto y_lo = static_cast<std::int64_t>(std::floor(epsilon * nd)) + 1;
  const auto z_lo = ln_n > 0 ? static_cast<std::int64_t>(std::floor(nd / std::sqrt(ln_n))) + 1
                             : static_cast<std::int64_t>(n) + 1;
  if (y_lo + z_lo > static_cast<std::int64_t>(n)) {
    bip.skipped = true;
  } else {
    for (std::size_t i = 0; i < samples; ++i) {
      const std::int64_t y = rng.between(y_lo, static_cast<std::int64_t>(n) - z_lo);
      const std::int64_t z = rng.between(z_lo, static_cast<std::int64_t>(n) - y);
      // First y shuffled vertices form Y, the next z form Z.
      for (std::size_t t = 0; t < static_cast<std::size_t>(y + z); ++t) {
        const std::size_t j = t + static_cast<std::size_t>(rng.below(n - t));
        std::swap(pool[t], pool[j]);
      }
      VertexSet ys(n);
      VertexSet zs(n);
      for (std::int64_t t = 0; t < y; ++t) ys.insert(pool[static_cast<std::size_t>(t)]);
      for (std::int64_t t = y; t < y + z; ++t) zs.insert(pool[static_cast<std::size_t>(t)]);
      ++bip.samples;
      if (!density_event_holds(g, DensityEvent::kBipartite, ys, &zs, epsilon, p)) ++bip.violations;
    }
  }
  out.lines.push_back(bip);
  return out;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::kDense: return "dense";
    case Regime::kForest: return "forest";
    case Regime::kMiddle: return "middle";
    case Regime::kCustom: return "custom";
  }
  return "?";
}

Regime parse_regime(const std::string& text) {
  for (Regime r : {Regime::kDense, Regime::kForest, Regime::kMiddle, Regime::kCustom})
    if (text == to_string(r)) return r;
  throw InputError("unknown regime '" + text + "'");
}

ResolvedP resolve_p(const RegimeSpec& spec) {
  if (spec.n < 1) throw InputError("n must be at least 1");
  ResolvedP out;
  const auto nd = static_cast<double>(spec.n);
  switch (spec.regime) {
    case Regime::kDense:
      out.p = 8.0 * std::log(nd) / nd;
      if (out.p > 1.0) {
        out.p = 1.0;
        out.clamped = true;
      }
      break;
    case Regime::kForest:
      if (!(spec.forest_c >= 0)) throw InputError("forest constant must be non-negative");
      out.p = std::min(1.0, spec.forest_c / nd);
      break;
    case Regime::kMiddle:
    case Regime::kCustom:
      if (!spec.p) throw InputError(std::string(to_string(spec.regime)) + " regime needs an explicit p");
      out.p = *spec.p;
      break;
  }
  if (!(out.p >= 0.0 && out.p <= 1.0)) throw InputError("p must lie in [0, 1], got " + std::to_string(out.p));
  if (spec.regime == Regime::kMiddle) {
    const double lower = 4.0 * std::log(2.0 * std::exp(1.0)) / nd;
    const double upper = std::log(nd) / (3.0 * nd);
    out.middle_interval_empty = !(lower < upper);
    out.middle_feasible = lower < out.p && out.p < upper;
  }
  return out;
}

namespace {

void add_note(std::string& notes, const std::string& note) {
  if (!notes.empty()) notes += "; ";
  notes += note;
}

}  // namespace

TrialRecord run_trial(const RegimeSpec& spec, const ResolvedP& p, std::size_t index) {
  TrialRecord rec;
  rec.trial = index;
  rec.seed = derive_seed(spec.master_seed, index);
  rec.n = spec.n;
  rec.p = p.p;
  const Graph g = gen_gnp({spec.n, p.p, rec.seed});
  rec.m = g.size();
  rec.nu = matching_number(g);
  rec.is_forest = is_forest(g);
  rec.p3_count = count_isolated_p3(g).count;

  if (spec.checks.empty_half) {
    const EmptyHalf half = has_empty_half(g, spec.independence_budget);
    rec.empty_half = half.verdict;
    if (half.verdict == Ternary::kUnknown) add_note(rec.notes, "empty_half: " + half.reason);
  }
  if (spec.checks.tau_eq_nu) {
    const auto at_most = vertex_cover_at_most(g, rec.nu, spec.cover_budget);
    if (!at_most) {
      add_note(rec.notes, "tau_eq_nu: vertex cover search hit node budget " + std::to_string(spec.cover_budget));
    } else {
      rec.tau_eq_nu = *at_most ? Ternary::kYes : Ternary::kNo;
    }
  }
  if (spec.checks.eg_all) {
    if (spec.n <= spec.checks.eg_cutoff) {
      ExtremalOptions options;
      options.n_exact = spec.checks.eg_cutoff;
      bool holds = true;
      for (const auto& verdict : eg_check_all(g, options)) holds = holds && verdict.holds;
      rec.eg_all = holds ? Ternary::kYes : Ternary::kNo;
    } else {
      add_note(rec.notes, "eg_all: n above exact cutoff " + std::to_string(spec.checks.eg_cutoff));
    }
  }
  if (rec.p3_count >= 2 && rec.empty_half == Ternary::kNo) {
    rec.certificate = true;
    const EgFailure failure = eg_fails_at_nu(g, spec.cover_budget);
    rec.eg_fails_at_nu = failure.fails;
    if (failure.fails != Ternary::kYes) add_note(rec.notes, "certificate: " + failure.reason);
    if (rec.eg_all == Ternary::kYes) add_note(rec.notes, "certificate contradicts exact check");
  }
  if (spec.checks.density_samples > 0 && p.p > 0) {
    const DensityAudit audit =
        density_audit(g, spec.epsilon, p.p, spec.checks.density_samples, derive_seed(rec.seed, 1));
    std::size_t violations = 0;
    for (const auto& line : audit.lines) violations += line.violations;
    rec.density_violations = violations;
  }
  if (spec.checks.moves && rec.nu > 0) {
    const Decomposition start = random_partition(g.order(), rec.nu, derive_seed(rec.seed, 2));
    const ImproveResult res = improve(g, start, 100, derive_seed(rec.seed, 3));
    rec.moves_accepted = res.accepted;
    rec.moves_stop = to_string(res.stop);
  }
  return rec;
}

Rate wilson(std::size_t successes, std::size_t total) {
  Rate r;
  r.successes = successes;
  r.total = total;
  if (total == 0) {
    r.upper = 1;
    return r;
  }
  const double z = 1.959963984540054;
  const auto nt = static_cast<double>(total);
  const double phat = static_cast<double>(successes) / nt;
  const double denom = 1 + z * z / nt;
  const double centre = (phat + z * z / (2 * nt)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / nt + z * z / (4 * nt * nt)) / denom;
  r.rate = phat;
  r.lower = std::max(0.0, centre - half);
  r.upper = std::min(1.0, centre + half);
  return r;
}

TrialRun run_trials(const RegimeSpec& spec) {
  const ResolvedP p = resolve_p(spec);
  TrialRun run;
  run.records.resize(spec.trials);
  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.threads, spec.trials));
  if (workers <= 1) {
    for (std::size_t i = 0; i < spec.trials; ++i) run.records[i] = run_trial(spec, p, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= spec.trials) return;
          try {
            run.records[i] = run_trial(spec, p, i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  TrialSummary& s = run.summary;
  s.regime = spec.regime;
  s.n = spec.n;
  s.p = p;
  s.trials = spec.trials;
  s.master_seed = spec.master_seed;
  s.degenerate = spec.trials == 0;
  std::size_t forest = 0;
  std::size_t pair = 0;
  std::size_t half_yes = 0;
  std::size_t half_known = 0;
  std::size_t tau_yes = 0;
  std::size_t tau_known = 0;
  std::size_t eg_yes = 0;
  std::size_t eg_known = 0;
  for (const auto& r : run.records) {
    forest += r.is_forest ? 1 : 0;
    pair += r.p3_count >= 2 ? 1 : 0;
    if (r.empty_half != Ternary::kUnknown) {
      ++half_known;
      half_yes += r.empty_half == Ternary::kYes ? 1 : 0;
    }
    if (r.tau_eq_nu != Ternary::kUnknown) {
      ++tau_known;
      tau_yes += r.tau_eq_nu == Ternary::kYes ? 1 : 0;
    }
    if (r.eg_all != Ternary::kUnknown) {
      ++eg_known;
      eg_yes += r.eg_all == Ternary::kYes ? 1 : 0;
    }
    if (r.certificate) {
      ++s.certificates;
      if (r.eg_fails_at_nu == Ternary::kYes) ++s.certificates_confirmed;
      if (r.eg_fails_at_nu == Ternary::kNo || r.eg_all == Ternary::kYes) ++s.certificates_contradicted;
    }
  }
  s.forest = wilson(forest, spec.trials);
  s.p3_pair = wilson(pair, spec.trials);
  s.empty_half = wilson(half_yes, half_known);
  s.tau_eq_nu = wilson(tau_yes, tau_known);
  s.eg_all = wilson(eg_yes, eg_known);
  return run;
}

}  // namespace egm
