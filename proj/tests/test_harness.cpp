#include <doctest.h>

#include <cmath>

#include "egm/error.hpp"
#include "egm/extremal.hpp"
#include "egm/harness.hpp"
#include "egm/matching.hpp"
#include "egm/random.hpp"
#include "oracles.hpp"

using namespace egm;

namespace {

Graph with_extra(std::size_t n, EdgeList edges, const EdgeList& extra) {
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(n, edges);
}

const EdgeList kTwoP3{{0, 1}, {1, 2}, {3, 4}, {4, 5}};

}  // namespace

TEST_CASE("count isolated P3") {
  CHECK(count_isolated_p3(Graph::path(3)).count == 1);
  CHECK(count_isolated_p3(Graph::complete(3)).count == 0);
  CHECK(count_isolated_p3(Graph::path(4)).count == 0);
  const Graph g = with_extra(10, kTwoP3, {{6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
  const P3Count c = count_isolated_p3(g);
  CHECK(c.count == 2);
  REQUIRE(c.witnesses.size() == 2);
  CHECK(c.witnesses[0] == P3{0, 1, 2});
  CHECK(c.witnesses[1] == P3{3, 4, 5});
}

TEST_CASE("empty half") {
  CHECK(has_empty_half(Graph(6)).verdict == Ternary::kYes);
  for (std::size_t n = 3; n <= 9; ++n) CHECK(has_empty_half(Graph::complete(n)).verdict == Ternary::kNo);
  CHECK(has_empty_half(Graph::cycle(10)).verdict == Ternary::kYes);
  CHECK(has_empty_half(Graph::cycle(9)).verdict == Ternary::kNo);
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const Graph g = gen_gnp({1 + rng.below(14), rng.uniform01(), rng.next()});
    const bool truth = static_cast<std::size_t>(oracle::independence_number(g)) >= (g.order() + 1) / 2;
    CHECK(has_empty_half(g).verdict == (truth ? Ternary::kYes : Ternary::kNo));
  }
}

TEST_CASE("EG at nu examples") {
  const EgFailure star = eg_fails_at_nu(Graph::star(3));
  CHECK(star.fails == Ternary::kNo);
  CHECK(star.tau_eq_nu == Ternary::kYes);
  const EgFailure c5 = eg_fails_at_nu(Graph::cycle(5));
  CHECK(c5.fails == Ternary::kNo);
  CHECK(c5.support_fits);
  const Graph g = with_extra(9, kTwoP3, {{6, 7}, {6, 8}, {7, 8}});
  const EgFailure f = eg_fails_at_nu(g);
  CHECK(f.nu == 3);
  CHECK(f.support == 9);
  CHECK(f.tau_eq_nu == Ternary::kNo);
  CHECK(f.fails == Ternary::kYes);
  CHECK_FALSE(eg_check(g, 3).holds);
}

TEST_CASE("certificate") {
  const Graph g = with_extra(10, kTwoP3, {{6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
  const FailureCertificate c = certify(g);
  // {0,2,3,5,6} is an independent half.
  CHECK(c.empty_half == Ternary::kYes);
  CHECK_FALSE(c.present);
  CHECK(c.check.fails == Ternary::kYes);

  // Two P3s plus K5 on nine vertices: halves have five vertices.
  EdgeList k5;
  for (Vertex u = 6; u < 11; ++u)
    for (Vertex v = u + 1; v < 11; ++v) k5.push_back({u, v});
  const Graph h = with_extra(11, kTwoP3, k5);
  const FailureCertificate d = certify(h);
  CHECK(d.empty_half == Ternary::kNo);
  CHECK(d.present);
  CHECK(d.check.fails == Ternary::kYes);
  CHECK_FALSE(eg_check(h, matching_number(h)).holds);
}

TEST_CASE("density events") {
  const Graph k = Graph::complete(30);
  const VertexSet x = VertexSet::of(30, {0, 3, 5, 9, 11, 20});
  CHECK(density_event_holds(k, DensityEvent::kDenseSet, x, nullptr, 1e-9, 1.0));
  CHECK(density_event_holds(Graph(30), DensityEvent::kSparseSet, x, nullptr, 0.5, 0.1));
  const VertexSet z = VertexSet::of(30, {1, 2});
  CHECK(density_event_holds(k, DensityEvent::kBipartite, x, &z, 1e-9, 1.0));
  CHECK_THROWS_AS(density_event_holds(k, DensityEvent::kBipartite, x, nullptr, 0.5, 1.0), InputError);

  const DensityAudit full = density_audit(k, 0.01, 1.0, 20, 3);
  REQUIRE(full.lines.size() == 4);
  CHECK(full.lines[0].violations == 0);
  CHECK(full.lines[0].samples == 20);
}

TEST_CASE("density audit at dense parameters") {
  const std::uint64_t n = 1 << 12;
  const double p = 8 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  const Graph g = gen_gnp({n, p, 17});
  const DensityAudit a = density_audit(g, 0.5, p, 100, 1);
  CHECK(a.lines[0].event == DensityEvent::kDenseSet);
  CHECK(a.lines[0].violations == 0);
  CHECK(a.lines[1].violations == 0);
}

TEST_CASE("regimes") {
  CHECK(parse_regime("forest") == Regime::kForest);
  CHECK_THROWS_AS(parse_regime("sparse"), InputError);
  RegimeSpec spec;
  spec.n = 10;
  const ResolvedP dense = resolve_p(spec);
  CHECK(dense.clamped);
  CHECK(dense.p == 1.0);
  spec.n = 64;
  CHECK(resolve_p(spec).p == doctest::Approx(8 * std::log(64.0) / 64));
  spec.regime = Regime::kMiddle;
  CHECK_THROWS_AS(resolve_p(spec), InputError);
  spec.p = 0.01;
  const ResolvedP mid = resolve_p(spec);
  REQUIRE(mid.middle_interval_empty.has_value());
  CHECK(*mid.middle_interval_empty);
  CHECK_FALSE(*mid.middle_feasible);
  spec.regime = Regime::kCustom;
  spec.p = 1.5;
  CHECK_THROWS_AS(resolve_p(spec), InputError);
}

TEST_CASE("wilson interval") {
  const Rate r = wilson(95, 100);
  CHECK(r.rate == doctest::Approx(0.95));
  CHECK(r.lower == doctest::Approx(0.8882).epsilon(1e-3));
  CHECK(r.upper == doctest::Approx(0.9785).epsilon(1e-3));
  const Rate none = wilson(0, 0);
  CHECK(none.lower == 0.0);
  CHECK(none.upper == 1.0);
}

TEST_CASE("run_trials") {
  RegimeSpec spec;
  spec.regime = Regime::kCustom;
  spec.n = 10;
  spec.p = 0.9;
  spec.trials = 12;
  spec.master_seed = 99;
  spec.checks.moves = true;
  spec.checks.density_samples = 3;
  const TrialRun one = run_trials(spec);
  REQUIRE(one.records.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(one.records[i].trial == i);
    CHECK(one.records[i].seed == derive_seed(99, i));
    CHECK(one.records[i].eg_all == Ternary::kYes);
  }
  CHECK(one.summary.eg_all.total == 12);
  spec.threads = 3;
  const TrialRun three = run_trials(spec);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(three.records[i].m == one.records[i].m);
    CHECK(three.records[i].moves_stop == one.records[i].moves_stop);
    CHECK(three.records[i].notes == one.records[i].notes);
  }
  spec.trials = 0;
  const TrialRun empty = run_trials(spec);
  CHECK(empty.records.empty());
  CHECK(empty.summary.degenerate);
}

TEST_CASE("forest regime") {
  RegimeSpec spec;
  spec.regime = Regime::kForest;
  spec.n = 1000;
  spec.forest_c = 0.1;
  spec.trials = 100;
  spec.master_seed = 4;
  spec.checks.empty_half = false;
  spec.checks.eg_all = false;
  const TrialRun run = run_trials(spec);
  CHECK(run.summary.forest.rate >= 0.95);
  for (const auto& r : run.records)
    if (r.is_forest) CHECK(r.tau_eq_nu == Ternary::kYes);
}
