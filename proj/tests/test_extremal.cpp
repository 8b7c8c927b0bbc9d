#include <doctest.h>

#include <set>

#include "egm/bounds.hpp"
#include "egm/error.hpp"
#include "egm/extremal.hpp"
#include "egm/matching.hpp"
#include "egm/random.hpp"
#include "oracles.hpp"

using namespace egm;

namespace {

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::size_t n = 0;
  EdgeList edges;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges())
      edges.push_back({static_cast<Vertex>(e.u + n), static_cast<Vertex>(e.v + n)});
    n += g.order();
  }
  return Graph(n, edges);
}

bool has_form(const std::vector<FormWitness>& forms, FormKind kind) {
  for (const auto& f : forms)
    if (f.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("best_form1 examples") {
  const FormResult k6 = best_form1(Graph::complete(6), 1);
  CHECK(k6.size == 3);
  CHECK(k6.set.count() == 3);
  CHECK(k6.exact);
  const FormResult c5 = best_form1(Graph::cycle(5), 1);
  CHECK(c5.size == 2);
  CHECK(c5.set == VertexSet::of(5, {0, 1, 2}));
  const FormResult k0 = best_form1(Graph::cycle(5), 0);
  CHECK(k0.size == 0);
  CHECK(k0.set.count() == 1);
  CHECK_THROWS_AS(best_form1(Graph::cycle(5), 3), InputError);
}

TEST_CASE("best_form2 examples") {
  const FormResult k6 = best_form2(Graph::complete(6), 1);
  CHECK(k6.size == 5);
  const FormResult star = best_form2(Graph::star(3), 1);
  CHECK(star.size == 3);
  CHECK(star.set == VertexSet::of(4, {0}));
  const FormResult k0 = best_form2(Graph::cycle(4), 0);
  CHECK(k0.size == 0);
  CHECK(k0.set.empty());
  CHECK_THROWS_AS(best_form2(Graph::cycle(4), 5), InputError);
}

TEST_CASE("heuristic form search is flagged and never beats enumeration") {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Graph g = gen_gnp({14, 0.4, rng.next()});
    for (std::size_t k = 1; k <= 4; ++k) {
      const FormResult e1 = best_form1(g, k);
      const FormResult h1 = best_form1(g, k, 1);
      CHECK(e1.exact);
      CHECK_FALSE(h1.exact);
      CHECK(h1.size <= e1.size);
      CHECK(h1.set.count() == 2 * k + 1);
      CHECK(edges_within(g, h1.set) == h1.size);
      const FormResult e2 = best_form2(g, k);
      const FormResult h2 = best_form2(g, k, 1);
      CHECK_FALSE(h2.exact);
      CHECK(h2.size <= e2.size);
      CHECK(h2.set.count() == k);
    }
  }
}

TEST_CASE("extremal examples") {
  const ExtremalResult k6 = extremal(Graph::complete(6), 1);
  CHECK(k6.size == 5);
  CHECK(k6.maximizers.size() == 6);
  for (const auto& m : k6.maximizers) {
    CHECK(m.edges.size() == 5);
    CHECK(has_form(m.forms, FormKind::kForm2));
    CHECK_FALSE(has_form(m.forms, FormKind::kForm1));
  }

  const ExtremalResult c5 = extremal(Graph::cycle(5), 1);
  CHECK(c5.size == 2);
  CHECK(c5.maximizers.size() == 5);
  for (const auto& m : c5.maximizers) {
    CHECK(has_form(m.forms, FormKind::kForm1));
    CHECK(has_form(m.forms, FormKind::kForm2));
  }

  const ExtremalResult k7 = extremal(Graph::complete(7), 2);
  CHECK(k7.size == 11);
  CHECK(k7.size == eg_size_formula(7, 2).value);
}

TEST_CASE("extremal errors") {
  CHECK_THROWS_AS(extremal(Graph::cycle(5), 3), InputError);
  CHECK_THROWS_AS(extremal(gen_gnp({500, 0.05, 1}), 3), CapabilityError);
  ExtremalOptions opt;
  opt.n_exact = 14;
  CHECK_NOTHROW(extremal(Graph::path(14), 2, opt));
}

TEST_CASE("exact search agrees with the edge-subset oracle") {
  Rng rng(101);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const Graph g = gen_gnp({n, rng.uniform01(), rng.next()});
    const auto truth = oracle::edge_subset_extremal(g);
    const std::size_t nu = matching_number(g);
    for (std::size_t k = 0; k <= nu; ++k) {
      ExtremalOptions opt;
      opt.nu_shortcut = false;
      const ExtremalResult r = extremal(g, k, opt);
      CHECK(r.size == truth.at(k).size);
      std::set<EdgeList> mine;
      for (const auto& m : r.maximizers) mine.insert(m.edges);
      CHECK(mine == truth.at(k).maximizers);
    }
  }
}

TEST_CASE("the k = nu shortcut matches the full search") {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const Graph g = gen_gnp({1 + rng.below(10), rng.uniform01(), rng.next()});
    const std::size_t nu = matching_number(g);
    ExtremalOptions full;
    full.nu_shortcut = false;
    const ExtremalResult a = extremal(g, nu);
    const ExtremalResult b = extremal(g, nu, full);
    CHECK(a.size == b.size);
    REQUIRE(b.maximizers.size() == 1);
    CHECK(a.maximizers[0].edges == b.maximizers[0].edges);
  }
}

TEST_CASE("extremal lower bounds and heuristic mode") {
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const Graph g = gen_gnp({3 + rng.below(9), 0.2 + 0.6 * rng.uniform01(), rng.next()});
    const std::size_t nu = matching_number(g);
    for (std::size_t k = 1; k <= nu; ++k) {
      const ExtremalResult exact = extremal(g, k);
      std::size_t forms = best_form2(g, k).size;
      if (2 * k + 1 <= g.order()) forms = std::max(forms, best_form1(g, k).size);
      CHECK(exact.size >= forms);
      ExtremalOptions h;
      h.mode = ExtremalMode::kHeuristic;
      h.seed = 5;
      const ExtremalResult heur = extremal(g, k, h);
      CHECK_FALSE(heur.exact);
      CHECK(heur.size >= forms);
      CHECK(heur.size <= exact.size);
      REQUIRE(heur.partition.has_value());
      CHECK(heur.partition->r() == static_cast<std::int64_t>(g.order() - 2 * k));
    }
  }
}

TEST_CASE("eg_check examples") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& v : eg_check_all(Graph::complete(n))) CHECK(v.holds);
  }
  const Graph triangles = disjoint_union({Graph::complete(3), Graph::complete(3)});
  const EgVerdict t1 = eg_check(triangles, 1);
  CHECK(t1.holds);
  CHECK(t1.size == 3);
  REQUIRE(t1.maximizer_count == 2);
  for (const auto& f : t1.forms) CHECK(has_form(f, FormKind::kForm1));

  const Graph fail = disjoint_union({Graph::path(3), Graph::path(3), Graph::complete(4)});
  REQUIRE(fail.order() == 10);
  const std::size_t nu = matching_number(fail);
  CHECK(nu == 4);
  const EgVerdict v = eg_check(fail, nu);
  CHECK_FALSE(v.holds);
  REQUIRE(v.counterexample.has_value());
  CHECK(*v.counterexample == fail.edges());
}

TEST_CASE("eg_check_all examples") {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const Graph f = oracle::random_forest(1 + rng.below(12), 0.8, rng);
    for (const auto& v : eg_check_all(f)) CHECK(v.holds);
  }
  const auto k5 = eg_check_all(Graph::complete(5));
  REQUIRE(k5.size() == 3);
  for (const auto& v : k5) CHECK(v.holds);
  const auto empty = eg_check_all(Graph(4));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].holds);
  CHECK(empty[0].size == 0);
}

TEST_CASE("classify_forms") {
  const Graph c5 = Graph::cycle(5);
  const auto path = classify_forms(c5, {{0, 1}, {1, 2}}, 1);
  REQUIRE(path.size() == 2);
  CHECK(path[0].kind == FormKind::kForm1);
  CHECK(path[0].set == VertexSet::of(5, {0, 1, 2}));
  CHECK(path[1].kind == FormKind::kForm2);
  CHECK(path[1].set == VertexSet::of(5, {1}));
  // A single edge of C5 is induced by {0, 1, 3}.
  const auto single = classify_forms(c5, {{0, 1}}, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].set == VertexSet::of(5, {0, 1, 3}));
  // Two disjoint edges need four vertices and two centres.
  CHECK(classify_forms(c5, {{0, 1}, {2, 3}}, 1).empty());
  // Form1 padding uses vertices with no edges into W.
  const Graph g(5, EdgeList{{0, 1}});
  const auto pad = classify_forms(g, {{0, 1}}, 1);
  REQUIRE_FALSE(pad.empty());
  CHECK(pad[0].set == VertexSet::of(5, {0, 1, 2}));
}
