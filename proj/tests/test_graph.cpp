#include <doctest.h>

#include <cmath>
#include <sstream>

#include "egm/error.hpp"
#include "egm/graph.hpp"
#include "egm/random.hpp"

using namespace egm;

TEST_CASE("gen_gnp extremes") {
  const Graph empty = gen_gnp({5, 0.0, 7});
  CHECK(empty.order() == 5);
  CHECK(empty.size() == 0);
  const Graph k5 = gen_gnp({5, 1.0, 7});
  CHECK(k5.size() == 10);
  CHECK(k5 == Graph::complete(5));
}

TEST_CASE("gen_gnp edge count mean within 3 sigma") {
  const double p = 0.3;
  const double pairs = 4950;
  const int samples = 10000;
  double sum = 0;
  for (int i = 0; i < samples; ++i) sum += static_cast<double>(gen_gnp({100, p, derive_seed(11, i)}).size());
  const double mean = sum / samples;
  const double sigma = std::sqrt(pairs * p * (1 - p) / samples);
  CHECK(std::fabs(mean - pairs * p) <= 3 * sigma);
}

TEST_CASE("gen_gnp is reproducible and validates parameters") {
  const Graph a = gen_gnp({300, 0.05, 42});
  const Graph b = gen_gnp({300, 0.05, 42});
  CHECK(a == b);
  CHECK(a.edges() == b.edges());
  CHECK_FALSE(gen_gnp({300, 0.05, 43}) == a);
  CHECK_THROWS_AS(gen_gnp({0, 0.5, 1}), InputError);
  CHECK_THROWS_AS(gen_gnp({5, 1.5, 1}), InputError);
  CHECK_THROWS_AS(gen_gnp({5, -0.1, 1}), InputError);
}

TEST_CASE("edges_within") {
  const Graph k4 = Graph::complete(4);
  CHECK(edges_within(k4, VertexSet::full(4)) == 6);
  CHECK(edges_within(k4, VertexSet::of(4, {2})) == 0);
  CHECK(edges_within(k4, VertexSet(4)) == 0);
  const Graph p3 = Graph::path(3);
  CHECK(edges_within(p3, VertexSet::of(3, {0, 2})) == 0);
  CHECK_THROWS_AS(edges_within(p3, VertexSet::of(5, {0, 4})), InputError);
}

TEST_CASE("edges_between") {
  const Graph k4 = Graph::complete(4);
  CHECK(edges_between(k4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})) == 4);
  const Graph empty(6);
  CHECK(edges_between(empty, VertexSet::of(6, {0, 1}), VertexSet::of(6, {4})) == 0);
  const Graph p3 = Graph::path(3);
  CHECK(edges_between(p3, VertexSet::of(3, {0, 2}), VertexSet::of(3, {1})) == 2);
  CHECK_THROWS_AS(edges_between(p3, VertexSet::of(3, {0, 1}), VertexSet::of(3, {1})), InputError);
}

TEST_CASE("components with removed vertices") {
  const auto k4 = components(Graph::complete(4), VertexSet(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].size == 4);
  CHECK_FALSE(k4[0].odd());

  const Graph star = Graph::star(3);  // centre 0
  const auto leaves = components(star, VertexSet::of(4, {0}));
  REQUIRE(leaves.size() == 3);
  for (const auto& c : leaves) {
    CHECK(c.size == 1);
    CHECK(c.odd());
  }
  CHECK(leaves[0].vertices.min() < leaves[1].vertices.min());

  const auto c5 = components(Graph::cycle(5), VertexSet::of(5, {2}));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].size == 4);
  CHECK_FALSE(c5[0].odd());
}

TEST_CASE("partition identity and component sizes on random graphs") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(40);
    const Graph g = gen_gnp({n, rng.uniform01() * 0.3, rng.next()});
    CHECK(edges_within(g, VertexSet::full(n)) == g.size());
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.5)) x.insert(v);
    const VertexSet rest = x.complement();
    CHECK(edges_within(g, x) + edges_within(g, rest) + edges_between(g, x, rest) == g.size());
    std::size_t total = 0;
    for (const auto& c : components(g, x)) total += c.size;
    CHECK(total == n - x.count());
  }
}

TEST_CASE("dense rows only below the limit") {
  CHECK(Graph::complete(10).has_dense_rows());
  CHECK_FALSE(Graph(Graph::kDenseRowLimit + 1).has_dense_rows());
  const Graph big = gen_gnp({5000, 0.001, 3});
  for (const Edge& e : big.edges()) {
    CHECK(big.adjacent(e.u, e.v));
    CHECK(big.adjacent(e.v, e.u));
  }
}

TEST_CASE("graph validation") {
  const Edge loop{1, 1};
  CHECK_THROWS_AS(Graph(3, std::span<const Edge>(&loop, 1)), InputError);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), InputError);
  const Edge out[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), InputError);
}

TEST_CASE("forest and bipartite checks") {
  CHECK(is_forest(Graph::path(3)));
  CHECK_FALSE(is_forest(Graph::cycle(5)));
  CHECK(is_forest(Graph(4)));
  CHECK(is_bipartite(Graph::cycle(6)));
  CHECK_FALSE(is_bipartite(Graph::cycle(5)));
  int forests = 0;
  for (int s = 0; s < 100; ++s) forests += is_forest(gen_gnp({1000, 0.0001, derive_seed(9, s)})) ? 1 : 0;
  CHECK(forests >= 95);
}

TEST_CASE("edge list round trip") {
  const Graph g = gen_gnp({30, 0.2, 17});
  std::stringstream buf;
  write_edge_list(buf, g);
  CHECK(read_edge_list(buf) == g);
  std::istringstream bad1("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad1), InputError);
  std::istringstream bad2("3 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad2), InputError);
  std::istringstream bad3("3 1\n0 1\n1 2\n");
  CHECK_THROWS_AS(read_edge_list(bad3), InputError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), InputError);
}
