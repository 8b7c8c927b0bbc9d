#include <doctest.h>

#include "egm/decomposition.hpp"
#include "egm/error.hpp"
#include "egm/matching.hpp"
#include "egm/moves.hpp"
#include "egm/random.hpp"

using namespace egm;

TEST_CASE("edge_set examples on K4") {
  const Graph k4 = Graph::complete(4);
  const Decomposition tri(4, {}, {{0, 1, 2}, {3}});
  CHECK(edge_set(k4, tri) == EdgeList{{0, 1}, {0, 2}, {1, 2}});
  const Decomposition star(4, {0}, {{1}, {2}, {3}});
  CHECK(edge_set(k4, star) == EdgeList{{0, 1}, {0, 2}, {0, 3}});
  const Decomposition whole(4, {}, {{0, 1, 2}, {3}});
  CHECK(decomposition_size(k4, whole) == 3);
  const Graph k5 = Graph::complete(5);
  const Decomposition all(5, {}, {{0, 1, 2, 3, 4}});
  CHECK(edge_set(k5, all) == k5.edges());
}

TEST_CASE("statistics and ordering") {
  // S = {8, 9}; blocks {5}, {0,1,2}, {3,4,6}, {7}
  const Decomposition pi(10, {9, 8}, {{5}, {2, 0, 1}, {6, 4, 3}, {7}});
  CHECK(pi.s() == std::vector<Vertex>{8, 9});
  CHECK(pi.block(0) == std::vector<Vertex>{0, 1, 2});
  CHECK(pi.block(1) == std::vector<Vertex>{3, 4, 6});
  CHECK(pi.block(2) == std::vector<Vertex>{5});
  CHECK(pi.block(3) == std::vector<Vertex>{7});
  CHECK(pi.s_count() == 2);
  CHECK(pi.d() == 4);
  CHECK(pi.r() == 2);
  CHECK(pi.a1_size() == 3);
  CHECK(pi.b_size() == 5);
  CHECK(pi.y() == 2);
  CHECK(pi.k() == 4);
  const auto label = pi.labels();
  CHECK(label[8] == Decomposition::kInS);
  CHECK(label[4] == 1);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Decomposition(4, {}, {{0, 1}, {2}, {3}}), InputError);        // even block
  CHECK_THROWS_AS(Decomposition(4, {}, {{0, 1, 2}}), InputError);               // missing vertex
  CHECK_THROWS_AS(Decomposition(4, {0}, {{0, 1, 2}, {3}}), InputError);         // overlap
  CHECK_THROWS_AS(Decomposition(4, {0, 1, 2}, {{3}}), InputError);              // d < s
  CHECK_THROWS_AS(Decomposition(4, {}, {{0, 1, 2}, {7}}), InputError);          // out of range
  CHECK_THROWS_AS(Decomposition(3, {}, {{0}, {}, {1, 2, 0}}), InputError);      // empty block
  CHECK_THROWS_AS(edge_set(Graph::complete(5), Decomposition::singletons(4)), InputError);
}

TEST_CASE("nu_of_decomposition examples") {
  const Decomposition tri(4, {}, {{0, 1, 2}, {3}});
  CHECK(tri.r() == 2);
  CHECK(nu_of_decomposition(Graph::complete(4), tri) == 1);
  CHECK(nu_of_decomposition(Graph(6), Decomposition(6, {0}, {{1, 2, 3}, {4}, {5}})) == 0);
  const Decomposition k6(6, {}, {{0, 1, 2, 3, 4}, {5}});
  CHECK(nu_of_decomposition(Graph::complete(6), k6) == 2);
  CHECK((6 - k6.r()) / 2 == 2);
}

TEST_CASE("derived statistics, y parity and the Tutte-Berge bound") {
  Rng rng(44);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(30);
    const std::size_t k = rng.below(n / 2 + 1);
    const Decomposition pi = random_partition(n, k, rng.next());
    CHECK(pi.r() == static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(k));
    CHECK(pi.k() == k);
    CHECK(pi.y() % 2 == 0);
    CHECK(pi.b_size() - (pi.d() - 1) == pi.y());
    CHECK(2 * (n - pi.s_count()) >= n);
    for (std::size_t i = 1; i < pi.d(); ++i) CHECK(pi.block(i - 1).size() >= pi.block(i).size());
    for (const auto& b : pi.blocks()) CHECK(b.size() % 2 == 1);
    const Graph g = gen_gnp({n, rng.uniform01(), rng.next()});
    CHECK(2 * nu_of_decomposition(g, pi) <= n - static_cast<std::size_t>(pi.r()));
  }
}

TEST_CASE("canonical forms") {
  CHECK(Decomposition(5, {}, {{0, 1, 2}, {3}, {4}}).is_form_a());
  CHECK(Decomposition(5, {0}, {{1}, {2}, {3}, {4}}).is_form_b());
  CHECK(Decomposition::singletons(3).is_form_a());
  CHECK_FALSE(Decomposition(7, {}, {{0, 1, 2}, {3, 4, 5}, {6}}).is_canonical());
  CHECK_FALSE(Decomposition(5, {0}, {{1, 2, 3}, {4}}).is_canonical());
}
