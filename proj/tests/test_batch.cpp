#include <doctest.h>

#include "lpakk/batch.hpp"
#include "lpakk/error.hpp"
#include "lpakk/random.hpp"

using namespace lpakk;

TEST_CASE("parallel invariants match the serial reference") {
  Rng rng(1);
  std::vector<Graph> graphs;
  for (int k = 0; k < 200; ++k) graphs.push_back(random_graph(rng, {1, 8, 3, 0.35, 0.1}));
  const auto serial = invariants_serial(graphs);
  REQUIRE(serial.size() == graphs.size());
  CHECK(invariants_parallel(graphs) == serial);
  for (std::size_t i = 0; i < graphs.size(); ++i) CHECK(serial[i] == invariants(graphs[i]));
  CHECK(invariants_parallel({}).empty());
}

TEST_CASE("parallel smith forms match the serial reference") {
  Rng rng(2);
  std::vector<IntMatrix> ms;
  for (int k = 0; k < 100; ++k) ms.push_back(random_matrix(rng, 1 + k % 9, 1 + k % 7, -10, 10));
  const auto serial = snf_serial(ms);
  const auto parallel = snf_parallel(ms);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    CHECK(parallel[i].d == serial[i].d);
    CHECK(parallel[i].p == serial[i].p);
    CHECK(parallel[i].q == serial[i].q);
  }
  CHECK(parallel_threads() >= 1);
}

TEST_CASE("random generators are reproducible") {
  Rng a(77), b(77);
  for (int k = 0; k < 20; ++k) {
    CHECK(random_graph(a) == random_graph(b));
    CHECK(random_matrix(a, 3, 4, -5, 5) == random_matrix(b, 3, 4, -5, 5));
    CHECK(random_group(a, 2, 3, 9) == random_group(b, 2, 3, 9));
  }
}
