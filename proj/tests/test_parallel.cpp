// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "unruh_qsl/parallel.hpp"

using namespace unruh_qsl;

TEST_CASE("parallel_for_index covers every index exactly once", "[parallel]") {
  for (unsigned workers : {1u, 2u, 3u, 7u}) {
    std::vector<int> hits(101, 0);
    parallel_for_index(hits.size(), [&](std::size_t i) { ++hits[i]; }, workers);
    REQUIRE(std::accumulate(hits.begin(), hits.end(), 0) == 101);
    for (int h : hits) REQUIRE(h == 1);
  }
  // More workers than work is fine, as is no work at all.
  std::vector<int> tiny(2, 0);
  parallel_for_index(tiny.size(), [&](std::size_t i) { ++tiny[i]; }, 16);
  REQUIRE(tiny == std::vector<int>{1, 1});
  parallel_for_index(0, [](std::size_t) { throw std::logic_error("unreached"); }, 4);
}

TEST_CASE("parallel_for_index rethrows worker exceptions", "[parallel]") {
  auto boom = [](std::size_t i) {
    if (i == 37) throw std::runtime_error("boom");
  };
  REQUIRE_THROWS_AS(parallel_for_index(64, boom, 3), std::runtime_error);
  REQUIRE_THROWS_AS(parallel_for_index(64, boom, 1), std::runtime_error);
}

TEST_CASE("thread cap honours the environment variable", "[parallel]") {
  unsetenv("UNRUH_QSL_THREADS");
  const unsigned base = sweep_thread_count();
  REQUIRE(base >= 1);

  setenv("UNRUH_QSL_THREADS", "1", 1);
  REQUIRE(sweep_thread_count() == 1);

  setenv("UNRUH_QSL_THREADS", "0", 1);  // caps below 1 are ignored
  REQUIRE(sweep_thread_count() == base);

  setenv("UNRUH_QSL_THREADS", "not-a-number", 1);
  REQUIRE(sweep_thread_count() == base);

  setenv("UNRUH_QSL_THREADS", "10000", 1);  // capping never raises
  REQUIRE(sweep_thread_count() == base);

  unsetenv("UNRUH_QSL_THREADS");
}
