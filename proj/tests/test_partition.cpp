// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "symwitt/numbers.hpp"
#include "symwitt/partition.hpp"

using namespace symwitt;

TEST_CASE("enumeration order and base cases") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  auto p4 = partitions_of(4);
  std::vector<Partition> expected = {Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                     Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
  CHECK(p4 == expected);
  CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("counts match an independent dynamic program") {
  // p(n) via the bounded-largest-part table
  constexpr unsigned N = 20;
  std::vector<std::vector<Int>> dp(N + 1, std::vector<Int>(N + 1, 0));
  for (unsigned k = 0; k <= N; ++k) dp[0][k] = 1;
  for (unsigned n = 1; n <= N; ++n)
    for (unsigned k = 1; k <= N; ++k)
      dp[n][k] = dp[n][k - 1] + (n >= k ? dp[n - k][k] : Int(0));
  for (unsigned n = 0; n <= N; ++n) CHECK(Int(partitions_of(n).size()) == dp[n][N]);
}

TEST_CASE("multiset union") {
  CHECK(Partition({2, 1}).union_with(Partition({3, 1})) == Partition({3, 2, 1, 1}));
  Partition lam({5, 2});
  CHECK(lam.union_with(Partition()) == lam);
  CHECK(Partition({1}).union_with(Partition({1})) == Partition({1, 1}));
}

TEST_CASE("text form") {
  CHECK(Partition({3, 1, 1}).str() == "[3,1,1]");
  CHECK(Partition::parse("[3,1,1]") == Partition({3, 1, 1}));
  CHECK(Partition::parse("[]").empty());
  CHECK_THROWS_AS(Partition::parse("[3,"), SyntaxError);
  CHECK_THROWS_AS(Partition({0, 1}), DescriptorError);
}

TEST_CASE("weights, scaling, multiplicities") {
  Partition lam({4, 2, 2, 1});
  CHECK(lam.weight() == 9);
  CHECK(lam.length() == 4);
  CHECK(lam.scaled(3) == Partition({12, 6, 6, 3}));
  auto mult = lam.multiplicities();
  REQUIRE(mult.size() == 3);
  CHECK(mult[0] == std::pair<unsigned, unsigned>{4, 1});
  CHECK(mult[1] == std::pair<unsigned, unsigned>{2, 2});
}

TEST_CASE("partitions with restricted parts") {
  auto p = partitions_with_parts(4, {1, 2, 4});
  CHECK(p.size() == 4);  // 4, 2+2, 2+1+1, 1+1+1+1
  auto q = partitions_with_parts(5, {2, 4});
  CHECK(q.empty());
}
