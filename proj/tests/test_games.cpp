// Copyright 2026 The faircore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faircore/games.hpp"

#include <random>
#include <vector>

#include <doctest.h>

#include "faircore/algorithms.hpp"
#include "testutil.hpp"

using namespace faircore::games;
using faircore::Rational;

TEST_CASE("coalition values of the triangle") {
  const auto g = testutil::triangle();
  CHECK(g.coalition_value(0b110) == 6);  // {B, C}
  CHECK(g.coalition_value(0b001) == 0);  // {A}
  CHECK(g.coalition_value(0b111) == 12);
  CHECK(g.coalition_value(0) == 0);
  CHECK(g.total_weight() == 12);
  CHECK(g.vertex_weight(0) == 6);
  CHECK(g.vertex_weight(1) == 8);
  CHECK(g.vertex_weight(2) == 10);
}

TEST_CASE("is game validation") {
  CHECK_THROWS_AS(ISGame(2, {{0, 0, 3}}), std::invalid_argument);           // loop
  CHECK_THROWS_AS(ISGame(2, {{0, 1, 3}, {1, 0, 2}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(ISGame(3, {{0, 1, 3}}), std::invalid_argument);  // vertex 2 isolated
  CHECK_THROWS_AS(ISGame(2, {}), std::invalid_argument);           // empty edge set
  CHECK_THROWS_AS(ISGame(2, {{0, 1, -1}}), std::invalid_argument);
}

TEST_CASE("to_explicit matches the coalition formula") {
  const auto table = to_explicit(testutil::triangle());
  CHECK(table.value(0b011) == 2);   // {A, B}
  CHECK(table.value(0b101) == 4);   // {A, C}
  CHECK(table.value(0b110) == 6);   // {B, C}
  CHECK(table.value(0b111) == 12);
  CHECK(table.value(0b001) == 0);
  CHECK(table.is_monotone());

  const auto edge = to_explicit(ISGame(2, {{0, 1, 5}}));
  CHECK(edge.value(0) == 0);
  CHECK(edge.value(0b01) == 0);
  CHECK(edge.value(0b10) == 0);
  CHECK(edge.value(0b11) == 5);
}

TEST_CASE("explicit game validation") {
  CHECK_THROWS_AS(ExplicitGame(2, {0, 1, 1}), std::invalid_argument);      // wrong size
  CHECK_THROWS_AS(ExplicitGame(2, {1, 1, 1, 2}), std::invalid_argument);   // v(empty) != 0
  CHECK_THROWS_AS(ExplicitGame(2, {0, -1, 1, 2}), std::invalid_argument);  // negative
  const ExplicitGame shrinking(2, {0, 3, 3, 2});
  CHECK_FALSE(shrinking.is_monotone());  // warning-level, not an error
  CHECK(to_explicit(testutil::triangle()).is_monotone());
}

TEST_CASE("dual game on the triangle") {
  const auto g = to_explicit(testutil::triangle());
  const auto dual = dual_game(g);
  CHECK(dual.value(0b100) == 10);  // v*({C}) = 12 - v({A,B})
  CHECK(dual.value(0) == 0);
  CHECK(dual.value(0b111) == 12);
  CHECK(dual_game(dual) == g);
}

TEST_CASE("dual game is an involution on random games") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto g = t % 2 == 0 ? to_explicit(testutil::random_is_game(rng, 6, 20))
                              : testutil::random_supermodular_game(rng, 5);
    CHECK(dual_game(dual_game(g)) == g);
  }
}

TEST_CASE("supermodularity check") {
  CHECK(check_supermodular(to_explicit(testutil::triangle())).supermodular);

  const ExplicitGame bad(2, {0, 1, 1, 1});
  const auto result = check_supermodular(bad);
  CHECK_FALSE(result.supermodular);
  CHECK(result.witness_s == 0b01);
  CHECK(result.witness_t == 0b10);
  CHECK(bad.value(result.witness_s | result.witness_t) +
            bad.value(result.witness_s & result.witness_t) <
        bad.value(result.witness_s) + bad.value(result.witness_t));

  // Additive games sit exactly on the equality case.
  const ExplicitGame additive(2, {0, 3, 4, 7});
  CHECK(check_supermodular(additive).supermodular);
}

TEST_CASE("supermodularity check agrees with the definition oracle") {
  std::mt19937_64 rng(22);
  int violations_seen = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = testutil::uniform_int(rng, 2, 4);
    std::vector<Money> values(std::size_t{1} << n, 0);
    // Random monotone tables: cumulative nonnegative bumps along the lattice.
    for (Mask s = 1; s <= full_mask(n); ++s) {
      Money base = 0;
      for (int i = 0; i < n; ++i) {
        if (mask_contains(s, i)) base = std::max(base, values[mask_without(s, i)]);
      }
      values[s] = base + testutil::uniform_int(rng, 0, 3);
      if (s == full_mask(n)) break;
    }
    const ExplicitGame g(n, std::move(values));
    const auto fast = check_supermodular(g);
    CHECK(fast.supermodular == testutil::supermodular_by_definition(g));
    if (!fast.supermodular) {
      ++violations_seen;
      CHECK(g.value(fast.witness_s | fast.witness_t) + g.value(fast.witness_s & fast.witness_t) <
            g.value(fast.witness_s) + g.value(fast.witness_t));
    }
  }
  CHECK(violations_seen > 0);  // the sample must exercise both branches
}

TEST_CASE("cover check on the triangle") {
  const auto g = to_explicit(testutil::triangle());
  CHECK(check_cover(g, {0, 2, 10}).valid);
  CHECK(check_cover(g, {3, 4, 5}).valid);

  const auto bad = check_cover(g, {12, 0, 0});
  CHECK_FALSE(bad.valid);
  CHECK(std::find(bad.violated.begin(), bad.violated.end(), Mask{0b110}) != bad.violated.end());

  const auto wrong_sum = check_cover(g, {1, 1, 1});
  CHECK_FALSE(wrong_sum.valid);
  CHECK_FALSE(wrong_sum.sum_matches);

  CHECK_THROWS_AS(check_cover(g, {1, 2}), std::invalid_argument);
}

TEST_CASE("utopia payoffs") {
  const auto g = to_explicit(testutil::triangle());
  CHECK(utopia_payoff(g, 2) == 10);  // 12 - v({A,B}) = 12 - 2
  CHECK(utopia_payoff(g, 0) == 6);   // 12 - v({B,C}) = 12 - 6
  const ExplicitGame additive(2, {0, 3, 4, 7});
  CHECK(utopia_payoff(additive, 0) == 3);
  CHECK(utopia_payoff(additive, 1) == 4);
}

TEST_CASE("shapley values of the triangle") {
  const auto g = testutil::triangle();
  const auto direct = shapley_is(g);
  REQUIRE(direct.size() == 3);
  CHECK(direct[0] == Rational(3));
  CHECK(direct[1] == Rational(4));
  CHECK(direct[2] == Rational(5));
  CHECK(shapley_general(to_explicit(g)) == direct);
}

TEST_CASE("shapley closed form for small graphs") {
  const auto edge = shapley_is(ISGame(2, {{0, 1, 5}}));
  CHECK(edge[0] == Rational(5, 2));
  CHECK(edge[1] == Rational(5, 2));

  // Unit star: the center collects half of every edge.
  const auto star = shapley_is(ISGame(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}));
  CHECK(star[0] == Rational(2));
  for (int leaf = 1; leaf < 5; ++leaf) CHECK(star[leaf] == Rational(1, 2));
}

TEST_CASE("shapley of explicit games: additivity and symmetry") {
  const ExplicitGame additive(3, {0, 2, 3, 5, 4, 6, 7, 9});
  const auto values = shapley_general(additive);
  CHECK(values[0] == Rational(2));
  CHECK(values[1] == Rational(3));
  CHECK(values[2] == Rational(4));

  const ExplicitGame symmetric(3, {0, 0, 0, 1, 0, 1, 1, 5});
  for (const auto& v : shapley_general(symmetric)) CHECK(v == Rational(5, 3));
}

TEST_CASE("shapley on induced subgraphs agrees with the general formula") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto g = testutil::random_is_game(rng, 8, 40);
    const auto direct = shapley_is(g);
    const auto general = shapley_general(to_explicit(g));
    CHECK(direct == general);
    Rational sum(0);
    for (const auto& v : direct) sum = sum + v;
    CHECK(sum == Rational(g.total_weight()));
  }
}

TEST_CASE("random induced subgraph games are supermodular") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    CHECK(check_supermodular(to_explicit(testutil::random_is_game(rng, 7, 40))).supermodular);
  }
}

TEST_CASE("reverse greedy output lies in the core") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 200; ++t) {
    const auto g = to_explicit(testutil::random_is_game(rng, 7, 40));
    const auto rg = faircore::alg::reverse_greedy(g);
    CHECK(check_cover(g, rg.cover).valid);
  }
}

TEST_CASE("shapley player cap") {
  std::vector<Money> values(std::size_t{1} << 13, 0);
  for (Mask s = 1; s < values.size(); ++s) values[s] = mask_size(s);
  CHECK_THROWS_AS(shapley_general(ExplicitGame(13, std::move(values))), std::invalid_argument);
}
