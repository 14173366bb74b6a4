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

#include "faircore/exact.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <doctest.h>

#include "testutil.hpp"

using namespace faircore::exact;
using faircore::Rational;
using faircore::alg::greedy_orientation;
using faircore::alg::reverse_greedy;
using faircore::games::check_cover;
using faircore::games::to_explicit;
using faircore::info::normalize;

namespace {

std::set<Cover> as_set(const std::vector<Cover>& covers) {
  return std::set<Cover>(covers.begin(), covers.end());
}

}  // namespace

TEST_CASE("the triangle has 57 integer covers, 6 of them extremal") {
  const auto g = to_explicit(testutil::triangle());
  const auto covers = enumerate_covers(g);
  CHECK(covers.size() == 57);
  CHECK(std::is_sorted(covers.begin(), covers.end()));
  CHECK(std::adjacent_find(covers.begin(), covers.end()) == covers.end());
  for (const auto& c : covers) CHECK(check_cover(g, c).valid);

  const auto extremal = extremal_covers(g, covers);
  CHECK(extremal.size() == 6);
  CHECK(as_set(extremal) == std::set<Cover>{{6, 6, 0},
                                            {6, 0, 6},
                                            {4, 8, 0},
                                            {0, 8, 4},
                                            {2, 0, 10},
                                            {0, 2, 10}});
}

TEST_CASE("cover enumeration on degenerate games") {
  const auto edge = to_explicit(ISGame(2, {{0, 1, 5}}));
  const auto covers = enumerate_covers(edge);
  CHECK(covers.size() == 6);  // (k, 5-k)
  CHECK(as_set(extremal_covers(edge, covers)) == std::set<Cover>{{5, 0}, {0, 5}});

  // Two isolated players with additive values: the equalities pin the
  // single cover. Modeled as an explicit table since IS graphs cannot
  // carry isolated vertices.
  const ExplicitGame isolated(2, {0, 3, 2, 5});
  const auto pinned = enumerate_covers(isolated);
  REQUIRE(pinned.size() == 1);
  CHECK(pinned[0] == Cover{3, 2});
}

TEST_CASE("enumeration agrees with the unpruned oracle") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 25; ++t) {
    const auto g = to_explicit(testutil::random_is_game(rng, 5, 12));
    const auto fast = enumerate_covers(g);
    const auto slow = testutil::cover_oracle(g);
    CHECK(fast.size() == slow.size());
    CHECK(as_set(fast) == as_set(slow));
  }
}

TEST_CASE("parallel enumeration matches the sequential order exactly") {
  const auto g = to_explicit(testutil::triangle());
  const auto sequential = enumerate_covers(g);
  for (int threads : {2, 3, 4, 8}) {
    CHECK(enumerate_covers(g, {}, threads) == sequential);
  }
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10; ++t) {
    const auto random_game = to_explicit(testutil::random_is_game(rng, 6, 16));
    CHECK(enumerate_covers(random_game, {}, 4) == enumerate_covers(random_game));
  }
}

TEST_CASE("enumeration caps raise the dedicated error") {
  const auto g = to_explicit(testutil::triangle());
  CHECK_THROWS_AS(enumerate_covers(g, {2, 30}), CapsExceededError);
  CHECK_THROWS_AS(enumerate_covers(g, {8, 5}), CapsExceededError);
}

TEST_CASE("minimum entropy covers of the triangle") {
  const auto g = to_explicit(testutil::triangle());
  const auto at_one = min_entropy_cover(g, OrderParameter(1.0));
  CHECK(at_one.entropy == doctest::Approx(0.65002242164835411).epsilon(1e-12));
  CHECK(as_set(at_one.argmin) == std::set<Cover>{{2, 0, 10}, {0, 2, 10}});

  const auto at_two = min_entropy_cover(g, OrderParameter(2.0));
  CHECK(as_set(at_two.argmin) == std::set<Cover>{{2, 0, 10}, {0, 2, 10}});

  const auto edge = to_explicit(ISGame(2, {{0, 1, 5}}));
  for (double lambda : {0.5, 1.0, 3.0}) {
    const auto m = min_entropy_cover(edge, OrderParameter(lambda));
    CHECK(m.entropy == doctest::Approx(0.0));
    CHECK(as_set(m.argmin) == std::set<Cover>{{5, 0}, {0, 5}});
  }
}

TEST_CASE("minimum entropy orientation search") {
  const auto g = testutil::triangle();
  const auto result = min_entropy_orientation(g, OrderParameter(1.0));
  CHECK(result.entropy == doctest::Approx(0.65002242164835411).epsilon(1e-12));
  std::set<Cover> induced;
  for (const auto& o : result.argmin) {
    induced.insert(faircore::alg::cover_of_orientation(g, o));
  }
  CHECK(induced == std::set<Cover>{{2, 0, 10}, {0, 2, 10}});

  const ISGame edge(2, {{0, 1, 5}});
  const auto single = min_entropy_orientation(edge, OrderParameter(2.0));
  CHECK(single.entropy == doctest::Approx(0.0));
  CHECK(single.argmin.size() == 2);

  std::vector<faircore::games::WeightedEdge> many;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) many.push_back({i, j, 1});
  }
  CHECK_THROWS_AS(min_entropy_orientation(ISGame(7, many), OrderParameter(1.0)),
                  CapsExceededError);
}

TEST_CASE("orientation and cover optima coincide") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const auto g = testutil::random_is_game(rng, 6, 20, 10);
    const auto eg = to_explicit(g);
    for (double lambda : {0.5, 1.0, 2.0, 3.0}) {
      const OrderParameter order(lambda);
      const double by_orientation = min_entropy_orientation(g, order).entropy;
      const double by_cover = min_entropy_cover(eg, order).entropy;
      CHECK(by_orientation == doctest::Approx(by_cover).epsilon(1e-9));
    }
  }
}

TEST_CASE("worst-case fairness on the triangle") {
  const auto g = to_explicit(testutil::triangle());
  const auto uniform = normalize(std::vector<double>(3, 1.0));

  const auto egalitarian = worst_case_fairness(g, uniform, OrderParameter(1.0));
  CHECK(egalitarian.value == doctest::Approx(0.9349400790728023).epsilon(1e-12));
  CHECK(as_set(egalitarian.argmax_covers) == std::set<Cover>{{2, 0, 10}, {0, 2, 10}});

  const auto shapley = normalize(std::vector<long long>{3, 4, 5});
  const auto marginalist = worst_case_fairness(g, shapley, OrderParameter(1.0));
  CHECK(marginalist.value == doctest::Approx(0.80501249975961453).epsilon(1e-12));
  REQUIRE(marginalist.argmax_covers.size() == 1);
  CHECK(marginalist.argmax_covers[0] == Cover{4, 8, 0});

  for (const auto& c : marginalist.argmax_covers) CHECK(check_cover(g, c).valid);
  // The maximum dominates the divergence of any particular cover.
  CHECK(marginalist.value >=
        faircore::info::renyi_divergence(normalize(Cover{0, 2, 10}), shapley,
                                         OrderParameter(1.0)) -
            1e-12);
}

TEST_CASE("worst-case fairness of a single edge against uniform") {
  const auto g = to_explicit(ISGame(2, {{0, 1, 5}}));
  const auto uniform = normalize(std::vector<double>(2, 1.0));
  const auto fair = worst_case_fairness(g, uniform, OrderParameter(1.0));
  CHECK(fair.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(as_set(fair.argmax_covers) == std::set<Cover>{{5, 0}, {0, 5}});
}

TEST_CASE("fairness against uniform equals the entropy gap") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 20; ++t) {
    const auto g = to_explicit(testutil::random_is_game(rng, 5, 16));
    const auto uniform = normalize(std::vector<double>(g.player_count(), 1.0));
    for (double lambda : {0.5, 1.0, 2.0}) {
      const OrderParameter order(lambda);
      const auto fair = worst_case_fairness(g, uniform, order);
      const auto opt = min_entropy_cover(g, order);
      CHECK(fair.value ==
            doctest::Approx(std::log2(g.player_count()) - opt.entropy).epsilon(1e-9));
    }
  }
}

TEST_CASE("fairness baseline must cover every player") {
  const auto g = to_explicit(testutil::triangle());
  const auto partial = faircore::info::Distribution::from_probabilities({0.5, 0.5, 0.0});
  CHECK_THROWS_AS(worst_case_fairness(g, partial, OrderParameter(1.0)), std::invalid_argument);
}

TEST_CASE("fairness decision thresholds") {
  const auto g = to_explicit(testutil::triangle());
  const auto uniform = normalize(std::vector<double>(3, 1.0));
  const OrderParameter one(1.0);
  CHECK(decide_fairness(g, uniform, one, 0.9));
  CHECK_FALSE(decide_fairness(g, uniform, one, 1.0));
  CHECK(decide_fairness(g, uniform, one, 0.0));
  // Monotone in the threshold.
  bool previous = true;
  for (double eta : {0.0, 0.3, 0.6, 0.9, 0.95, 1.2, 2.0}) {
    const bool now = decide_fairness(g, uniform, one, eta);
    CHECK((previous || !now));
    previous = now;
  }
}

TEST_CASE("packing constants are unit on the triangle's optimal covers") {
  const auto is = testutil::triangle();
  const auto g = to_explicit(is);
  const auto rg = reverse_greedy(g);
  for (const Cover& x : {Cover{2, 0, 10}, Cover{0, 2, 10}}) {
    const auto constants = packing_constants(g, x, rg.trace);
    CHECK(constants.alpha == Rational(1));
    CHECK(constants.beta == Rational(1));
  }
  // The reverse-greedy cover decomposes against itself stage by stage.
  const auto own = packing_constants(g, rg.cover, rg.trace);
  CHECK(own.alpha == Rational(1));
  CHECK(own.beta == Rational(1));
}

TEST_CASE("packing witnesses satisfy their defining constraints exactly") {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 40; ++t) {
    const auto g = t % 2 == 0 ? to_explicit(testutil::random_is_game(rng, 5, 14))
                              : testutil::random_supermodular_game(rng, 5, 14);
    const auto rg = reverse_greedy(g);
    const auto impact = faircore::alg::impact_matrix(g, rg.trace);
    const auto covers = enumerate_covers(g);
    const auto opt = min_entropy_over(covers, OrderParameter(2.0));
    for (const auto& x : opt.argmin) {
      const auto constants = packing_constants(g, x, rg.trace);
      CHECK(constants.beta <= Rational(1));
      CHECK(Rational(1) <= constants.alpha);
      for (const auto* witness : {&constants.alpha_witness, &constants.beta_witness}) {
        for (int j = 0; j < witness->players; ++j) {
          Money column = 0;
          for (int r = 0; r < witness->stages; ++r) column += witness->at(r, j);
          CHECK(column == x[static_cast<std::size_t>(j)]);
        }
        for (int r = 0; r < witness->stages; ++r) {
          for (int j = 0; j < witness->players; ++j) {
            CHECK(witness->at(r, j) >= 0);
            CHECK(witness->at(r, j) <= impact.at(r, j));
          }
        }
      }
      for (int r = 0; r < constants.alpha_witness.stages; ++r) {
        // stage totals obey total <= alpha * delta and total >= beta * delta
        CHECK(Rational(constants.alpha_witness.stage_total(r)) <=
              constants.alpha * Rational(rg.trace.deltas[r]));
        CHECK(constants.beta * Rational(rg.trace.deltas[r]) <=
              Rational(constants.beta_witness.stage_total(r)));
      }
    }
  }
}

TEST_CASE("packing constants validate their inputs") {
  const auto g = to_explicit(testutil::triangle());
  const auto rg = reverse_greedy(g);
  CHECK_THROWS_AS(packing_constants(g, Cover{12, 0, 0}, rg.trace), std::invalid_argument);
}
