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

#include "faircore/bounds.hpp"

#include <cmath>
#include <random>

#include <doctest.h>
#include <json.hpp>

#include "testutil.hpp"

using namespace faircore::bounds;
using faircore::Rational;
using faircore::games::to_explicit;

namespace {

const AuditLine& line_named(const AuditReport& report, const std::string& name) {
  for (const auto& l : report.lines) {
    if (l.inequality == name) return l;
  }
  REQUIRE_MESSAGE(false, "missing line " << name);
  return report.lines.front();
}

}  // namespace

TEST_CASE("delta bound closed forms") {
  CHECK(delta_bound(OrderParameter(2.0), Rational(1), Rational(1)) == doctest::Approx(1.0));
  CHECK(delta_bound(OrderParameter(1.0), Rational(1), Rational(1, 2)) ==
        doctest::Approx(1.4426950408889634).epsilon(1e-12));
  CHECK(delta_bound(OrderParameter(0.5), Rational(2), Rational(1)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(delta_bound(OrderParameter(1.0), Rational(3, 2), Rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(delta_bound(OrderParameter(2.0), Rational(1, 2), Rational(1, 2)),
                  std::invalid_argument);  // alpha < 1
  CHECK_THROWS_AS(delta_bound(OrderParameter(2.0), Rational(2), Rational(2)),
                  std::invalid_argument);  // beta > 1
}

TEST_CASE("delta bound approaches log2 e near lambda = 1") {
  CHECK(std::abs(delta_bound(OrderParameter(1.0 + 1e-4), Rational(1), Rational(1)) -
                 1.4426950408889634) <= 1e-3);
  CHECK(std::abs(delta_bound(OrderParameter(1.0 - 1e-4), Rational(1), Rational(1)) -
                 1.4426950408889634) <= 1e-3);
}

TEST_CASE("delta bound is nonnegative for admissible constants") {
  for (double lambda : {0.1, 0.5, 0.9, 1.5, 2.0, 4.0}) {
    for (long long num : {1LL, 2LL, 5LL}) {
      const Rational alpha(num, 1);
      const Rational beta(1, num);
      CHECK(delta_bound(OrderParameter(lambda), alpha, beta) >= -1e-12);
    }
  }
}

TEST_CASE("reverse greedy audit on the triangle") {
  const auto g = to_explicit(testutil::triangle());

  SUBCASE("lambda = 1 hits the log2 e bound with zero gap") {
    const auto report = audit_reverse_greedy(g, OrderParameter(1.0), {}, "triangle");
    CHECK(report.all_pass());
    const auto& entropy_line = line_named(report, "reverse-greedy-entropy-bound");
    CHECK(entropy_line.note.empty());  // alpha = beta = 1, not skipped
    CHECK(entropy_line.slack == doctest::Approx(1.4426950408889634).epsilon(1e-9));
  }

  SUBCASE("lambda = 2") {
    const auto report = audit_reverse_greedy(g, OrderParameter(2.0), {}, "triangle");
    CHECK(report.all_pass());
    CHECK(line_named(report, "reverse-greedy-entropy-bound").slack == doctest::Approx(1.0));
    CHECK(line_named(report, "reverse-greedy-divergence-bound").pass);
  }
}

TEST_CASE("reverse greedy audit over random games") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 25; ++t) {
    const auto g = t % 2 == 0 ? to_explicit(testutil::random_is_game(rng, 5, 14))
                              : testutil::random_supermodular_game(rng, 5, 16);
    for (double lambda : {0.5, 1.0, 2.0, 3.0}) {
      const auto report = audit_reverse_greedy(g, OrderParameter(lambda), {}, "random");
      CHECK(report.all_pass());
    }
  }
}

TEST_CASE("is-game audit reproduces the triangle guarantees") {
  const auto report = audit_is_game(testutil::triangle(), OrderParameter(1.0), {}, "triangle");
  CHECK(report.all_pass());
  REQUIRE(report.lines.size() == 5);

  const auto& biased = line_named(report, "is-marginalist-biased-guarantee");
  CHECK(biased.lhs == doctest::Approx(2.0 / 3).epsilon(1e-9));
  // Fair_1(Sh) - 2 nu(Sh) - 1
  CHECK(biased.rhs == doctest::Approx(-1.66891868857279791).epsilon(1e-9));

  const auto& greedy = line_named(report, "is-marginalist-greedy-guarantee");
  CHECK(greedy.pass);
  CHECK(line_named(report, "is-reverse-greedy-entropy-bound").pass);
  CHECK(line_named(report, "is-biased-entropy-bound").pass);
  CHECK(line_named(report, "is-egalitarian-guarantee").pass);
}

TEST_CASE("is-game audit over random instances and orders") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 25; ++t) {
    const auto g = testutil::random_is_game(rng, 6, 14);
    for (double lambda : {0.5, 1.0, 2.0, 3.0}) {
      const auto report = audit_is_game(g, OrderParameter(lambda), {}, "random");
      CHECK(report.all_pass());
    }
  }
}

TEST_CASE("unit packing constants tie the two reverse-greedy audits together") {
  // The explicit-form audit must compute alpha = beta = 1 on IS games and
  // therefore apply the same bound audit_is_game assumes; the two entropy
  // lines then carry algebraically identical slack:
  //   H(OPT) + delta - H(RG)  ==  [H(Sh) - H(RG)] + delta - [H(Sh) - H(OPT)].
  std::mt19937_64 rng(53);
  for (int t = 0; t < 10; ++t) {
    const auto is = testutil::random_is_game(rng, 5, 12);
    for (double lambda : {0.5, 1.0, 2.0}) {
      const OrderParameter order(lambda);
      const auto explicit_report = audit_reverse_greedy(to_explicit(is), order, {}, "is");
      const auto& entropy_line = line_named(explicit_report, "reverse-greedy-entropy-bound");
      CHECK(entropy_line.note.empty());  // never skipped: constants are unit
      CHECK(entropy_line.pass);
      const auto is_report = audit_is_game(is, order, {}, "is");
      CHECK(line_named(is_report, "is-reverse-greedy-entropy-bound").slack ==
            doctest::Approx(entropy_line.slack).epsilon(1e-9));
    }
  }
}

TEST_CASE("information lemma audit") {
  const auto report = audit_information_lemmas(42, 1000);
  CHECK(report.all_pass());
  CHECK(line_named(report, "gibbs-nonnegativity").slack >= -1e-9);
  CHECK(line_named(report, "pqr-sandwich").slack >= -1e-9);
  CHECK(line_named(report, "transfer-strict-decrease").slack > 0.0);
  CHECK_THROWS_AS(audit_information_lemmas(1, 0), std::invalid_argument);
}

TEST_CASE("degenerate sandwich is exactly tight for uniform references") {
  // With P = Q the divergence gap vanishes; against a uniform R the
  // sandwich then collapses to +-nu(R) = 0 with zero slack on both sides.
  const auto u = faircore::info::normalize(std::vector<double>(4, 1.0));
  for (double lambda : {0.5, 1.0, 2.0}) {
    const OrderParameter order(lambda);
    const double gap =
        faircore::info::renyi_divergence(u, u, order) - faircore::info::renyi_divergence(u, u, order);
    CHECK(gap == 0.0);
    CHECK(faircore::info::nonuniformity(u) == 0.0);
  }
}

TEST_CASE("audit reports serialize to json lines") {
  const auto report = audit_is_game(testutil::triangle(), OrderParameter(2.0), {}, "triangle");
  const auto text = to_json_lines(report);
  std::size_t lines = 0;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("instance"));
    CHECK(j.contains("lambda"));
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));
    CHECK(j.contains("slack"));
    CHECK(j["pass"].get<bool>());
    ++lines;
  }
  CHECK(lines == report.lines.size());
}
