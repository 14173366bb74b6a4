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

#pragma once

#include <stdexcept>
#include <vector>

#include "faircore/algorithms.hpp"
#include "faircore/games.hpp"
#include "faircore/infomeasures.hpp"
#include "faircore/rational.hpp"

namespace faircore::exact {

using games::Cover;
using games::ExplicitGame;
using games::ISGame;
using games::Money;
using info::Distribution;
using info::OrderParameter;

/// Raised when an instance exceeds the brute-force size caps.
class CapsExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationCaps {
  int max_players = 8;
  Money max_total = 30;
};

/// All integer covers of g (integer core allocations), in lexicographic
/// order. Candidates are generated depth-first with per-player utopia
/// bounds and a remaining-sum cut, then filtered by the full core check.
/// With threads > 1 the first player's range is partitioned and the chunks
/// merged in order, so the output matches the sequential run.
std::vector<Cover> enumerate_covers(const ExplicitGame& g, const EnumerationCaps& caps = {},
                                    int threads = 1);

/// Covers that are vertices of the core polytope: those whose tight
/// constraints reach full rank, decided by exact integer elimination.
std::vector<Cover> extremal_covers(const ExplicitGame& g, const std::vector<Cover>& covers);

/// Renyi entropy of the normalized cover.
double cover_entropy(const Cover& c, OrderParameter order);

struct MinEntropyCovers {
  std::vector<Cover> argmin;
  double entropy = 0.0;
};

/// Minimum over an explicit cover list; ties within 1e-9 are all reported.
MinEntropyCovers min_entropy_over(const std::vector<Cover>& covers, OrderParameter order);

MinEntropyCovers min_entropy_cover(const ExplicitGame& g, OrderParameter order,
                                   const EnumerationCaps& caps = {}, int threads = 1);

struct MinEntropyOrientations {
  std::vector<alg::Orientation> argmin;
  double entropy = 0.0;
};

/// Exhausts all 2^|E| orientations (|E| <= 20) and keeps the minimizers of
/// the induced cover's Renyi entropy.
MinEntropyOrientations min_entropy_orientation(const ISGame& g, OrderParameter order);

struct FairnessResult {
  double value = 0.0;
  std::vector<Cover> argmax_covers;
  double lambda = 1.0;
  Distribution baseline;
};

/// Maximum over an explicit cover list of D(cover || baseline).
FairnessResult fairness_over(const std::vector<Cover>& covers, const Distribution& baseline,
                             OrderParameter order);

/// Worst-case fairness: the maximum Renyi divergence from the baseline over
/// all integer covers, together with every maximizing cover. The baseline
/// must have full support.
FairnessResult worst_case_fairness(const ExplicitGame& g, const Distribution& baseline,
                                   OrderParameter order, const EnumerationCaps& caps = {},
                                   int threads = 1);

/// Decision form: worst-case fairness >= eta - 1e-9.
bool decide_fairness(const ExplicitGame& g, const Distribution& baseline, OrderParameter order,
                     double eta, const EnumerationCaps& caps = {});

struct PackingConstants {
  Rational alpha{1};
  Rational beta{1};
  alg::ZDecomposition alpha_witness;
  alg::ZDecomposition beta_witness;
};

/// Packing constants of a cover against a reverse-greedy trace:
///   alpha = min over integer splits Z of max_r (sum_j Z_r^j) / delta_r,
///   beta  = max over integer splits Z of min_r (sum_j Z_r^j) / delta_r,
/// where Z ranges over column sums X_j with 0 <= Z_r^j <= a_r^j. Both are
/// searched over the finite candidate set {k/delta_r} by binary search;
/// each feasibility test is an integer transportation problem. Exact
/// arithmetic throughout; witnesses attain the returned constants.
PackingConstants packing_constants(const ExplicitGame& g, const Cover& x,
                                   const alg::GreedyTrace& trace);

}  // namespace faircore::exact
