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

#include <cstddef>
#include <vector>

namespace faircore::info {

/// Entropy order parameter. Strictly positive; 1 selects the Shannon/KL
/// limits and is matched exactly.
class OrderParameter {
 public:
  explicit OrderParameter(double lambda);
  double value() const { return lambda_; }
  bool is_unit() const { return lambda_ == 1.0; }

 private:
  double lambda_;
};

/// Discrete probability distribution over players. Entries are nonnegative
/// and sum to 1 within 1e-9; the support is the index set of strictly
/// positive entries.
class Distribution {
 public:
  static Distribution from_probabilities(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  const std::vector<std::size_t>& support() const { return support_; }
  bool full_support() const { return support_.size() == probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  explicit Distribution(std::vector<double> probs);

  std::vector<double> probs_;
  std::vector<std::size_t> support_;
};

/// Scales a nonnegative weight vector to a distribution. Rejects vectors
/// with a negative entry or an all-zero total.
Distribution normalize(const std::vector<double>& weights);
Distribution normalize(const std::vector<long long>& weights);

/// Renyi entropy of order lambda, in bits:
///   H_l(p) = 1/(1-l) * log2(sum_i p_i^l)      for l != 1,
///   H_1(p) = -sum_i p_i log2 p_i               (0 log 0 = 0).
/// Sums range over the support. Lies in [0, log2 n].
double renyi_entropy(const Distribution& d, OrderParameter order);

/// Renyi divergence of order lambda, in bits:
///   D_l(p||q) = 1/(l-1) * log2(sum_i p_i^l q_i^{1-l})  for l != 1,
///   D_1(p||q) = sum_i p_i log2(p_i/q_i)                 (KL).
/// Terms with p_i = 0 contribute nothing. If p_i > 0 while q_i = 0 the
/// result is +infinity for l >= 1; for l < 1 such terms contribute 0
/// (the result is still +infinity when the supports are disjoint).
double renyi_divergence(const Distribution& p, const Distribution& q, OrderParameter order);

/// Discrete Renyi relative entropy of order lambda != 1, in bits:
///   h_l[p,q] = 1/(1-l) log2(sum q_i^{l-1} p_i)
///            + 1/l     log2(sum q_i^l)
///            - 1/(l(1-l)) log2(sum p_i^l).
/// Requires q_i > 0 wherever p_i > 0. Always nonnegative.
double relative_entropy_gibbs(const Distribution& p, const Distribution& q, OrderParameter order);

/// log2 of the ratio between the largest and smallest positive mass.
double nonuniformity(const Distribution& r);

}  // namespace faircore::info
