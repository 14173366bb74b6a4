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

#include "faircore/infomeasures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace faircore::info {

namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

OrderParameter::OrderParameter(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("OrderParameter: lambda must be strictly positive");
  }
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  support_.reserve(probs_.size());
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > 0.0) support_.push_back(i);
  }
}

Distribution Distribution::from_probabilities(std::vector<double> probs) {
  if (probs.empty()) throw std::invalid_argument("Distribution: empty vector");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("Distribution: negative or NaN entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("Distribution: entries do not sum to 1");
  }
  return Distribution(std::move(probs));
}

Distribution normalize(const std::vector<double>& weights) {
  if (weights.empty()) throw std::invalid_argument("normalize: empty vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("normalize: negative or NaN entry");
    sum += w;
  }
  if (sum <= 0.0) throw std::invalid_argument("normalize: all entries are zero");
  std::vector<double> probs(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) probs[i] = weights[i] / sum;
  return Distribution::from_probabilities(std::move(probs));
}

Distribution normalize(const std::vector<long long>& weights) {
  std::vector<double> w(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw std::invalid_argument("normalize: negative entry");
    w[i] = static_cast<double>(weights[i]);
  }
  return normalize(w);
}

double renyi_entropy(const Distribution& d, OrderParameter order) {
  const double lambda = order.value();
  if (order.is_unit()) {
    double h = 0.0;
    for (std::size_t i : d.support()) h -= d[i] * std::log2(d[i]);
    return h;
  }
  double sum = 0.0;
  for (std::size_t i : d.support()) sum += std::pow(d[i], lambda);
  return std::log2(sum) / (1.0 - lambda);
}

double renyi_divergence(const Distribution& p, const Distribution& q, OrderParameter order) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("renyi_divergence: dimension mismatch");
  }
  const double lambda = order.value();
  if (order.is_unit()) {
    double kl = 0.0;
    for (std::size_t i : p.support()) {
      if (q[i] == 0.0) return kInf;
      kl += p[i] * std::log2(p[i] / q[i]);
    }
    return kl;
  }
  double sum = 0.0;
  for (std::size_t i : p.support()) {
    if (q[i] == 0.0) {
      if (lambda > 1.0) return kInf;
      continue;  // p_i^l q_i^{1-l} = 0 for l < 1
    }
    sum += std::pow(p[i], lambda) * std::pow(q[i], 1.0 - lambda);
  }
  if (sum == 0.0) return kInf;  // disjoint supports
  return std::log2(sum) / (lambda - 1.0);
}

double relative_entropy_gibbs(const Distribution& p, const Distribution& q,
                              OrderParameter order) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("relative_entropy_gibbs: dimension mismatch");
  }
  if (order.is_unit()) {
    throw std::invalid_argument("relative_entropy_gibbs: defined only for lambda != 1");
  }
  const double lambda = order.value();
  double cross = 0.0;
  for (std::size_t i : p.support()) {
    if (q[i] == 0.0) {
      throw std::invalid_argument("relative_entropy_gibbs: q vanishes on the support of p");
    }
    cross += std::pow(q[i], lambda - 1.0) * p[i];
  }
  double q_power = 0.0;
  for (std::size_t i : q.support()) q_power += std::pow(q[i], lambda);
  double p_power = 0.0;
  for (std::size_t i : p.support()) p_power += std::pow(p[i], lambda);
  return std::log2(cross) / (1.0 - lambda) + std::log2(q_power) / lambda -
         std::log2(p_power) / (lambda * (1.0 - lambda));
}

double nonuniformity(const Distribution& r) {
  if (r.support().empty()) throw std::invalid_argument("nonuniformity: empty support");
  double lo = kInf;
  double hi = 0.0;
  for (std::size_t i : r.support()) {
    lo = std::min(lo, r[i]);
    hi = std::max(hi, r[i]);
  }
  return std::log2(hi / lo);
}

}  // namespace faircore::info
