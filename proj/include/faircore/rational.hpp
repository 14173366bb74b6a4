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

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace faircore {

/// Exact rational number over 64-bit integers. Always stored normalized:
/// denominator > 0 and gcd(|num|, den) == 1. Intermediate products use
/// 128-bit arithmetic; results that do not fit 64 bits after reduction throw.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    assign(static_cast<__int128>(numerator), static_cast<__int128>(denominator));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Builds num/den from 128-bit parts, reducing first. Throws on overflow.
  static Rational from128(__int128 numerator, __int128 denominator) {
    Rational r;
    r.assign(numerator, denominator);
    return r;
  }

 private:
  using i128 = __int128;

  void assign(__int128 numerator, __int128 denominator) {
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    __int128 g = gcd128(numerator < 0 ? -numerator : numerator, denominator);
    if (g > 1) {
      numerator /= g;
      denominator /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (numerator > kMax || numerator < -kMax || denominator > kMax) {
      throw std::overflow_error("Rational: value does not fit 64 bits after reduction");
    }
    num_ = static_cast<long long>(numerator);
    den_ = static_cast<long long>(denominator);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace faircore
