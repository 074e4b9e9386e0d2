// Copyright 2026 The qutrit-witnesses Authors
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

#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qutrit {

/// Exact fraction over int64, always reduced with a positive denominator.
/// Only meant for the small denominators that show up in witness displays;
/// overflow is detected and reported, not worked around.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0)
      throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return double(num_) / double(den_); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(Rational x, Rational y) {
    return {checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
            checked_mul(x.den_, y.den_)};
  }
  friend Rational operator-(Rational x) { return {-x.num_, x.den_}; }
  friend Rational operator-(Rational x, Rational y) { return x + (-y); }
  friend Rational operator*(Rational x, Rational y) {
    return {checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_)};
  }
  friend Rational operator/(Rational x, Rational y) {
    if (y.num_ == 0)
      throw std::domain_error("Rational: division by zero");
    return {checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_)};
  }
  Rational &operator+=(Rational o) { return *this = *this + o; }
  Rational &operator-=(Rational o) { return *this = *this - o; }
  Rational &operator*=(Rational o) { return *this = *this * o; }

  friend bool operator==(Rational x, Rational y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend auto operator<=>(Rational x, Rational y) {
    return static_cast<__int128>(x.num_) * y.den_ <=> static_cast<__int128>(y.num_) * x.den_;
  }

  /// Parses "p", "p/q", or a finite decimal such as "-0.125".
  static std::optional<Rational> parse(std::string_view s) {
    if (s.empty())
      return std::nullopt;
    try {
      if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto n = parse_int(s.substr(0, slash));
        auto d = parse_int(s.substr(slash + 1));
        if (!n || !d || *d == 0)
          return std::nullopt;
        return Rational(*n, *d);
      }
      bool neg = false;
      std::size_t i = 0;
      if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
      }
      std::int64_t num = 0, den = 1;
      bool seen_dot = false, seen_digit = false;
      for (; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == '.' && !seen_dot) {
          seen_dot = true;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          return std::nullopt;
        seen_digit = true;
        num = checked_add(checked_mul(num, 10), ch - '0');
        if (seen_dot)
          den = checked_mul(den, 10);
      }
      if (!seen_digit)
        return std::nullopt;
      return Rational(neg ? -num : num, den);
    } catch (const std::overflow_error &) {
      return std::nullopt;
    }
  }

private:
  static std::optional<std::int64_t> parse_int(std::string_view s) {
    if (s.empty())
      return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
      return std::nullopt;
    std::int64_t v = 0;
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        return std::nullopt;
      v = checked_add(checked_mul(v, 10), s[k] - '0');
    }
    return s[0] == '-' ? -v : v;
  }

  static std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
      throw std::overflow_error("Rational: overflow");
    return r;
  }
  static std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
      throw std::overflow_error("Rational: overflow");
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace qutrit
