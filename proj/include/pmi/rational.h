// Copyright 2026 The PMI Authors
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

// Exact arithmetic primitives shared by every module: arbitrary-precision
// rationals, the rationals extended by +infinity, closed parameter intervals
// with optional infinite ends, and affine functions of the parameter.

#ifndef PMI_RATIONAL_H_
#define PMI_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace pmi {

using Rational = mpq_class;

// Accepts "p/q", integers and plain decimals ("-3", "0.25", "1e2" is not
// accepted). Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0, e.g. "5/1", "-7/2".
std::string format_rational(const Rational& value);

// An element of Q united with {+inf}. Infinity compares above every rational.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtendedRational(long value) : value_(value) {}                 // NOLINT

  static ExtendedRational infinity() {
    ExtendedRational result;
    result.infinite_ = true;
    return result;
  }

  bool is_infinite() const { return infinite_; }
  // Precondition: !is_infinite().
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtendedRational& x, const ExtendedRational& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
    return x.value_ == y.value_;
  }
  friend bool operator<(const ExtendedRational& x, const ExtendedRational& y) {
    if (x.infinite_) return false;
    if (y.infinite_) return true;
    return x.value_ < y.value_;
  }
  friend bool operator>(const ExtendedRational& x, const ExtendedRational& y) { return y < x; }
  friend bool operator<=(const ExtendedRational& x, const ExtendedRational& y) { return !(y < x); }
  friend bool operator>=(const ExtendedRational& x, const ExtendedRational& y) { return !(x < y); }

  std::string to_string() const { return infinite_ ? "inf" : format_rational(value_); }

 private:
  bool infinite_ = false;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x);

// Closed interval of the parameter; an empty optional is an infinite end.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Interval real_line() { return {}; }
  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }

  bool contains(const Rational& x) const {
    return (!lo || *lo <= x) && (!hi || x <= *hi);
  }
  // Strictly inside, i.e. not at a finite endpoint.
  bool contains_interior(const Rational& x) const {
    return (!lo || *lo < x) && (!hi || x < *hi);
  }
  bool is_valid() const { return !lo || !hi || *lo <= *hi; }

  // Deterministic interior sample: the midpoint when bounded, one unit beyond
  // the finite end when half-bounded, zero for the whole line.
  Rational sample_point() const;

  friend bool operator==(const Interval& x, const Interval& y) {
    return x.lo == y.lo && x.hi == y.hi;
  }
};

std::string format_bound(const std::optional<Rational>& bound, bool upper);
// "-inf" is accepted only for a lower bound, "inf"/"+inf" only for an upper.
std::optional<Rational> parse_bound(std::string_view text, bool upper);

// The affine function intercept + slope * lambda.
struct Line {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& lambda) const { return intercept + slope * lambda; }

  friend bool operator==(const Line& x, const Line& y) {
    return x.slope == y.slope && x.intercept == y.intercept;
  }
  friend bool operator!=(const Line& x, const Line& y) { return !(x == y); }
};

}  // namespace pmi

#endif  // PMI_RATIONAL_H_
