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

#include "pmi/rational.h"

#include <cctype>
#include <stdexcept>

namespace pmi {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

std::string strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  const std::string text = strip(raw);
  const auto bad = [&] { return std::invalid_argument("malformed rational '" + text + "'"); };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    std::string_view num(text.data(), slash);
    std::string_view den(text.data() + slash + 1, text.size() - slash - 1);
    if (!is_integer_literal(num) || !all_digits(den)) throw bad();
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    std::string_view whole(text.data(), dot);
    std::string_view frac(text.data() + dot + 1, text.size() - dot - 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) throw bad();
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class numerator = (whole.empty() ? mpz_class(0) : parse_integer(whole)) * scale +
                          parse_integer(frac);
    if (negative) numerator = -numerator;
    Rational q(numerator, scale);
    q.canonicalize();
    return q;
  }
  if (!is_integer_literal(text)) throw bad();
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x) {
  return os << x.to_string();
}

Rational Interval::sample_point() const {
  if (lo && hi) return Rational((*lo + *hi) / 2);
  if (lo) return Rational(*lo + 1);
  if (hi) return Rational(*hi - 1);
  return Rational(0);
}

std::string format_bound(const std::optional<Rational>& bound, bool upper) {
  if (!bound) return upper ? "inf" : "-inf";
  return format_rational(*bound);
}

std::optional<Rational> parse_bound(std::string_view raw, bool upper) {
  const std::string text = strip(raw);
  if (text == "inf" || text == "+inf") {
    if (!upper) throw std::invalid_argument("lower bound cannot be +inf");
    return std::nullopt;
  }
  if (text == "-inf") {
    if (upper) throw std::invalid_argument("upper bound cannot be -inf");
    return std::nullopt;
  }
  return parse_rational(text);
}

}  // namespace pmi
