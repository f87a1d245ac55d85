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

#include "pmi/oracle.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "pmi/enumeration.h"

namespace pmi {
namespace {

// Plain greedy: sort what is left by weight at lambda, ties by id, and keep
// every element that stays independent.
std::vector<Element> reference_basis(const Matroid& matroid, const Weights& weights,
                                     const Rational& lambda) {
  std::vector<std::pair<Rational, Element>> keyed;
  for (Element e = 0; e < matroid.ground_size(); ++e) {
    if (!matroid.is_deleted(e)) keyed.emplace_back(weights[e].a + lambda * weights[e].b, e);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Element> basis;
  for (const auto& [w, e] : keyed) {
    basis.push_back(e);
    std::vector<Element> sorted = basis;
    std::sort(sorted.begin(), sorted.end());
    if (!matroid.is_independent(sorted)) basis.pop_back();
  }
  return basis;
}

Rational total(const std::vector<Element>& set, const Weights& weights, const Rational& lambda) {
  Rational sum = 0;
  for (Element e : set) sum += weights[e].a + lambda * weights[e].b;
  return sum;
}

void subsets(int n, int r, int from, std::vector<Element>& current,
             const std::function<void(const std::vector<Element>&)>& visit) {
  if (static_cast<int>(current.size()) == r) {
    visit(current);
    return;
  }
  for (int e = from; e <= n - (r - static_cast<int>(current.size())); ++e) {
    current.push_back(e);
    subsets(n, r, e + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

ExtendedRational oracle_value_of(const MatroidInstance& instance, const ElementSet& F,
                                 const Rational& lambda) {
  const Matroid& full = instance.matroid;
  const int rank = static_cast<int>(reference_basis(full, instance.weights, lambda).size());
  const Matroid rest = full.delete_elements(F);
  const auto basis = reference_basis(rest, instance.weights, lambda);
  if (static_cast<int>(basis.size()) < rank) return ExtendedRational::infinity();
  return ExtendedRational(total(basis, instance.weights, lambda));
}

OracleValue oracle_value(const MatroidInstance& instance, const Rational& lambda) {
  check_enumeration_cap(instance.ground_size(), instance.ell, "oracle");
  const Matroid matroid = instance.matroid.with_fresh_counter();
  const int rank = static_cast<int>(reference_basis(matroid, instance.weights, lambda).size());
  OracleValue out;
  bool first = true;
  std::vector<Element> current;
  subsets(instance.ground_size(), instance.ell, 0, current, [&](const std::vector<Element>& F) {
    ++out.subsets;
    const auto basis = reference_basis(matroid.delete_elements(F), instance.weights, lambda);
    const ExtendedRational value = static_cast<int>(basis.size()) < rank
                                       ? ExtendedRational::infinity()
                                       : ExtendedRational(total(basis, instance.weights, lambda));
    if (first || out.value < value) {
      out.value = value;
      out.argmax = F;
      first = false;
    }
  });
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (passed ? "PASS" : "FAIL") << ": " << samples << " samples, " << value_mismatches
     << " value mismatches, " << label_mismatches << " label mismatches";
  for (const SampleCheck& f : failures) {
    os << "\n  lambda=" << format_rational(f.lambda) << " (" << f.source
       << "): expected " << f.expected.to_string() << ", reported " << f.reported.to_string()
       << (f.label_ok ? "" : ", reported deletion set not optimal");
  }
  return os.str();
}

VerificationReport verify_solution(const MatroidInstance& instance,
                                   const InterdictionSolution& solution,
                                   const VerificationOptions& options) {
  check_enumeration_cap(instance.ground_size(), instance.ell, "verify");
  std::map<Rational, std::string> points;
  const Interval& domain = instance.interval;
  for (const Changepoint& c : solution.changepoints) points.emplace(c.lambda, "changepoint");
  for (const Segment& s : solution.segments) points.emplace(s.span.sample_point(), "midpoint");
  if (domain.lo) points.emplace(*domain.lo, "endpoint");
  if (domain.hi) points.emplace(*domain.hi, "endpoint");
  if (!domain.lo && !domain.hi) points.emplace(Rational(0), "midpoint");

  Rational lo = domain.lo ? *domain.lo : Rational(0);
  Rational hi = domain.hi ? *domain.hi : Rational(0);
  if (!points.empty()) {
    if (!domain.lo) lo = points.begin()->first - 10;
    if (!domain.hi) hi = points.rbegin()->first + 10;
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_samples; ++i) {
    const long den = std::uniform_int_distribution<long>(1, 97)(rng);
    const long num = std::uniform_int_distribution<long>(0, den)(rng);
    Rational lambda = lo + (hi - lo) * Rational(num, den);
    lambda.canonicalize();
    points.emplace(lambda, "random");
  }

  VerificationReport report;
  for (const auto& [lambda, source] : points) {
    SampleCheck check{lambda, source, oracle_value(instance, lambda).value,
                      solution.y.evaluate(lambda), false, true};
    check.value_ok = check.expected == check.reported;
    for (const Segment& s : solution.segments) {
      if (!s.span.contains(lambda)) continue;
      if (!(oracle_value_of(instance, s.piece.label, lambda) == check.expected)) {
        check.label_ok = false;
      }
    }
    ++report.samples;
    if (!check.value_ok) ++report.value_mismatches;
    if (!check.label_ok) ++report.label_mismatches;
    if (!check.value_ok || !check.label_ok) report.failures.push_back(std::move(check));
  }
  report.passed = report.value_mismatches == 0 && report.label_mismatches == 0;
  return report;
}

}  // namespace pmi
