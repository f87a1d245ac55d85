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

// Parametric weights w(e, lambda) = a_e + lambda * b_e and the machinery built
// on them: equality points, the canonical element order at a parameter value,
// greedy minimum bases, replacement elements, most vital elements and the
// parametric minimum-basis sweep.
//
// Every ordering decision is made by ElementOrder: elements are compared by
// weight at lambda, then by id. Inside a cell between consecutive equality
// points this order is constant, so a basis computed at any sample point of the
// cell is valid on the whole cell.

#ifndef PMI_PARAMETRIC_H_
#define PMI_PARAMETRIC_H_

#include <optional>
#include <span>
#include <vector>

#include "pmi/matroid.h"
#include "pmi/rational.h"

namespace pmi {

struct ParametricWeight {
  Rational a;  // intercept
  Rational b;  // slope

  Rational at(const Rational& lambda) const { return a + lambda * b; }

  friend bool operator==(const ParametricWeight& x, const ParametricWeight& y) {
    return x.a == y.a && x.b == y.b;
  }
};

using Weights = std::vector<ParametricWeight>;

Rational weight_at(const ParametricWeight& w, const Rational& lambda);

// lambda(leaving -> entering): leaving is strictly cheaper before lambda and
// strictly more expensive after it.
struct EqualityPoint {
  Rational lambda;
  Element leaving = -1;
  Element entering = -1;

  friend bool operator==(const EqualityPoint& x, const EqualityPoint& y) {
    return x.lambda == y.lambda && x.leaving == y.leaving && x.entering == y.entering;
  }
};

// Empty when the two lines are parallel (including identical).
std::optional<EqualityPoint> equality_point(Element e, const ParametricWeight& we, Element f,
                                            const ParametricWeight& wf);

// All equality points strictly inside the interval, ascending in lambda.
// Events sharing a lambda are emitted as a sequence of adjacent transpositions
// of the element order (a bubble sort of each group of lines meeting at that
// point), which is the order a symbolic perturbation separating them would
// produce. Every intermediate order in the sequence is therefore a valid total
// order and every event swaps two neighbours.
std::vector<EqualityPoint> all_equality_points(std::span<const ParametricWeight> weights,
                                               const Interval& interval);

// Sorted distinct lambda values of an event list.
std::vector<Rational> distinct_lambdas(std::span<const EqualityPoint> events);

// Total order on the ground set.
class ElementOrder {
 public:
  // Canonical order at lambda: by weight at lambda, then by id.
  static ElementOrder at(std::span<const ParametricWeight> weights, const Rational& lambda);
  // Arbitrary explicit order, first element smallest.
  static ElementOrder from_sequence(std::vector<Element> sequence, Rational lambda);

  const Rational& lambda() const { return lambda_; }
  const std::vector<Element>& sequence() const { return sequence_; }
  int position(Element e) const { return position_[e]; }
  bool less(Element x, Element y) const { return position_[x] < position_[y]; }

  // Exchanges two neighbouring elements; throws std::logic_error otherwise.
  void swap_adjacent(Element x, Element y);

 private:
  Rational lambda_;
  std::vector<Element> sequence_;
  std::vector<int> position_;
};

// Sum of the weights of a set, as a line in lambda.
Line set_weight(std::span<const ParametricWeight> weights, const ElementSet& set);

// Greedy minimum-weight maximal independent set of the (possibly deleted)
// matroid. Its size is below the full rank exactly when the deletions destroyed
// every basis of full rank; callers treat that as the +infinity case.
ElementSet greedy_min_basis(const Matroid& matroid, const ElementOrder& order);

// Non-basis elements r with basis - e + r independent. At most m - k oracle
// calls. Precondition: e in basis.
ElementSet replacement_candidates(const Matroid& matroid, const ElementSet& basis, Element e);

// The cheapest replacement candidate under the order, or empty when e is a
// coloop of the matroid. Scans candidates in ascending order and stops at the
// first independent exchange.
std::optional<Element> replacement_element(const Matroid& matroid, const ElementSet& basis,
                                           Element e, const ElementOrder& order);

struct VitalElement {
  Element element = -1;
  // w(r(e)) - w(e) at the order's lambda; infinite when e has no replacement.
  ExtendedRational increase;
};

// Maximizer of the replacement increase over the basis (ties to the smaller
// id). Empty only for an empty basis.
std::optional<VitalElement> most_vital_element(const Matroid& matroid, const ElementSet& basis,
                                               std::span<const ParametricWeight> weights,
                                               const ElementOrder& order);

struct InterdictedBasis {
  ElementSet basis;
  bool rank_deficient = false;
};

// Deletes the elements of F from the matroid one at a time, in the given
// order, replacing each basis element by its replacement element. Equals the
// greedy basis of matroid minus F for every deletion order.
InterdictedBasis interdicted_basis_via_replacement(const Matroid& matroid, const ElementSet& basis,
                                                   std::span<const Element> F,
                                                   const ElementOrder& order);

// A closed sub-interval between consecutive event values, with the sample
// point used to fix the element order on it.
struct Cell {
  Interval span;
  Rational sample;
};

// Cells tiling the interval, split at the given strictly increasing values.
std::vector<Cell> make_cells(const Interval& interval, std::span<const Rational> cuts);

struct SweepCell {
  Interval span;
  ElementSet basis;
  Line value;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // adjacent cells differ in basis
  int rank = 0;                  // size of every basis in the sweep
  std::size_t swaps = 0;
};

// Parametric minimum-basis sweep: the greedy basis on the first cell, then one
// independence test of B - e + f per event lambda(e -> f) with e in B and f
// outside.
SweepResult parametric_sweep(const Matroid& matroid, std::span<const ParametricWeight> weights,
                             const Interval& interval);
// Same, reusing a precomputed event list (from all_equality_points over the
// full ground set; events naming deleted elements are skipped).
SweepResult parametric_sweep(const Matroid& matroid, std::span<const ParametricWeight> weights,
                             const Interval& interval, std::span<const EqualityPoint> events);

}  // namespace pmi

#endif  // PMI_PARAMETRIC_H_
