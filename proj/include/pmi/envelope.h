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

// Exact piecewise-linear functions of the parameter with values in Q u {+inf},
// each piece carrying a label (the deletion set that produced it), and their
// labeled pointwise maximum.

#ifndef PMI_ENVELOPE_H_
#define PMI_ENVELOPE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pmi/matroid.h"
#include "pmi/rational.h"

namespace pmi {

struct Piece {
  std::optional<Line> line;  // empty: the piece is +inf
  ElementSet label;

  static Piece finite(Line line, ElementSet label) { return {std::move(line), std::move(label)}; }
  static Piece infinite(ElementSet label) { return {std::nullopt, std::move(label)}; }

  bool is_infinite() const { return !line.has_value(); }
  ExtendedRational at(const Rational& lambda) const {
    return line ? ExtendedRational(line->at(lambda)) : ExtendedRational::infinity();
  }
  bool same_line(const Piece& other) const { return line == other.line; }

  friend bool operator==(const Piece& x, const Piece& y) {
    return x.line == y.line && x.label == y.label;
  }
};

// Pieces on closed sub-intervals [breaks[i-1], breaks[i]] of the domain.
// Invariants: breaks strictly increasing and strictly inside the domain;
// pieces.size() == breaks.size() + 1.
class PiecewiseLinear {
 public:
  PiecewiseLinear(Interval domain, std::vector<Rational> breaks, std::vector<Piece> pieces);

  static PiecewiseLinear single(Interval domain, Piece piece) {
    return PiecewiseLinear(std::move(domain), {}, {std::move(piece)});
  }

  const Interval& domain() const { return domain_; }
  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // Closed span of piece i.
  Interval span(std::size_t i) const;

  // Index of the piece whose closed span contains lambda; at a break the left
  // piece. Throws std::out_of_range outside the domain.
  std::size_t piece_index(const Rational& lambda) const;

  // Value at lambda. At a break the larger of the two adjacent pieces, so the
  // result is the pointwise maximum even across a discontinuity.
  ExtendedRational evaluate(const Rational& lambda) const;

  // Merges neighbouring pieces with equal line and label.
  void normalize();

  friend bool operator==(const PiecewiseLinear& x, const PiecewiseLinear& y) {
    return x.domain_ == y.domain_ && x.breaks_ == y.breaks_ && x.pieces_ == y.pieces_;
  }

 private:
  Interval domain_;
  std::vector<Rational> breaks_;
  std::vector<Piece> pieces_;
};

// Joins functions on consecutive domains ([a,b], [b,c], ...) into one.
PiecewiseLinear concatenate(std::span<const PiecewiseLinear> parts);

ExtendedRational evaluate(const PiecewiseLinear& f, const Rational& lambda);

// Same domain and the same value at every lambda (labels ignored). Decided
// exactly by comparing at every break, between consecutive breaks and at two
// points on each unbounded end.
bool equal_values(const PiecewiseLinear& f, const PiecewiseLinear& g);

struct EnvelopeDiagnostics {
  // Sub-intervals on which two differently labeled inputs coincided exactly;
  // the smaller label was kept.
  std::size_t coincident_ties = 0;
};

// Labeled pointwise maximum of two functions on the same domain. Where the
// maximum is attained by both on a whole sub-interval, the lexicographically
// smaller label wins.
PiecewiseLinear upper_envelope(const PiecewiseLinear& f, const PiecewiseLinear& g,
                               EnvelopeDiagnostics* diagnostics = nullptr);

// Divide-and-conquer pairwise merge. Throws std::invalid_argument on an empty
// list or mismatched domains.
PiecewiseLinear upper_envelope(std::span<const PiecewiseLinear> functions,
                               EnvelopeDiagnostics* diagnostics = nullptr);

enum class ChangepointKind { kBreakpoint, kInterdictionPoint };

const char* to_string(ChangepointKind kind);

struct Changepoint {
  Rational lambda;
  ChangepointKind kind = ChangepointKind::kBreakpoint;
  ElementSet label_before;
  ElementSet label_after;
};

// Every point where the line of the function changes. A change of label makes
// it an interdiction point, otherwise it is a breakpoint. A label change with
// an unchanged line is not a changepoint.
std::vector<Changepoint> classify_changepoints(const PiecewiseLinear& envelope);

}  // namespace pmi

#endif  // PMI_ENVELOPE_H_
