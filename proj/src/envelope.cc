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

#include "pmi/envelope.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pmi {

PiecewiseLinear::PiecewiseLinear(Interval domain, std::vector<Rational> breaks,
                                 std::vector<Piece> pieces)
    : domain_(std::move(domain)), breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (!domain_.is_valid()) throw std::invalid_argument("empty domain");
  if (pieces_.size() != breaks_.size() + 1) {
    throw std::invalid_argument("piece count must be one more than break count");
  }
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (!domain_.contains_interior(breaks_[i])) {
      throw std::invalid_argument("break outside the domain interior");
    }
    if (i > 0 && !(breaks_[i - 1] < breaks_[i])) {
      throw std::invalid_argument("breaks must be strictly increasing");
    }
  }
}

Interval PiecewiseLinear::span(std::size_t i) const {
  Interval out;
  out.lo = i == 0 ? domain_.lo : std::optional<Rational>(breaks_[i - 1]);
  out.hi = i == breaks_.size() ? domain_.hi : std::optional<Rational>(breaks_[i]);
  return out;
}

std::size_t PiecewiseLinear::piece_index(const Rational& lambda) const {
  if (!domain_.contains(lambda)) throw std::out_of_range("lambda outside the domain");
  return static_cast<std::size_t>(std::lower_bound(breaks_.begin(), breaks_.end(), lambda) -
                                  breaks_.begin());
}

ExtendedRational PiecewiseLinear::evaluate(const Rational& lambda) const {
  const std::size_t i = piece_index(lambda);
  ExtendedRational value = pieces_[i].at(lambda);
  if (i < breaks_.size() && breaks_[i] == lambda) {
    value = std::max(value, pieces_[i + 1].at(lambda));
  }
  return value;
}

void PiecewiseLinear::normalize() {
  std::vector<Rational> breaks;
  std::vector<Piece> pieces;
  pieces.push_back(std::move(pieces_.front()));
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (pieces.back() == pieces_[i + 1]) continue;
    breaks.push_back(std::move(breaks_[i]));
    pieces.push_back(std::move(pieces_[i + 1]));
  }
  breaks_ = std::move(breaks);
  pieces_ = std::move(pieces);
}

PiecewiseLinear concatenate(std::span<const PiecewiseLinear> parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to concatenate");
  std::vector<Rational> breaks;
  std::vector<Piece> pieces;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const PiecewiseLinear& part = parts[p];
    if (p > 0) {
      const auto& junction = part.domain().lo;
      if (!junction || parts[p - 1].domain().hi != junction) {
        throw std::invalid_argument("concatenated domains are not consecutive");
      }
      breaks.push_back(*junction);
    }
    breaks.insert(breaks.end(), part.breaks().begin(), part.breaks().end());
    pieces.insert(pieces.end(), part.pieces().begin(), part.pieces().end());
  }
  Interval domain{parts.front().domain().lo, parts.back().domain().hi};
  // Degenerate single-point parts would repeat a break; drop their pieces.
  std::vector<Rational> clean_breaks;
  std::vector<Piece> clean_pieces{pieces.front()};
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (!clean_breaks.empty() && clean_breaks.back() == breaks[i]) {
      clean_pieces.back() = pieces[i + 1];
      continue;
    }
    if (!domain.contains_interior(breaks[i])) {
      clean_pieces.back() = pieces[i + 1];
      continue;
    }
    clean_breaks.push_back(breaks[i]);
    clean_pieces.push_back(pieces[i + 1]);
  }
  PiecewiseLinear out(std::move(domain), std::move(clean_breaks), std::move(clean_pieces));
  out.normalize();
  return out;
}

ExtendedRational evaluate(const PiecewiseLinear& f, const Rational& lambda) {
  return f.evaluate(lambda);
}

namespace {

struct Builder {
  std::vector<Rational> breaks;
  std::vector<Piece> pieces;

  // Appends a piece starting at `start` (ignored for the very first piece).
  void push(const std::optional<Rational>& start, const Piece& piece) {
    if (pieces.empty()) {
      pieces.push_back(piece);
      return;
    }
    if (pieces.back() == piece) return;
    breaks.push_back(*start);
    pieces.push_back(piece);
  }
};

const Piece& pick_tie(const Piece& p, const Piece& q, EnvelopeDiagnostics* diagnostics) {
  if (p.label != q.label && diagnostics != nullptr) ++diagnostics->coincident_ties;
  return q.label < p.label ? q : p;
}

// Appends max(p, q) on the open sub-interval (lo, hi).
void append_max(const Piece& p, const Piece& q, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi, Builder& out,
                EnvelopeDiagnostics* diagnostics) {
  if (p.is_infinite() || q.is_infinite()) {
    if (p.is_infinite() && q.is_infinite()) {
      out.push(lo, pick_tie(p, q, diagnostics));
    } else {
      out.push(lo, p.is_infinite() ? p : q);
    }
    return;
  }
  const Rational ds = p.line->slope - q.line->slope;
  const Rational di = p.line->intercept - q.line->intercept;
  if (ds == 0) {
    if (di == 0) {
      out.push(lo, pick_tie(p, q, diagnostics));
    } else {
      out.push(lo, di > 0 ? p : q);
    }
    return;
  }
  const Rational cross = -di / ds;
  const bool after_lo = !lo || *lo < cross;
  const bool before_hi = !hi || cross < *hi;
  // Right of the crossing p - q has the sign of ds.
  const Piece& right = ds > 0 ? p : q;
  const Piece& left = ds > 0 ? q : p;
  if (after_lo && before_hi) {
    out.push(lo, left);
    out.push(cross, right);
  } else if (!after_lo) {
    out.push(lo, right);
  } else {
    out.push(lo, left);
  }
}

}  // namespace

PiecewiseLinear upper_envelope(const PiecewiseLinear& f, const PiecewiseLinear& g,
                               EnvelopeDiagnostics* diagnostics) {
  if (!(f.domain() == g.domain())) throw std::invalid_argument("envelope of different domains");
  std::vector<Rational> cuts;
  cuts.reserve(f.breaks().size() + g.breaks().size());
  std::merge(f.breaks().begin(), f.breaks().end(), g.breaks().begin(), g.breaks().end(),
             std::back_inserter(cuts));
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Builder out;
  std::size_t fi = 0;
  std::size_t gi = 0;
  for (std::size_t t = 0; t <= cuts.size(); ++t) {
    std::optional<Rational> lo = t == 0 ? f.domain().lo : std::optional<Rational>(cuts[t - 1]);
    std::optional<Rational> hi = t == cuts.size() ? f.domain().hi : std::optional<Rational>(cuts[t]);
    if (t > 0) {
      if (fi < f.breaks().size() && f.breaks()[fi] == cuts[t - 1]) ++fi;
      if (gi < g.breaks().size() && g.breaks()[gi] == cuts[t - 1]) ++gi;
    }
    append_max(f.pieces()[fi], g.pieces()[gi], lo, hi, out, diagnostics);
  }
  PiecewiseLinear result(f.domain(), std::move(out.breaks), std::move(out.pieces));
  result.normalize();
  return result;
}

namespace {

PiecewiseLinear envelope_range(std::span<const PiecewiseLinear> functions,
                               EnvelopeDiagnostics* diagnostics) {
  if (functions.size() == 1) return functions.front();
  const std::size_t half = functions.size() / 2;
  return upper_envelope(envelope_range(functions.first(half), diagnostics),
                        envelope_range(functions.subspan(half), diagnostics), diagnostics);
}

}  // namespace

PiecewiseLinear upper_envelope(std::span<const PiecewiseLinear> functions,
                               EnvelopeDiagnostics* diagnostics) {
  if (functions.empty()) throw std::invalid_argument("envelope of an empty family");
  for (const auto& f : functions) {
    if (!(f.domain() == functions.front().domain())) {
      throw std::invalid_argument("envelope of different domains");
    }
  }
  PiecewiseLinear out = envelope_range(functions, diagnostics);
  out.normalize();
  return out;
}

const char* to_string(ChangepointKind kind) {
  return kind == ChangepointKind::kBreakpoint ? "breakpoint" : "interdiction";
}

std::vector<Changepoint> classify_changepoints(const PiecewiseLinear& envelope) {
  std::vector<Changepoint> out;
  const auto& pieces = envelope.pieces();
  for (std::size_t i = 0; i < envelope.breaks().size(); ++i) {
    const Piece& before = pieces[i];
    const Piece& after = pieces[i + 1];
    if (before.same_line(after)) continue;
    out.push_back(Changepoint{envelope.breaks()[i],
                              before.label == after.label ? ChangepointKind::kBreakpoint
                                                          : ChangepointKind::kInterdictionPoint,
                              before.label, after.label});
  }
  return out;
}

bool equal_values(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  if (!(f.domain() == g.domain())) return false;
  std::vector<Rational> points = f.breaks();
  points.insert(points.end(), g.breaks().begin(), g.breaks().end());
  const Interval& domain = f.domain();
  if (domain.lo) points.push_back(*domain.lo);
  if (domain.hi) points.push_back(*domain.hi);
  if (points.empty()) points.push_back(domain.sample_point());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rational> samples = points;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    samples.push_back((points[i] + points[i + 1]) / 2);
  }
  if (!domain.lo) {
    samples.push_back(points.front() - 1);
    samples.push_back(points.front() - 2);
  }
  if (!domain.hi) {
    samples.push_back(points.back() + 1);
    samples.push_back(points.back() + 2);
  }
  return std::all_of(samples.begin(), samples.end(), [&](const Rational& x) {
    return f.evaluate(x) == g.evaluate(x);
  });
}

}  // namespace pmi
