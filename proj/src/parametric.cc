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

#include "pmi/parametric.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pmi {

Rational weight_at(const ParametricWeight& w, const Rational& lambda) { return w.at(lambda); }

std::optional<EqualityPoint> equality_point(Element e, const ParametricWeight& we, Element f,
                                            const ParametricWeight& wf) {
  if (e == f) throw std::invalid_argument("equality point of an element with itself");
  if (we.b == wf.b) return std::nullopt;
  Rational lambda = (wf.a - we.a) / (we.b - wf.b);
  // The steeper line is the cheaper one before the crossing.
  if (we.b > wf.b) return EqualityPoint{std::move(lambda), e, f};
  return EqualityPoint{std::move(lambda), f, e};
}

namespace {

// Emits the adjacent transpositions that take the lines of one group from
// their order just before lambda to their order just after it.
void emit_group(std::span<const ParametricWeight> weights, const Rational& lambda,
                std::vector<Element> involved, std::vector<EqualityPoint>& out) {
  std::sort(involved.begin(), involved.end());
  involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
  std::map<Rational, std::vector<Element>> bundles;
  for (Element e : involved) bundles[weights[e].at(lambda)].push_back(e);
  for (auto& [value, bundle] : bundles) {
    // Before lambda: steeper first; identical lines keep id order throughout.
    std::sort(bundle.begin(), bundle.end(), [&](Element x, Element y) {
      if (weights[x].b != weights[y].b) return weights[x].b > weights[y].b;
      return x < y;
    });
    const auto after_less = [&](Element x, Element y) {
      if (weights[x].b != weights[y].b) return weights[x].b < weights[y].b;
      return x < y;
    };
    for (std::size_t pass = 0; pass < bundle.size(); ++pass) {
      bool swapped = false;
      for (std::size_t i = 0; i + 1 < bundle.size(); ++i) {
        if (after_less(bundle[i + 1], bundle[i])) {
          out.push_back(EqualityPoint{lambda, bundle[i], bundle[i + 1]});
          std::swap(bundle[i], bundle[i + 1]);
          swapped = true;
        }
      }
      if (!swapped) break;
    }
  }
}

}  // namespace

std::vector<EqualityPoint> all_equality_points(std::span<const ParametricWeight> weights,
                                               const Interval& interval) {
  const int m = static_cast<int>(weights.size());
  std::vector<EqualityPoint> raw;
  for (Element e = 0; e < m; ++e) {
    for (Element f = e + 1; f < m; ++f) {
      auto point = equality_point(e, weights[e], f, weights[f]);
      if (point && interval.contains_interior(point->lambda)) raw.push_back(std::move(*point));
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const EqualityPoint& x, const EqualityPoint& y) { return x.lambda < y.lambda; });
  std::vector<EqualityPoint> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    std::vector<Element> involved;
    while (j < raw.size() && raw[j].lambda == raw[i].lambda) {
      involved.push_back(raw[j].leaving);
      involved.push_back(raw[j].entering);
      ++j;
    }
    if (j - i == 1) {
      out.push_back(raw[i]);
    } else {
      const std::size_t before = out.size();
      emit_group(weights, raw[i].lambda, std::move(involved), out);
      if (out.size() - before != j - i) {
        throw std::logic_error("coincident equality points did not reduce to transpositions");
      }
    }
    i = j;
  }
  return out;
}

std::vector<Rational> distinct_lambdas(std::span<const EqualityPoint> events) {
  std::vector<Rational> out;
  for (const EqualityPoint& ev : events) {
    if (out.empty() || out.back() != ev.lambda) out.push_back(ev.lambda);
  }
  return out;
}

ElementOrder ElementOrder::at(std::span<const ParametricWeight> weights, const Rational& lambda) {
  const int m = static_cast<int>(weights.size());
  std::vector<Rational> value(weights.size());
  for (Element e = 0; e < m; ++e) value[e] = weights[e].at(lambda);
  std::vector<Element> sequence(weights.size());
  std::iota(sequence.begin(), sequence.end(), 0);
  std::sort(sequence.begin(), sequence.end(), [&](Element x, Element y) {
    if (value[x] != value[y]) return value[x] < value[y];
    return x < y;
  });
  return from_sequence(std::move(sequence), lambda);
}

ElementOrder ElementOrder::from_sequence(std::vector<Element> sequence, Rational lambda) {
  ElementOrder order;
  order.lambda_ = std::move(lambda);
  order.position_.assign(sequence.size(), -1);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Element e = sequence[i];
    if (e < 0 || e >= static_cast<int>(sequence.size()) || order.position_[e] != -1) {
      throw std::invalid_argument("element order is not a permutation");
    }
    order.position_[e] = static_cast<int>(i);
  }
  order.sequence_ = std::move(sequence);
  return order;
}

void ElementOrder::swap_adjacent(Element x, Element y) {
  const int px = position_[x];
  const int py = position_[y];
  if (px - py != 1 && py - px != 1) {
    throw std::logic_error("swap of non-adjacent elements " + std::to_string(x) + ", " +
                           std::to_string(y));
  }
  std::swap(sequence_[px], sequence_[py]);
  std::swap(position_[x], position_[y]);
}

Line set_weight(std::span<const ParametricWeight> weights, const ElementSet& set) {
  Line line;
  for (Element e : set) {
    line.slope += weights[e].b;
    line.intercept += weights[e].a;
  }
  return line;
}

ElementSet greedy_min_basis(const Matroid& matroid, const ElementOrder& order) {
  std::vector<Element> current;
  for (Element e : order.sequence()) {
    if (matroid.is_deleted(e)) continue;
    current.push_back(e);
    if (!matroid.is_independent(current)) current.pop_back();
  }
  return sorted_set(std::move(current));
}

namespace {

// basis - e + r as an unsorted probe vector; e is overwritten in place.
std::vector<Element> exchanged(const ElementSet& basis, Element e, Element r) {
  std::vector<Element> probe(basis);
  *std::find(probe.begin(), probe.end(), e) = r;
  return probe;
}

}  // namespace

ElementSet replacement_candidates(const Matroid& matroid, const ElementSet& basis, Element e) {
  if (!contains(basis, e)) throw std::invalid_argument("element is not in the basis");
  ElementSet out;
  for (Element r = 0; r < matroid.ground_size(); ++r) {
    if (matroid.is_deleted(r) || contains(basis, r)) continue;
    if (matroid.is_independent(exchanged(basis, e, r))) out.push_back(r);
  }
  return out;
}

std::optional<Element> replacement_element(const Matroid& matroid, const ElementSet& basis,
                                           Element e, const ElementOrder& order) {
  if (!contains(basis, e)) throw std::invalid_argument("element is not in the basis");
  for (Element r : order.sequence()) {
    if (matroid.is_deleted(r) || contains(basis, r)) continue;
    if (matroid.is_independent(exchanged(basis, e, r))) return r;
  }
  return std::nullopt;
}

std::optional<VitalElement> most_vital_element(const Matroid& matroid, const ElementSet& basis,
                                               std::span<const ParametricWeight> weights,
                                               const ElementOrder& order) {
  std::optional<VitalElement> best;
  for (Element e : basis) {
    const auto r = replacement_element(matroid, basis, e, order);
    ExtendedRational increase =
        r ? ExtendedRational(weights[*r].at(order.lambda()) - weights[e].at(order.lambda()))
          : ExtendedRational::infinity();
    if (!best || best->increase < increase) best = VitalElement{e, std::move(increase)};
  }
  return best;
}

InterdictedBasis interdicted_basis_via_replacement(const Matroid& matroid, const ElementSet& basis,
                                                   std::span<const Element> F,
                                                   const ElementOrder& order) {
  InterdictedBasis out{basis, false};
  Matroid current = matroid;
  for (Element g : F) {
    const Element removed[] = {g};
    current = current.delete_elements(removed);
    if (!contains(out.basis, g)) continue;
    const ElementSet without = without_element(out.basis, g);
    std::optional<Element> r;
    for (Element candidate : order.sequence()) {
      if (current.is_deleted(candidate) || contains(out.basis, candidate)) continue;
      std::vector<Element> probe(without);
      probe.push_back(candidate);
      if (current.is_independent(probe)) {
        r = candidate;
        break;
      }
    }
    if (r) {
      out.basis = with_element(without, *r);
    } else {
      out.basis = without;
      out.rank_deficient = true;
    }
  }
  return out;
}

std::vector<Cell> make_cells(const Interval& interval, std::span<const Rational> cuts) {
  std::vector<Cell> cells;
  std::optional<Rational> lo = interval.lo;
  for (const Rational& cut : cuts) {
    Interval span{lo, cut};
    cells.push_back(Cell{span, span.sample_point()});
    lo = cut;
  }
  Interval last{lo, interval.hi};
  cells.push_back(Cell{last, last.sample_point()});
  return cells;
}

SweepResult parametric_sweep(const Matroid& matroid, std::span<const ParametricWeight> weights,
                             const Interval& interval) {
  const auto events = all_equality_points(weights, interval);
  return parametric_sweep(matroid, weights, interval, events);
}

SweepResult parametric_sweep(const Matroid& matroid, std::span<const ParametricWeight> weights,
                             const Interval& interval, std::span<const EqualityPoint> events) {
  const auto cuts = distinct_lambdas(events);
  const auto cells = make_cells(interval, cuts);
  SweepResult result;
  ElementSet basis = greedy_min_basis(matroid, ElementOrder::at(weights, cells.front().sample));
  result.rank = static_cast<int>(basis.size());
  result.cells.push_back(SweepCell{cells.front().span, basis, set_weight(weights, basis)});
  std::size_t next = 0;
  for (std::size_t c = 1; c < cells.size(); ++c) {
    for (; next < events.size() && events[next].lambda == cuts[c - 1]; ++next) {
      const EqualityPoint& ev = events[next];
      if (!contains(basis, ev.leaving) || contains(basis, ev.entering) ||
          matroid.is_deleted(ev.entering)) {
        continue;
      }
      if (matroid.is_independent(exchanged(basis, ev.leaving, ev.entering))) {
        basis = with_element(without_element(std::move(basis), ev.leaving), ev.entering);
        ++result.swaps;
      }
    }
    if (basis != result.cells.back().basis) {
      result.cells.push_back(SweepCell{cells[c].span, basis, set_weight(weights, basis)});
    } else {
      result.cells.back().span.hi = cells[c].span.hi;
    }
  }
  return result;
}

}  // namespace pmi
