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

#include "pmi/interdiction.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "pmi/enumeration.h"

namespace pmi {
namespace {

using Clock = std::chrono::steady_clock;

ElementSet exchange(const ElementSet& set, Element out, Element in) {
  return with_element(without_element(set, out), in);
}

// Calls visit on every r-subset of pool (pool sorted), in lexicographic order.
// Stops early when visit returns false.
void for_each_subset(const ElementSet& pool, int r,
                     const std::function<bool(const ElementSet&)>& visit) {
  const int n = static_cast<int>(pool.size());
  if (r < 0 || r > n) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  ElementSet subset(static_cast<std::size_t>(r));
  while (true) {
    for (int i = 0; i < r; ++i) subset[i] = pool[idx[i]];
    if (!visit(subset)) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Line element_line(const ParametricWeight& w) { return Line{w.b, w.a}; }

Line plus(const Line& x, const Line& y) {
  return Line{x.slope + y.slope, x.intercept + y.intercept};
}

Line minus(const Line& x, const Line& y) {
  return Line{x.slope - y.slope, x.intercept - y.intercept};
}

// F extended by the smallest ids outside it up to size ell.
ElementSet pad_label(ElementSet F, int ell) {
  for (Element e = 0; static_cast<int>(F.size()) < ell; ++e) {
    if (!contains(F, e)) F = with_element(std::move(F), e);
  }
  return F;
}

ElementSet first_ids(int ell) {
  ElementSet out;
  for (Element e = 0; e < ell; ++e) out.push_back(e);
  return out;
}

// Replacement of x for the set T searched among pool in the order, testing
// T - x + r.
std::optional<Element> replacement_in(const Matroid& matroid, const ElementSet& T, Element x,
                                      const ElementSet& pool, const ElementOrder& order) {
  ElementSet sorted = pool;
  std::sort(sorted.begin(), sorted.end(),
            [&](Element p, Element q) { return order.less(p, q); });
  const ElementSet rest = without_element(T, x);
  for (Element r : sorted) {
    if (matroid.is_independent(with_element(rest, r))) return r;
  }
  return std::nullopt;
}

struct Prepared {
  Matroid matroid;
  int rank = 0;
  std::vector<EqualityPoint> events;
  std::vector<Rational> cuts;
  std::vector<Cell> cells;
  Clock::time_point start;
};

Prepared prepare(const MatroidInstance& instance) {
  const auto start = Clock::now();
  validate_instance(instance);
  Prepared p{instance.matroid.with_fresh_counter(), 0, {}, {}, {}, start};
  p.rank = p.matroid.rank();
  p.events = all_equality_points(instance.weights, instance.interval);
  p.cuts = distinct_lambdas(p.events);
  p.cells = make_cells(instance.interval, p.cuts);
  return p;
}

PiecewiseLinear cell_envelope(const std::vector<Candidate>& candidates, const Interval& span,
                              EnvelopeDiagnostics* diag) {
  std::vector<PiecewiseLinear> functions;
  functions.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    functions.push_back(PiecewiseLinear::single(
        span, c.value ? Piece::finite(*c.value, c.F) : Piece::infinite(c.F)));
  }
  return upper_envelope(functions, diag);
}

InterdictionSolution finalize(const MatroidInstance& instance, const Prepared& p,
                              PiecewiseLinear y, Algorithm algorithm, SolveStats stats) {
  InterdictionSolution out{std::move(y), {}, {}, algorithm, p.matroid.oracle_calls(), 0, stats};
  out.y.normalize();
  const auto& pieces = out.y.pieces();
  const bool all_infinite = std::all_of(pieces.begin(), pieces.end(),
                                        [](const Piece& piece) { return piece.is_infinite(); });
  if (all_infinite && pieces.size() > 1) {
    ElementSet best = pieces.front().label;
    for (const Piece& piece : pieces) best = std::min(best, piece.label);
    out.y = PiecewiseLinear::single(out.y.domain(), Piece::infinite(best));
  }
  const Matroid audit = instance.matroid.with_fresh_counter();
  for (std::size_t i = 0; i < out.y.pieces().size(); ++i) {
    const Interval span = out.y.span(i);
    const Piece& piece = out.y.pieces()[i];
    const ElementOrder order = ElementOrder::at(instance.weights, span.sample_point());
    out.segments.push_back(
        Segment{span, piece, greedy_min_basis(audit.delete_elements(piece.label), order)});
  }
  out.changepoints = classify_changepoints(out.y);
  out.wall_seconds = std::chrono::duration<double>(Clock::now() - p.start).count();
  return out;
}

InterdictionSolution trivial_solution(const MatroidInstance& instance, const Prepared& p,
                                      Algorithm algorithm) {
  SolveStats stats;
  stats.cells = p.cells.size();
  stats.events = p.events.size();
  return finalize(instance, p,
                  PiecewiseLinear::single(instance.interval,
                                          Piece::finite(Line{0, 0}, first_ids(instance.ell))),
                  algorithm, stats);
}

}  // namespace

void validate_instance(const MatroidInstance& instance) {
  const int m = instance.ground_size();
  if (static_cast<int>(instance.weights.size()) != m) {
    throw InvalidInstance("expected " + std::to_string(m) + " weights, got " +
                          std::to_string(instance.weights.size()));
  }
  if (!instance.names.empty() && static_cast<int>(instance.names.size()) != m) {
    throw InvalidInstance("expected " + std::to_string(m) + " names, got " +
                          std::to_string(instance.names.size()));
  }
  if (instance.ell < 1) throw InvalidInstance("ell must be at least 1");
  if (instance.ell > m) {
    throw InvalidInstance("ell = " + std::to_string(instance.ell) +
                          " exceeds the ground set size " + std::to_string(m));
  }
  if (!instance.matroid.deleted().empty()) {
    throw InvalidInstance("the instance matroid must not have deleted elements");
  }
  if (!instance.interval.is_valid()) throw InvalidInstance("interval has lo > hi");
}

ElementSet LayeredBases::union_set() const {
  ElementSet out;
  for (const ElementSet& layer : layers) out = set_union(out, layer);
  return out;
}

int LayeredBases::layer_of(Element e) const {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (contains(layers[i], e)) return static_cast<int>(i);
  }
  return -1;
}

LayeredBases layered_bases(const Matroid& matroid, const ElementOrder& order, int depth) {
  LayeredBases out;
  ElementSet removed = matroid.deleted();
  for (int i = 0; i < depth; ++i) {
    const Matroid rest = i == 0 ? matroid : matroid.delete_elements(removed);
    ElementSet layer = greedy_min_basis(rest, order);
    removed = set_union(removed, layer);
    if (!out.layers.empty() && layer.size() < out.layers.front().size()) out.truncated = true;
    out.layers.push_back(std::move(layer));
  }
  return out;
}

LayerSwap apply_event(const Matroid& matroid, LayeredBases& layers, const EqualityPoint& event,
                      const ElementOrder& order) {
  const Element e = event.leaving;
  const Element f = event.entering;
  LayerSwap out;
  if (matroid.is_deleted(e) || matroid.is_deleted(f)) return out;
  const int je = layers.layer_of(e);
  if (je < 0) return out;
  const int jf = layers.layer_of(f);
  const bool last = je + 1 == layers.depth();
  if (!(jf < 0 && last) && jf != je + 1) return out;
  ElementSet swapped = exchange(layers.layers[je], e, f);
  if (!matroid.is_independent(swapped)) return out;
  layers.layers[je] = std::move(swapped);
  out.exchanged = true;
  out.layer = je;
  out.entering_from = jf;
  if (jf < 0) return out;
  // Layer jf now sees e in place of f. Its greedy run is unchanged apart from
  // that exchange iff the prefix P before f keeps P + e independent and
  // P + e + f dependent.
  ElementSet prefix;
  for (Element x : layers.layers[jf]) {
    if (order.less(x, f)) prefix.push_back(x);
  }
  const ElementSet with_e = with_element(prefix, e);
  if (matroid.is_independent(with_e) && !matroid.is_independent(with_element(with_e, f))) {
    layers.layers[jf] = exchange(layers.layers[jf], f, e);
    return out;
  }
  out.recomputed = true;
  const std::size_t k = layers.layers.front().size();
  ElementSet removed = matroid.deleted();
  for (int i = 0; i < jf; ++i) removed = set_union(removed, layers.layers[i]);
  layers.truncated = false;
  for (int i = jf; i < layers.depth(); ++i) {
    layers.layers[i] = greedy_min_basis(matroid.delete_elements(removed), order);
    removed = set_union(removed, layers.layers[i]);
  }
  for (const ElementSet& layer : layers.layers) {
    if (layer.size() < k) layers.truncated = true;
  }
  return out;
}

LayeredBases update_u(const Matroid& matroid, const LayeredBases& before,
                      const EqualityPoint& event, const ElementOrder& order) {
  LayeredBases after = before;
  apply_event(matroid, after, event, order);
  return after;
}

TrackedSet update_interdicted_set(const Matroid& matroid, TrackedSet tracked,
                                  const EqualityPoint& event, bool union_swapped,
                                  const ElementOrder& order, int rank) {
  const Element e = event.leaving;
  const Element f = event.entering;
  if (union_swapped && contains(tracked.F, e)) {
    tracked.F = exchange(tracked.F, e, f);
    if (static_cast<int>(tracked.basis.size()) < rank) {
      tracked.basis = greedy_min_basis(matroid.delete_elements(tracked.F), order);
    } else if (contains(tracked.basis, f)) {
      tracked.basis = exchange(tracked.basis, f, e);
    }
    return tracked;
  }
  if (contains(tracked.basis, e) && !contains(tracked.basis, f) && !contains(tracked.F, f) &&
      !matroid.is_deleted(f)) {
    ElementSet swapped = exchange(tracked.basis, e, f);
    if (matroid.is_independent(swapped)) tracked.basis = std::move(swapped);
  }
  return tracked;
}

CandidateTree candidate_tree(const Matroid& matroid, const Weights& weights,
                             const ElementOrder& order, int ell) {
  if (ell < 1) throw std::invalid_argument("candidate_tree: ell must be at least 1");
  struct Node {
    ElementSet F;
    ElementSet forbidden;
    std::vector<ElementSet> layers;  // T_0 .. T_(ell - level)
  };
  CandidateTree out;
  std::vector<Node> level{Node{{}, {}, layered_bases(matroid, order, ell + 1).layers}};
  const std::size_t k = level.front().layers.front().size();
  if (k == 0) {
    out.level_sizes.push_back(1);
    out.candidates.push_back(Candidate{first_ids(ell), Line{0, 0}});
    return out;
  }
  auto emit_deficient = [&](const ElementSet& F) {
    out.candidates.push_back(Candidate{pad_label(F, ell), std::nullopt});
  };
  for (int depth = 0; depth + 1 < ell; ++depth) {
    out.level_sizes.push_back(level.size());
    std::vector<Node> next;
    for (const Node& s : level) {
      if (s.layers.front().size() < k) {
        emit_deficient(s.F);
        continue;
      }
      ElementSet forbidden = s.forbidden;
      for (Element e : s.layers.front()) {
        if (contains(s.forbidden, e)) continue;
        Node child{with_element(s.F, e), forbidden, {}};
        std::optional<Element> x = e;
        for (std::size_t p = 0; p + 1 < s.layers.size(); ++p) {
          const ElementSet& T = s.layers[p];
          if (!x) {
            child.layers.push_back(T);
            continue;
          }
          const auto r = replacement_in(matroid, T, *x, s.layers[p + 1], order);
          child.layers.push_back(r ? exchange(T, *x, *r) : without_element(T, *x));
          x = r;
        }
        forbidden = with_element(std::move(forbidden), e);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  out.level_sizes.push_back(level.size());
  for (const Node& s : level) {
    const ElementSet& T0 = s.layers.front();
    if (T0.size() < k) {
      emit_deficient(s.F);
      continue;
    }
    const Line base = set_weight(weights, T0);
    for (Element e : T0) {
      const auto r = replacement_in(matroid, T0, e, s.layers[1], order);
      Candidate c{with_element(s.F, e), std::nullopt};
      if (r) c.value = plus(minus(base, element_line(weights[e])), element_line(weights[*r]));
      out.candidates.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Candidate> deduplicate(std::vector<Candidate> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) { return x.F < y.F; });
  std::vector<Candidate> out;
  for (Candidate& c : candidates) {
    if (!out.empty() && out.back().F == c.F) {
      if (out.back().value != c.value) {
        throw std::logic_error("deduplicate: one deletion set with two different values");
      }
      continue;
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// x >= y everywhere on the closed cell.
bool dominates_on(const std::optional<Line>& x, const std::optional<Line>& y, const Interval& cell) {
  if (!x) return true;
  if (!y) return false;
  if (cell.lo) {
    if (x->at(*cell.lo) < y->at(*cell.lo)) return false;
  } else if (x->slope > y->slope || (x->slope == y->slope && x->intercept < y->intercept)) {
    return false;
  }
  if (cell.hi) {
    if (x->at(*cell.hi) < y->at(*cell.hi)) return false;
  } else if (x->slope < y->slope || (x->slope == y->slope && x->intercept < y->intercept)) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<Candidate> non_dominated(const std::vector<Candidate>& candidates,
                                     const Interval& cell) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j || !dominates_on(candidates[j].value, candidates[i].value, cell)) continue;
      const bool mutual = dominates_on(candidates[i].value, candidates[j].value, cell);
      dominated = !mutual || candidates[j].F < candidates[i].F ||
                  (candidates[j].F == candidates[i].F && j < i);
    }
    if (!dominated) out.push_back(candidates[i]);
  }
  return out;
}

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBrute:
      return "brute";
    case Algorithm::kUset:
      return "uset";
    case Algorithm::kTree:
      return "tree";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "brute") return Algorithm::kBrute;
  if (name == "uset") return Algorithm::kUset;
  if (name == "tree") return Algorithm::kTree;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected brute, uset or tree)");
}

InterdictionSolution solve_brute(const MatroidInstance& instance, const SolveOptions&) {
  validate_instance(instance);
  check_enumeration_cap(instance.ground_size(), instance.ell, "solve_brute");
  const Prepared p = prepare(instance);
  if (p.rank == 0) return trivial_solution(instance, p, Algorithm::kBrute);
  SolveStats stats;
  stats.cells = p.cells.size();
  stats.events = p.events.size();
  std::vector<PiecewiseLinear> functions;
  std::optional<ElementSet> deficient;
  ElementSet ground;
  for (Element e = 0; e < instance.ground_size(); ++e) ground.push_back(e);
  for_each_subset(ground, instance.ell, [&](const ElementSet& F) {
    const SweepResult sweep =
        parametric_sweep(p.matroid.delete_elements(F), instance.weights, instance.interval, p.events);
    if (sweep.rank < p.rank) {
      deficient = F;
      return false;
    }
    std::vector<Rational> breaks;
    std::vector<Piece> pieces;
    for (const SweepCell& cell : sweep.cells) {
      if (!pieces.empty()) breaks.push_back(*cell.span.lo);
      pieces.push_back(Piece::finite(cell.value, F));
    }
    functions.emplace_back(instance.interval, std::move(breaks), std::move(pieces));
    return true;
  });
  stats.max_candidates = functions.size();
  stats.max_distinct_candidates = functions.size();
  if (deficient) {
    return finalize(instance, p,
                    PiecewiseLinear::single(instance.interval, Piece::infinite(*deficient)),
                    Algorithm::kBrute, stats);
  }
  EnvelopeDiagnostics diag;
  PiecewiseLinear y = upper_envelope(functions, &diag);
  stats.coincident_ties = diag.coincident_ties;
  return finalize(instance, p, std::move(y), Algorithm::kBrute, stats);
}

InterdictionSolution solve_uset(const MatroidInstance& instance, const SolveOptions& options) {
  const Prepared p = prepare(instance);
  if (p.rank == 0) return trivial_solution(instance, p, Algorithm::kUset);
  const Matroid& M = p.matroid;
  const int ell = instance.ell;
  SolveStats stats;
  stats.cells = p.cells.size();
  stats.events = p.events.size();

  ElementOrder order = ElementOrder::at(instance.weights, p.cells.front().sample);
  LayeredBases layers = layered_bases(M, order, ell + 1);
  auto candidate_union = [&] {
    ElementSet out;
    for (int i = 0; i < ell; ++i) out = set_union(out, layers.layers[i]);
    return out;
  };
  // Tracked sets for every ell-subset of U, keeping those already present.
  std::vector<TrackedSet> tracked;
  auto track_subsets = [&](const ElementSet& U) {
    std::vector<TrackedSet> old = std::move(tracked);
    std::sort(old.begin(), old.end(),
              [](const TrackedSet& x, const TrackedSet& y) { return x.F < y.F; });
    tracked.clear();
    for_each_subset(U, ell, [&](const ElementSet& F) {
      const auto it = std::lower_bound(
          old.begin(), old.end(), F, [](const TrackedSet& t, const ElementSet& key) { return t.F < key; });
      if (it != old.end() && it->F == F) {
        tracked.push_back(std::move(*it));
      } else {
        tracked.push_back(TrackedSet{F, greedy_min_basis(M.delete_elements(F), order)});
      }
      return true;
    });
  };
  ElementSet U = candidate_union();
  track_subsets(U);

  auto check = [&](const char* what, const Rational& lambda, bool ok) {
    ++stats.self_checks;
    if (!ok) {
      throw std::logic_error(std::string("solve_uset self-check: ") + what +
                             " differs from recomputation at lambda " + format_rational(lambda));
    }
  };

  EnvelopeDiagnostics diag;
  std::vector<PiecewiseLinear> parts;
  std::size_t next = 0;
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    const Cell& cell = p.cells[c];
    if (c > 0) {
      for (; next < p.events.size() && p.events[next].lambda == p.cuts[c - 1]; ++next) {
        const EqualityPoint& ev = p.events[next];
        order.swap_adjacent(ev.leaving, ev.entering);
        const LayerSwap change = apply_event(M, layers, ev, order);
        const bool swapped = change.changes_prefix(ell);
        for (TrackedSet& t : tracked) {
          t = update_interdicted_set(M, std::move(t), ev, swapped, order, p.rank);
        }
        if (swapped) U = exchange(U, ev.leaving, ev.entering);
        if (change.recomputed) {
          if (ElementSet fresh = candidate_union(); fresh != U) {
            U = std::move(fresh);
            track_subsets(U);
            ++stats.union_rebuilds;
          }
        }
        if (options.self_check) {
          const Matroid scratch = M.with_fresh_counter();
          check("layered bases", ev.lambda, layered_bases(scratch, order, ell + 1) == layers);
          for (const TrackedSet& t : tracked) {
            check("interdicted basis", ev.lambda,
                  greedy_min_basis(scratch.delete_elements(t.F), order) == t.basis);
          }
        }
      }
      if (options.self_check) {
        check("element order", cell.sample,
              ElementOrder::at(instance.weights, cell.sample).sequence() == order.sequence());
      }
    }
    std::vector<Candidate> candidates;
    if (static_cast<int>(U.size()) < ell) {
      candidates.push_back(Candidate{pad_label(U, ell), std::nullopt});
    }
    for (const TrackedSet& t : tracked) {
      Candidate cand{t.F, std::nullopt};
      if (static_cast<int>(t.basis.size()) == p.rank) {
        cand.value = set_weight(instance.weights, t.basis);
      }
      candidates.push_back(std::move(cand));
    }
    stats.max_candidates = std::max(stats.max_candidates, candidates.size());
    candidates = deduplicate(std::move(candidates));
    stats.max_distinct_candidates = std::max(stats.max_distinct_candidates, candidates.size());
    parts.push_back(cell_envelope(candidates, cell.span, &diag));
  }
  stats.coincident_ties = diag.coincident_ties;
  return finalize(instance, p, concatenate(parts), Algorithm::kUset, stats);
}

InterdictionSolution solve_tree(const MatroidInstance& instance, const SolveOptions& options) {
  const Prepared p = prepare(instance);
  if (p.rank == 0) return trivial_solution(instance, p, Algorithm::kTree);
  SolveStats stats;
  stats.cells = p.cells.size();
  stats.events = p.events.size();
  EnvelopeDiagnostics diag;
  std::vector<PiecewiseLinear> parts;
  for (const Cell& cell : p.cells) {
    const ElementOrder order = ElementOrder::at(instance.weights, cell.sample);
    CandidateTree tree = candidate_tree(p.matroid, instance.weights, order, instance.ell);
    stats.max_candidates = std::max(stats.max_candidates, tree.candidates.size());
    std::vector<Candidate> candidates = deduplicate(std::move(tree.candidates));
    stats.max_distinct_candidates = std::max(stats.max_distinct_candidates, candidates.size());
    if (options.self_check) {
      const Matroid scratch = p.matroid.with_fresh_counter();
      for (const Candidate& c : candidates) {
        const ElementSet basis = greedy_min_basis(scratch.delete_elements(c.F), order);
        std::optional<Line> expected;
        if (static_cast<int>(basis.size()) == p.rank) expected = set_weight(instance.weights, basis);
        ++stats.self_checks;
        if (expected != c.value) {
          throw std::logic_error("solve_tree self-check: candidate value differs from greedy at "
                                 "lambda " + format_rational(cell.sample));
        }
      }
    }
    parts.push_back(cell_envelope(candidates, cell.span, &diag));
  }
  stats.coincident_ties = diag.coincident_ties;
  return finalize(instance, p, concatenate(parts), Algorithm::kTree, stats);
}

InterdictionSolution solve(const MatroidInstance& instance, Algorithm algorithm,
                           const SolveOptions& options) {
  switch (algorithm) {
    case Algorithm::kBrute:
      return solve_brute(instance, options);
    case Algorithm::kUset:
      return solve_uset(instance, options);
    case Algorithm::kTree:
      return solve_tree(instance, options);
  }
  throw std::invalid_argument("solve: unknown algorithm");
}

mpz_class changepoint_bound(long m, long k, long l) {
  if (k == 0 || l < 1) return 0;
  return binomial(m, 2) * binomial(k + l - 2, l - 1) * k;
}

mpz_class changepoint_bound_layered(long m, long k, long l) {
  if (k == 0 || l < 1) return 0;
  return binomial(m, 2) * binomial(k * (l - 1), l - 1) * k;
}

}  // namespace pmi
