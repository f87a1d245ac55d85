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

// Exact solvers for parametric matroid ell-interdiction: for every lambda in
// the parameter interval, a set F* of ell elements whose deletion maximizes
// the weight of a minimum basis, and the optimal value y(lambda).
//
// Three interchangeable algorithms produce the same value function:
//   solve_brute  one parametric sweep per ell-subset, then the upper envelope;
//   solve_uset   tracks only the subsets of the union U of the first ell
//                layered bases (ell + 1 layers are maintained), updating U and each interdicted basis with at
//                most one independence test per event;
//   solve_tree   rebuilds the candidate search tree in every cell between
//                consecutive equality points and takes the envelope of its
//                k * C(k + ell - 2, ell - 1) candidates.

#ifndef PMI_INTERDICTION_H_
#define PMI_INTERDICTION_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmi/envelope.h"
#include "pmi/matroid.h"
#include "pmi/parametric.h"
#include "pmi/rational.h"

namespace pmi {

struct MatroidInstance {
  Matroid matroid;
  Weights weights;
  int ell = 1;
  Interval interval;
  std::vector<std::string> names;  // optional display names, one per element

  int ground_size() const { return matroid.ground_size(); }

  friend bool operator==(const MatroidInstance& x, const MatroidInstance& y) {
    return x.matroid == y.matroid && x.weights == y.weights && x.ell == y.ell &&
           x.interval == y.interval && x.names == y.names;
  }
};

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws InvalidInstance naming the first violated requirement.
void validate_instance(const MatroidInstance& instance);

// B^0 is the greedy basis; B^i is the greedy basis after deleting
// B^0 u ... u B^(i-1). Layers are pairwise disjoint.
struct LayeredBases {
  std::vector<ElementSet> layers;
  // Some layer is smaller than the first one: the rank did not survive the
  // earlier deletions. The short layers are maximal independent sets of what
  // remained.
  bool truncated = false;

  int depth() const { return static_cast<int>(layers.size()); }
  ElementSet union_set() const;
  // Index of the layer holding e, or -1.
  int layer_of(Element e) const;

  friend bool operator==(const LayeredBases& x, const LayeredBases& y) {
    return x.layers == y.layers;
  }
};

LayeredBases layered_bases(const Matroid& matroid, const ElementOrder& order, int depth);

// Effect of one event on layered bases: e left `layer` and f took its place,
// coming from layer `entering_from` (-1 when f was outside the union).
struct LayerSwap {
  bool exchanged = false;
  int layer = -1;
  int entering_from = -1;
  // Layers after `layer` were recomputed from scratch and may differ from the
  // old ones by more than the exchange of e and f.
  bool recomputed = false;

  // The union of the first d layers became U - e + f.
  bool changes_prefix(int d) const {
    return exchanged && layer < d && (entering_from < 0 || entering_from >= d);
  }
};

// Layered bases just after the event lambda(e -> f), from those valid just
// before it, with `order` the element order just after it. Nothing changes
// unless e lies in some layer j and B^j - e + f is independent with f in layer
// j + 1 (the two layers exchange e and f) or with j the last layer and f
// outside the union (the union becomes U - e + f). The first case costs two
// more tests confirming that layer j + 1 simply trades f for e; when it does
// not (its rank changed), layers j + 1 onwards are recomputed greedily.
LayeredBases update_u(const Matroid& matroid, const LayeredBases& before,
                      const EqualityPoint& event, const ElementOrder& order);

// In-place form.
LayerSwap apply_event(const Matroid& matroid, LayeredBases& layers, const EqualityPoint& event,
                      const ElementOrder& order);

// A deletion set together with the greedy basis of the matroid without it.
struct TrackedSet {
  ElementSet F;
  ElementSet basis;

  friend bool operator==(const TrackedSet& x, const TrackedSet& y) {
    return x.F == y.F && x.basis == y.basis;
  }
};

// The deletion set and its interdicted basis just after the event, given
// whether the event turned the candidate union U into U - e + f, and the
// element order just after it. At most one independence test, except that a
// rank-deficient basis whose deletion set changes is recomputed greedily.
TrackedSet update_interdicted_set(const Matroid& matroid, TrackedSet tracked,
                                  const EqualityPoint& event, bool union_swapped,
                                  const ElementOrder& order, int rank);

// y_F on one cell; an empty value is +inf.
struct Candidate {
  ElementSet F;
  std::optional<Line> value;
};

struct CandidateTree {
  // In leaf order; the same F may occur more than once.
  std::vector<Candidate> candidates;
  // Nodes per level 0..ell-1.
  std::vector<std::size_t> level_sizes;
};

// Candidate deletion sets and their value lines at a fixed lambda strictly
// inside a cell: a search tree of depth ell - 1 over interdicted bases whose
// leaves are expanded by every element of their basis.
CandidateTree candidate_tree(const Matroid& matroid, const Weights& weights,
                             const ElementOrder& order, int ell);

// Candidates sorted by F with duplicates removed.
std::vector<Candidate> deduplicate(std::vector<Candidate> candidates);

// Candidates not dominated on the closed cell by another candidate (equal
// functions keep the smaller F).
std::vector<Candidate> non_dominated(const std::vector<Candidate>& candidates,
                                     const Interval& cell);

enum class Algorithm { kBrute, kUset, kTree };

const char* to_string(Algorithm algorithm);
// Throws std::invalid_argument for anything but "brute", "uset", "tree".
Algorithm parse_algorithm(const std::string& name);

struct SolveOptions {
  // Re-derive every incrementally maintained object from scratch after each
  // event (solve_uset) or check each candidate against greedy (solve_tree);
  // throws std::logic_error on the first disagreement.
  bool self_check = false;
};

struct SolveStats {
  std::size_t cells = 0;
  std::size_t events = 0;
  // Largest per-cell candidate count before and after deduplication.
  std::size_t max_candidates = 0;
  std::size_t max_distinct_candidates = 0;
  std::size_t coincident_ties = 0;
  std::size_t self_checks = 0;
  // Events after which solve_uset re-enumerated its tracked subsets because
  // recomputed short layers moved elements in or out of the candidate union.
  std::size_t union_rebuilds = 0;
};

// A maximal piece of y with its deletion set and interdicted basis.
struct Segment {
  Interval span;
  Piece piece;
  ElementSet basis;  // greedy basis of the matroid minus piece.label
};

struct InterdictionSolution {
  PiecewiseLinear y;
  std::vector<Segment> segments;
  std::vector<Changepoint> changepoints;
  Algorithm algorithm = Algorithm::kTree;
  std::uint64_t oracle_calls = 0;
  double wall_seconds = 0;
  SolveStats stats;
};

// Throws EnumerationCapExceeded when C(m, ell) is above the cap.
InterdictionSolution solve_brute(const MatroidInstance& instance, const SolveOptions& options = {});
InterdictionSolution solve_uset(const MatroidInstance& instance, const SolveOptions& options = {});
InterdictionSolution solve_tree(const MatroidInstance& instance, const SolveOptions& options = {});
InterdictionSolution solve(const MatroidInstance& instance, Algorithm algorithm,
                           const SolveOptions& options = {});

// C(m,2) * C(k + l - 2, l - 1) * k.
mpz_class changepoint_bound(long m, long k, long l);
// C(m,2) * C(k (l - 1), l - 1) * k.
mpz_class changepoint_bound_layered(long m, long k, long l);

}  // namespace pmi

#endif  // PMI_INTERDICTION_H_
