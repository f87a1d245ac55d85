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

// Seeded random instances.

#ifndef PMI_GENERATOR_H_
#define PMI_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>

#include "pmi/interdiction.h"

namespace pmi {

// Weight of the parallels added to reinforce graphic instances.
inline constexpr int kHeavyWeight = 100;

struct GeneratorSpec {
  std::string family;  // graphic, uniform or partition
  int size = 0;        // uniform, partition: ground set size; graphic: edges before reinforcement
  int rank = 0;        // uniform, partition
  int vertices = 0;    // graphic
  int ell = 1;
  std::uint64_t seed = 1;
  // graphic: add heavy parallels until every cut has at least ell + 1 edges.
  bool reinforce = true;
  // Empty: drawn from the seed (real line, half-line or bounded).
  std::optional<Interval> interval;
};

// Deterministic for a given spec. Weights are a + lambda b with small integer
// a, b (a sometimes halved). Throws std::invalid_argument on infeasible
// parameters: uniform needs ell <= size - rank, partition needs room for
// blocks of at least capacity + ell elements.
MatroidInstance generate_instance(const GeneratorSpec& spec);

// Fewest edges crossing any cut of the graph, by enumerating all cuts.
// Requires at most 24 vertices.
int min_cut_size(const GraphicFamily& graph);

}  // namespace pmi

#endif  // PMI_GENERATOR_H_
