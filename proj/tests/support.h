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

// Shared fixtures for the test binaries: the six-vertex example graph and the
// seeded random corpus.

#ifndef PMI_TESTS_SUPPORT_H_
#define PMI_TESTS_SUPPORT_H_

#include <map>
#include <string>
#include <vector>

#include "pmi/generator.h"
#include "pmi/interdiction.h"

namespace pmi::testing {

// Edges a, b, c, e, f, g, p, q, r get ids 0..8 in this order.
enum ExampleEdge : Element { kA = 0, kB, kC, kE, kF, kG, kP, kQ, kR };

// Six vertices, nine edges with weights a=0, b=1, c=2, e=-3+2l, f=1+l, g=3,
// p=7, q=8, r=4. With parallels, every edge gets three copies of weight 100
// (ids 9 + 3i .. 11 + 3i for edge i) so that every cut has at least four edges.
MatroidInstance example_graph(bool with_parallels, int ell, Interval interval);

ElementSet ids(std::initializer_list<Element> elements);
Line line(long slope, long intercept);
Rational q(long num, long den = 1);

struct CorpusEntry {
  std::string name;
  GeneratorSpec spec;
  MatroidInstance instance;
};

// 120 instances: graphic (at most 7 vertices and 12 edges), uniform and
// partition (at most 10 elements), ell in {1, 2, 3}, seeded and reproducible.
const std::vector<CorpusEntry>& corpus();

// Smaller seeded families for quick property tests.
std::vector<CorpusEntry> small_corpus(int count, std::uint64_t seed);

}  // namespace pmi::testing

#endif  // PMI_TESTS_SUPPORT_H_
