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

#include "support.h"

#include <algorithm>

namespace pmi::testing {

MatroidInstance example_graph(bool with_parallels, int ell, Interval interval) {
  // Vertices A1..A6 are 0..5.
  std::vector<std::pair<int, int>> edges = {{5, 2}, {3, 4}, {0, 1}, {4, 0}, {5, 3},
                                            {0, 5}, {2, 3}, {0, 3}, {1, 2}};
  Weights weights = {{0, 0}, {1, 0}, {2, 0}, {-3, 2}, {1, 1}, {3, 0}, {7, 0}, {8, 0}, {4, 0}};
  std::vector<std::string> names = {"a", "b", "c", "e", "f", "g", "p", "q", "r"};
  if (with_parallels) {
    for (int i = 0; i < 9; ++i) {
      for (int copy = 1; copy <= 3; ++copy) {
        edges.push_back(edges[i]);
        weights.push_back({kHeavyWeight, 0});
        names.push_back(names[i] + "#" + std::to_string(copy));
      }
    }
  }
  return MatroidInstance{Matroid::graphic(6, edges), weights, ell, interval, names};
}

ElementSet ids(std::initializer_list<Element> elements) {
  return sorted_set(std::vector<Element>(elements));
}

Line line(long slope, long intercept) { return Line{slope, intercept}; }

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

namespace {

std::optional<CorpusEntry> try_generate(GeneratorSpec spec, const std::string& name,
                                        int max_elements) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      MatroidInstance instance = generate_instance(spec);
      if (instance.ground_size() <= max_elements) return CorpusEntry{name, spec, instance};
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    spec.seed += 7919;
  }
  return std::nullopt;
}

CorpusEntry entry_for(int i, std::uint64_t base_seed) {
  const int ell = 1 + (i / 3) % 3;
  const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
  GeneratorSpec spec;
  spec.ell = ell;
  spec.seed = seed;
  const std::string name = "c" + std::to_string(i);
  switch (i % 3) {
    case 0: {
      spec.family = "graphic";
      const int max_vertices = ell == 1 ? 7 : (ell == 2 ? 6 : 5);
      spec.vertices = 3 + (i / 9) % (max_vertices - 2);
      spec.size = std::max(spec.vertices - 1 + (i / 5) % 3, ell + 1);
      // Every fourth graphic instance keeps its small cuts, so that some
      // deletions disconnect the graph.
      spec.reinforce = (i / 3) % 4 != 3;
      for (; spec.vertices >= 3; --spec.vertices, spec.size = std::max(spec.vertices, ell + 1)) {
        if (auto e = try_generate(spec, name + "-graphic", 12)) return *e;
      }
      break;
    }
    case 1: {
      spec.family = "uniform";
      spec.size = 5 + (i / 3) % 6;
      spec.rank = 1 + (i / 7) % std::min(4, spec.size - ell);
      if (auto e = try_generate(spec, name + "-uniform", 10)) return *e;
      break;
    }
    default: {
      spec.family = "partition";
      spec.size = 5 + (i / 3) % 6;
      spec.rank = 1 + (i / 7) % std::max(1, std::min(4, spec.size - ell));
      while (spec.rank > 1 && spec.size < spec.rank + ell) --spec.rank;
      if (auto e = try_generate(spec, name + "-partition", 10)) return *e;
      break;
    }
  }
  throw std::logic_error("corpus entry " + name + " could not be generated");
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (int i = 0; i < 120; ++i) out.push_back(entry_for(i, 1000));
    return out;
  }();
  return entries;
}

std::vector<CorpusEntry> small_corpus(int count, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) out.push_back(entry_for(i, seed));
  return out;
}

}  // namespace pmi::testing
