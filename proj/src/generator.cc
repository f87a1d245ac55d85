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

#include "pmi/generator.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pmi {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi]; computed from raw engine output so that the stream
  // does not depend on the standard library's distributions.
  int range(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

ParametricWeight random_weight(Rng& rng) {
  Rational a = rng.range(-9, 9);
  const Rational b = rng.range(-3, 3);
  if (rng.range(0, 3) == 0) {
    a /= 2;
    a.canonicalize();
  }
  return {a, b};
}

Interval random_interval(Rng& rng) {
  switch (rng.range(0, 3)) {
    case 0:
    case 1:
      return Interval::real_line();
    case 2:
      return Interval{Rational(rng.range(-4, 0)), std::nullopt};
    default:
      return Interval::closed(rng.range(-4, 0), rng.range(1, 5));
  }
}

// Crossing edge count for every cut containing vertex 0; returns the smallest
// and one deficient cut's crossing edges.
int smallest_cut(const GraphicFamily& graph, std::vector<int>* crossing) {
  const int n = graph.num_vertices;
  int best = static_cast<int>(graph.endpoints.size()) + 1;
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); mask += 2) {
    std::vector<int> edges;
    for (std::size_t i = 0; i < graph.endpoints.size(); ++i) {
      const auto [u, v] = graph.endpoints[i];
      if (((mask >> u) & 1U) != ((mask >> v) & 1U)) edges.push_back(static_cast<int>(i));
    }
    if (static_cast<int>(edges.size()) < best) {
      best = static_cast<int>(edges.size());
      if (crossing != nullptr) *crossing = edges;
    }
  }
  return best;
}

MatroidInstance generate_graphic(const GeneratorSpec& spec, Rng& rng) {
  const int n = spec.vertices;
  if (n < 2 || n > 24) throw std::invalid_argument("graphic generator needs 2..24 vertices");
  const int edges = spec.size > 0 ? spec.size : n - 1 + n / 2;
  if (edges < n - 1) {
    throw std::invalid_argument("graphic generator needs at least vertices - 1 edges");
  }
  GraphicFamily graph{n, {}};
  Weights weights;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
  for (int i = 1; i < n; ++i) {
    graph.endpoints.emplace_back(perm[rng.range(0, i - 1)], perm[i]);
    weights.push_back(random_weight(rng));
  }
  while (static_cast<int>(graph.endpoints.size()) < edges) {
    const int u = rng.range(0, n - 1);
    int v = rng.range(0, n - 2);
    if (v >= u) ++v;
    graph.endpoints.emplace_back(u, v);
    weights.push_back(random_weight(rng));
  }
  if (spec.reinforce) {
    std::vector<int> crossing;
    while (smallest_cut(graph, &crossing) < spec.ell + 1) {
      const auto parallel = graph.endpoints[crossing[rng.range(0, static_cast<int>(crossing.size()) - 1)]];
      graph.endpoints.push_back(parallel);
      weights.push_back({Rational(kHeavyWeight), Rational(0)});
    }
  }
  if (spec.ell > static_cast<int>(graph.endpoints.size())) {
    throw std::invalid_argument("ell exceeds the number of edges");
  }
  Interval interval = spec.interval ? *spec.interval : random_interval(rng);
  return MatroidInstance{Matroid::graphic(n, graph.endpoints), std::move(weights), spec.ell,
                         interval, {}};
}

MatroidInstance generate_uniform(const GeneratorSpec& spec, Rng& rng) {
  if (spec.size < 1 || spec.rank < 0 || spec.rank > spec.size) {
    throw std::invalid_argument("uniform generator needs 0 <= rank <= size, size >= 1");
  }
  if (spec.ell < 1 || spec.ell > spec.size - spec.rank) {
    throw std::invalid_argument("uniform generator needs 1 <= ell <= size - rank");
  }
  Weights weights;
  for (int i = 0; i < spec.size; ++i) weights.push_back(random_weight(rng));
  Interval interval = spec.interval ? *spec.interval : random_interval(rng);
  return MatroidInstance{Matroid::uniform(spec.size, spec.rank), std::move(weights), spec.ell,
                         interval, {}};
}

MatroidInstance generate_partition(const GeneratorSpec& spec, Rng& rng) {
  const int m = spec.size;
  const int k = spec.rank;
  if (k < 1 || spec.ell < 1) throw std::invalid_argument("partition generator needs rank, ell >= 1");
  const int max_blocks = std::min(k, (m - k) / spec.ell);
  if (max_blocks < 1) {
    throw std::invalid_argument("partition generator needs size >= rank + ell");
  }
  const int blocks = rng.range(1, max_blocks);
  std::vector<int> capacity(static_cast<std::size_t>(blocks), 1);
  for (int extra = k - blocks; extra > 0; --extra) ++capacity[rng.range(0, blocks - 1)];
  std::vector<int> block_size(static_cast<std::size_t>(blocks));
  int used = 0;
  for (int b = 0; b < blocks; ++b) {
    block_size[b] = capacity[b] + spec.ell;
    used += block_size[b];
  }
  for (int extra = m - used; extra > 0; --extra) ++block_size[rng.range(0, blocks - 1)];
  std::vector<int> block_of;
  for (int b = 0; b < blocks; ++b) block_of.insert(block_of.end(), block_size[b], b);
  for (int i = m - 1; i > 0; --i) std::swap(block_of[i], block_of[rng.range(0, i)]);
  Weights weights;
  for (int i = 0; i < m; ++i) weights.push_back(random_weight(rng));
  Interval interval = spec.interval ? *spec.interval : random_interval(rng);
  return MatroidInstance{Matroid::partition(std::move(block_of), std::move(capacity)),
                         std::move(weights), spec.ell, interval, {}};
}

}  // namespace

int min_cut_size(const GraphicFamily& graph) {
  if (graph.num_vertices < 2 || graph.num_vertices > 24) {
    throw std::invalid_argument("min_cut_size needs 2..24 vertices");
  }
  return smallest_cut(graph, nullptr);
}

MatroidInstance generate_instance(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  if (spec.family == "graphic") return generate_graphic(spec, rng);
  if (spec.family == "uniform") return generate_uniform(spec, rng);
  if (spec.family == "partition") return generate_partition(spec, rng);
  throw std::invalid_argument("unknown family '" + spec.family +
                              "' (expected graphic, uniform or partition)");
}

}  // namespace pmi
