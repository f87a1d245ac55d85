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

// Matroids behind a uniform independence oracle. Four families are supported:
// graphic (acyclic edge sets), uniform (cardinality bound), partition
// (per-block capacities) and explicit (a list of bases over at most 16
// elements, intended for tests). A Matroid value is immutable; deleting
// elements yields a new view that shares the family data and the oracle-call
// counter with its parent.

#ifndef PMI_MATROID_H_
#define PMI_MATROID_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace pmi {

// Elements are dense ids 0..m-1.
using Element = int;
// Sorted ascending, no duplicates.
using ElementSet = std::vector<Element>;

ElementSet sorted_set(std::vector<Element> elements);
bool contains(const ElementSet& set, Element e);
ElementSet set_union(const ElementSet& x, const ElementSet& y);
ElementSet set_minus(const ElementSet& x, const ElementSet& y);
ElementSet with_element(ElementSet set, Element e);
ElementSet without_element(ElementSet set, Element e);

struct GraphicFamily {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> endpoints;  // one edge per element
};

struct UniformFamily {
  int size = 0;
  int rank = 0;
};

struct PartitionFamily {
  std::vector<int> block_of;  // block id per element
  std::vector<int> capacity;  // per block
};

struct ExplicitFamily {
  static constexpr int kMaxSize = 16;
  int size = 0;
  std::vector<std::uint32_t> bases;  // bit i set <=> element i in the basis
};

using MatroidFamily = std::variant<GraphicFamily, UniformFamily, PartitionFamily, ExplicitFamily>;

class Matroid {
 public:
  // All factories validate their arguments and throw std::invalid_argument.
  static Matroid graphic(int num_vertices, std::vector<std::pair<int, int>> endpoints);
  static Matroid uniform(int size, int rank);
  static Matroid partition(std::vector<int> block_of, std::vector<int> capacity);
  static Matroid explicit_bases(int size, const std::vector<ElementSet>& bases);

  int ground_size() const { return static_cast<int>(deleted_.size()); }
  const MatroidFamily& family() const { return *family_; }

  bool is_deleted(Element e) const { return deleted_[static_cast<std::size_t>(e)] != 0; }
  ElementSet deleted() const;
  // Ground set minus the deleted elements.
  ElementSet available() const;

  // True iff |subset| is independent. Throws std::invalid_argument when the
  // subset names a deleted element, an unknown id or a duplicate. Each call
  // increments the shared oracle counter.
  bool is_independent(std::span<const Element> subset) const;

  // The restriction to the ground set minus F. Composable:
  // m.delete_elements(F).delete_elements(G) == m.delete_elements(F u G).
  Matroid delete_elements(std::span<const Element> F) const;

  // Size of a maximal independent set of this (possibly deleted) matroid,
  // computed greedily through the oracle.
  int rank() const;

  std::uint64_t oracle_calls() const { return calls_->load(std::memory_order_relaxed); }
  // Same matroid, new counter starting at zero.
  Matroid with_fresh_counter() const;

  // Same family and deleted set.
  friend bool operator==(const Matroid& x, const Matroid& y);

 private:
  explicit Matroid(MatroidFamily family, int size);

  std::shared_ptr<const MatroidFamily> family_;
  std::vector<char> deleted_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

}  // namespace pmi

#endif  // PMI_MATROID_H_
