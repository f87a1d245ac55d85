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

#include "pmi/matroid.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pmi {

ElementSet sorted_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

bool contains(const ElementSet& set, Element e) {
  return std::binary_search(set.begin(), set.end(), e);
}

ElementSet set_union(const ElementSet& x, const ElementSet& y) {
  ElementSet out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

ElementSet set_minus(const ElementSet& x, const ElementSet& y) {
  ElementSet out;
  out.reserve(x.size());
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

ElementSet with_element(ElementSet set, Element e) {
  auto it = std::lower_bound(set.begin(), set.end(), e);
  if (it == set.end() || *it != e) set.insert(it, e);
  return set;
}

ElementSet without_element(ElementSet set, Element e) {
  auto it = std::lower_bound(set.begin(), set.end(), e);
  if (it != set.end() && *it == e) set.erase(it);
  return set;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

bool independent_in(const GraphicFamily& g, std::span<const Element> subset) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  for (Element e : subset) {
    auto [u, v] = g.endpoints[e];
    int ru = find_root(parent, u);
    int rv = find_root(parent, v);
    if (ru == rv) return false;  // closes a cycle (or is a self-loop)
    parent[ru] = rv;
  }
  return true;
}

bool independent_in(const UniformFamily& u, std::span<const Element> subset) {
  return static_cast<int>(subset.size()) <= u.rank;
}

bool independent_in(const PartitionFamily& p, std::span<const Element> subset) {
  std::vector<int> used(p.capacity.size(), 0);
  for (Element e : subset) {
    int block = p.block_of[e];
    if (++used[block] > p.capacity[block]) return false;
  }
  return true;
}

bool independent_in(const ExplicitFamily& x, std::span<const Element> subset) {
  std::uint32_t mask = 0;
  for (Element e : subset) mask |= 1u << e;
  return std::any_of(x.bases.begin(), x.bases.end(),
                     [mask](std::uint32_t basis) { return (basis & mask) == mask; });
}

}  // namespace

Matroid::Matroid(MatroidFamily family, int size)
    : family_(std::make_shared<const MatroidFamily>(std::move(family))),
      deleted_(static_cast<std::size_t>(size), 0),
      calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

Matroid Matroid::graphic(int num_vertices, std::vector<std::pair<int, int>> endpoints) {
  if (num_vertices < 1) throw std::invalid_argument("graphic matroid needs at least one vertex");
  for (const auto& [u, v] : endpoints) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  const int size = static_cast<int>(endpoints.size());
  return Matroid(GraphicFamily{num_vertices, std::move(endpoints)}, size);
}

Matroid Matroid::uniform(int size, int rank) {
  if (size < 0 || rank < 0 || rank > size) {
    throw std::invalid_argument("uniform matroid needs 0 <= rank <= size");
  }
  return Matroid(UniformFamily{size, rank}, size);
}

Matroid Matroid::partition(std::vector<int> block_of, std::vector<int> capacity) {
  for (int c : capacity) {
    if (c < 0) throw std::invalid_argument("negative block capacity");
  }
  for (int b : block_of) {
    if (b < 0 || b >= static_cast<int>(capacity.size())) {
      throw std::invalid_argument("block id out of range");
    }
  }
  const int size = static_cast<int>(block_of.size());
  return Matroid(PartitionFamily{std::move(block_of), std::move(capacity)}, size);
}

Matroid Matroid::explicit_bases(int size, const std::vector<ElementSet>& bases) {
  if (size < 0 || size > ExplicitFamily::kMaxSize) {
    throw std::invalid_argument("explicit matroids are limited to " +
                                std::to_string(ExplicitFamily::kMaxSize) + " elements");
  }
  if (bases.empty()) throw std::invalid_argument("explicit matroid needs at least one basis");
  ExplicitFamily family{size, {}};
  const std::size_t rank = bases.front().size();
  for (const ElementSet& basis : bases) {
    if (basis.size() != rank) throw std::invalid_argument("explicit bases differ in size");
    std::uint32_t mask = 0;
    for (Element e : basis) {
      if (e < 0 || e >= size) throw std::invalid_argument("basis element out of range");
      if (mask & (1u << e)) throw std::invalid_argument("duplicate element in basis");
      mask |= 1u << e;
    }
    family.bases.push_back(mask);
  }
  std::sort(family.bases.begin(), family.bases.end());
  family.bases.erase(std::unique(family.bases.begin(), family.bases.end()), family.bases.end());
  return Matroid(std::move(family), size);
}

ElementSet Matroid::deleted() const {
  ElementSet out;
  for (Element e = 0; e < ground_size(); ++e) {
    if (is_deleted(e)) out.push_back(e);
  }
  return out;
}

ElementSet Matroid::available() const {
  ElementSet out;
  out.reserve(deleted_.size());
  for (Element e = 0; e < ground_size(); ++e) {
    if (!is_deleted(e)) out.push_back(e);
  }
  return out;
}

bool Matroid::is_independent(std::span<const Element> subset) const {
  std::vector<char> seen(deleted_.size(), 0);
  for (Element e : subset) {
    if (e < 0 || e >= ground_size()) {
      throw std::invalid_argument("unknown element " + std::to_string(e));
    }
    if (deleted_[e]) {
      throw std::invalid_argument("independence query names deleted element " +
                                  std::to_string(e));
    }
    if (seen[e]) throw std::invalid_argument("duplicate element " + std::to_string(e));
    seen[e] = 1;
  }
  calls_->fetch_add(1, std::memory_order_relaxed);
  return std::visit([&](const auto& f) { return independent_in(f, subset); }, *family_);
}

Matroid Matroid::delete_elements(std::span<const Element> F) const {
  Matroid out = *this;
  for (Element e : F) {
    if (e < 0 || e >= ground_size()) {
      throw std::invalid_argument("unknown element " + std::to_string(e));
    }
    out.deleted_[e] = 1;
  }
  return out;
}

int Matroid::rank() const {
  ElementSet current;
  for (Element e = 0; e < ground_size(); ++e) {
    if (is_deleted(e)) continue;
    current.push_back(e);
    if (!is_independent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

Matroid Matroid::with_fresh_counter() const {
  Matroid out = *this;
  out.calls_ = std::make_shared<std::atomic<std::uint64_t>>(0);
  return out;
}

namespace {

bool same_family(const MatroidFamily& x, const MatroidFamily& y) {
  if (x.index() != y.index()) return false;
  if (const auto* g = std::get_if<GraphicFamily>(&x)) {
    const auto& h = std::get<GraphicFamily>(y);
    return g->num_vertices == h.num_vertices && g->endpoints == h.endpoints;
  }
  if (const auto* u = std::get_if<UniformFamily>(&x)) {
    const auto& v = std::get<UniformFamily>(y);
    return u->size == v.size && u->rank == v.rank;
  }
  if (const auto* p = std::get_if<PartitionFamily>(&x)) {
    const auto& q = std::get<PartitionFamily>(y);
    return p->block_of == q.block_of && p->capacity == q.capacity;
  }
  const auto& a = std::get<ExplicitFamily>(x);
  const auto& b = std::get<ExplicitFamily>(y);
  return a.size == b.size && a.bases == b.bases;
}

}  // namespace

bool operator==(const Matroid& x, const Matroid& y) {
  return x.deleted_ == y.deleted_ &&
         (x.family_ == y.family_ || same_family(*x.family_, *y.family_));
}

}  // namespace pmi
