// Copyright 2026 The relcc Authors.
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

#include "relcc/core.hpp"

#include <algorithm>
#include <unordered_map>

namespace relcc {

// ---------------------------------------------------------------------------
// ItemUniverse
// ---------------------------------------------------------------------------

ItemUniverse::ItemUniverse(std::size_t n) {
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) intern(std::to_string(i));
}

ItemIndex ItemUniverse::intern(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  auto idx = static_cast<ItemIndex>(labels_.size());
  labels_.push_back(label);
  index_.emplace(label, idx);
  return idx;
}

ItemIndex ItemUniverse::intern_unique(const std::string& label) {
  if (index_.count(label) > 0)
    throw std::invalid_argument("duplicate item label: " + label);
  return intern(label);
}

std::optional<ItemIndex> ItemUniverse::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& ItemUniverse::label(ItemIndex index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= labels_.size())
    throw UniverseMismatchError("item index " + std::to_string(index) +
                                " outside universe of size " +
                                std::to_string(labels_.size()));
  return labels_[index];
}

// ---------------------------------------------------------------------------
// Triplet / TripletSet
// ---------------------------------------------------------------------------

Triplet Triplet::make(ItemIndex close_a, ItemIndex close_b,
                      ItemIndex outlier) {
  if (close_a == close_b || close_a == outlier || close_b == outlier)
    throw std::invalid_argument("triplet items must be pairwise distinct");
  Triplet t;
  t.i = std::min(close_a, close_b);
  t.j = std::max(close_a, close_b);
  t.o = outlier;
  return t;
}

TripletSet::TripletSet(std::size_t num_items, std::vector<Triplet> triplets)
    : num_items_(num_items), triplets_(std::move(triplets)) {
  by_item_.resize(num_items_);
  const auto n = static_cast<ItemIndex>(num_items_);
  for (std::size_t t = 0; t < triplets_.size(); ++t) {
    const Triplet& tr = triplets_[t];
    for (ItemIndex u : {tr.i, tr.j, tr.o}) {
      if (u < 0 || u >= n)
        throw UniverseMismatchError(
            "triplet item " + std::to_string(u) +
            " outside universe of size " + std::to_string(num_items_));
    }
    const auto ti = static_cast<std::int32_t>(t);
    by_item_[tr.i].push_back(ti);
    by_item_[tr.j].push_back(ti);
    by_item_[tr.o].push_back(ti);
    by_pair_[pair_key(tr.i, tr.j)].push_back(ti);
    by_pair_[pair_key(tr.i, tr.o)].push_back(ti);
    by_pair_[pair_key(tr.j, tr.o)].push_back(ti);
  }
  pairs_.reserve(by_pair_.size());
  for (const auto& [key, _] : by_pair_)
    pairs_.emplace_back(static_cast<ItemIndex>(key >> 32),
                        static_cast<ItemIndex>(key & 0xffffffffu));
  std::sort(pairs_.begin(), pairs_.end());
}

std::span<const std::int32_t> TripletSet::by_item(ItemIndex u) const {
  if (u < 0 || static_cast<std::size_t>(u) >= num_items_)
    throw UniverseMismatchError("item index " + std::to_string(u) +
                                " outside universe of size " +
                                std::to_string(num_items_));
  return by_item_[u];
}

std::span<const std::int32_t> TripletSet::by_pair(ItemIndex u,
                                                  ItemIndex v) const {
  auto it = by_pair_.find(pair_key(u, v));
  if (it == by_pair_.end()) return {};
  return it->second;
}

// ---------------------------------------------------------------------------
// Clustering
// ---------------------------------------------------------------------------

Clustering::Clustering(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int l : labels_)
    if (l < 1)
      throw std::invalid_argument("cluster labels must be positive, got " +
                                  std::to_string(l));
}

Clustering Clustering::all_different(std::size_t n) {
  Clustering f(n);
  for (std::size_t u = 0; u < n; ++u) f.labels_[u] = static_cast<int>(u) + 1;
  return f;
}

int Clustering::max_label() const {
  int m = 0;
  for (int l : labels_) m = std::max(m, l);
  return m;
}

// ---------------------------------------------------------------------------
// CCInstance
// ---------------------------------------------------------------------------

void CCInstance::add_edge(ItemIndex u, ItemIndex v, EdgeSign sign,
                          Cost weight) {
  if (u == v) throw std::invalid_argument("self pair in CC instance");
  if (weight < 1)
    throw std::invalid_argument("edge weights must be positive integers");
  const auto n = static_cast<ItemIndex>(num_items_);
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw UniverseMismatchError("edge item outside universe of size " +
                                std::to_string(num_items_));
  const std::uint64_t key = pair_key(u, v);
  auto it = by_pair_.find(key);
  if (it != by_pair_.end()) {
    CCEdge& e = edges_[it->second];
    if (e.sign != sign)
      throw InconsistencyError("pair (" + std::to_string(u) + "," +
                               std::to_string(v) +
                               ") carries both + and - evidence");
    e.weight += weight;
    return;
  }
  CCEdge e;
  e.u = std::min(u, v);
  e.v = std::max(u, v);
  e.weight = weight;
  e.sign = sign;
  by_pair_.emplace(key, edges_.size());
  edges_.push_back(e);
}

const CCEdge* CCInstance::find_edge(ItemIndex u, ItemIndex v) const {
  auto it = by_pair_.find(pair_key(u, v));
  if (it == by_pair_.end()) return nullptr;
  return &edges_[it->second];
}

bool CCInstance::unit_weights() const {
  for (const CCEdge& e : edges_)
    if (e.weight != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Cost functions
// ---------------------------------------------------------------------------

PairImplication pair_implication(const Triplet& t, ItemIndex u, ItemIndex v) {
  if (u == v) throw InvalidPairError("pair members must be distinct");
  if (!t.contains(u) || !t.contains(v)) return PairImplication::not_constrained;
  if ((u == t.i && v == t.j) || (u == t.j && v == t.i))
    return PairImplication::same;
  return PairImplication::different;
}

bool is_satisfied(const Triplet& t, const Clustering& f) {
  const auto n = static_cast<ItemIndex>(f.size());
  for (ItemIndex u : {t.i, t.j, t.o})
    if (u < 0 || u >= n)
      throw UniverseMismatchError("triplet item " + std::to_string(u) +
                                  " outside universe of size " +
                                  std::to_string(f.size()));
  return f.label(t.i) == f.label(t.j) && f.label(t.j) != f.label(t.o);
}

Cost triplet_cost(const TripletSet& T, const Clustering& f) {
  if (T.num_items() != f.size())
    throw UniverseMismatchError(
        "triplet set over " + std::to_string(T.num_items()) +
        " items scored against clustering of " + std::to_string(f.size()));
  Cost unsatisfied = 0;
  const std::vector<int>& labels = f.labels();
  for (const Triplet& t : T.triplets())
    if (!(labels[t.i] == labels[t.j] && labels[t.j] != labels[t.o]))
      ++unsatisfied;
  return unsatisfied;
}

Cost cc_cost(const CCInstance& G, const Clustering& f) {
  if (G.num_items() != f.size())
    throw UniverseMismatchError(
        "CC instance over " + std::to_string(G.num_items()) +
        " items scored against clustering of " + std::to_string(f.size()));
  Cost cost = 0;
  const std::vector<int>& labels = f.labels();
  for (const CCEdge& e : G.edges()) {
    const bool together = labels[e.u] == labels[e.v];
    if (e.sign == EdgeSign::plus ? !together : together) cost += e.weight;
  }
  return cost;
}

Clustering cleanup_labels(const Clustering& f) {
  Clustering out(f.size());
  std::unordered_map<int, int> remap;
  int next = 1;
  for (std::size_t u = 0; u < f.size(); ++u) {
    auto [it, inserted] = remap.try_emplace(f.label(u), next);
    if (inserted) ++next;
    out.set_label(u, it->second);
  }
  return out;
}

}  // namespace relcc
