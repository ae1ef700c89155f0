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

#include "relcc/consistency.hpp"

#include <algorithm>
#include <string>

namespace relcc {

std::int64_t ConstraintGraph::num_implicit_edges() const {
  std::int64_t edges = 0;
  for (const ConflictPair& p : pairs_)
    edges += static_cast<std::int64_t>(p.same_side.size()) *
             static_cast<std::int64_t>(p.diff_side.size());
  return edges;
}

std::span<const std::int32_t> ConstraintGraph::conflicts_of(
    std::int32_t t) const {
  auto it = by_triplet_.find(t);
  if (it == by_triplet_.end()) return {};
  return it->second;
}

std::vector<std::int32_t> ConstraintGraph::conflict_vertices() const {
  std::vector<std::int32_t> vertices;
  vertices.reserve(by_triplet_.size());
  for (const auto& [t, _] : by_triplet_) vertices.push_back(t);
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

ConstraintGraph build_constraint_graph(const TripletSet& T) {
  ConstraintGraph graph;
  graph.num_triplets_ = T.size();
  for (const auto& [u, v] : T.constrained_pairs()) {
    ConflictPair p;
    p.u = u;
    p.v = v;
    for (std::int32_t t : T.by_pair(u, v)) {
      switch (pair_implication(T[t], u, v)) {
        case PairImplication::same:
          p.same_side.push_back(t);
          break;
        case PairImplication::different:
          p.diff_side.push_back(t);
          break;
        case PairImplication::not_constrained:
          break;  // unreachable: by_pair only lists triplets containing both
      }
    }
    if (!p.same_side.empty() && !p.diff_side.empty())
      graph.pairs_.push_back(std::move(p));
  }
  for (std::size_t id = 0; id < graph.pairs_.size(); ++id) {
    const ConflictPair& p = graph.pairs_[id];
    const auto pair_id = static_cast<std::int32_t>(id);
    for (std::int32_t t : p.same_side) graph.by_triplet_[t].push_back(pair_id);
    for (std::int32_t t : p.diff_side) graph.by_triplet_[t].push_back(pair_id);
  }
  return graph;
}

namespace {

std::vector<char> cover_bitmap(const ConstraintGraph& C,
                               const VertexCover& vc) {
  std::vector<char> in_cover(C.num_triplets(), 0);
  for (std::int32_t t : vc.covered) {
    if (t < 0 || static_cast<std::size_t>(t) >= C.num_triplets())
      throw InvalidCoverError("cover member " + std::to_string(t) +
                              " is not a triplet index");
    in_cover[t] = 1;
  }
  return in_cover;
}

bool covers_all_edges(const ConstraintGraph& C,
                      const std::vector<char>& in_cover) {
  for (const ConflictPair& p : C.conflict_pairs()) {
    const bool same_uncovered = std::any_of(
        p.same_side.begin(), p.same_side.end(),
        [&](std::int32_t t) { return !in_cover[t]; });
    if (!same_uncovered) continue;
    const bool diff_uncovered = std::any_of(
        p.diff_side.begin(), p.diff_side.end(),
        [&](std::int32_t t) { return !in_cover[t]; });
    if (diff_uncovered) return false;
  }
  return true;
}

}  // namespace

bool is_vertex_cover(const ConstraintGraph& C, const VertexCover& vc) {
  return covers_all_edges(C, cover_bitmap(C, vc));
}

VertexCover approx_vertex_cover(const ConstraintGraph& C) {
  std::vector<char> covered(C.num_triplets(), 0);
  VertexCover vc;
  for (const ConflictPair& p : C.conflict_pairs()) {
    // Within a pair the cover only grows, so a monotone cursor over the diff
    // side visits exactly the first uncovered partner of each uncovered
    // same-side triplet.
    std::size_t cursor = 0;
    for (std::int32_t s : p.same_side) {
      if (covered[s]) continue;
      while (cursor < p.diff_side.size() && covered[p.diff_side[cursor]])
        ++cursor;
      if (cursor == p.diff_side.size()) break;
      const std::int32_t d = p.diff_side[cursor];
      covered[s] = 1;
      covered[d] = 1;
      vc.covered.insert(s);
      vc.covered.insert(d);
    }
  }
  return vc;
}

VertexCover prune_redundant(const ConstraintGraph& C, const VertexCover& vc) {
  std::vector<char> in_cover = cover_bitmap(C, vc);
  if (!covers_all_edges(C, in_cover))
    throw InvalidCoverError("prune_redundant input is not a vertex cover");
  // vc.covered iterates ascending by construction of std::set.
  for (std::int32_t t : vc.covered) {
    bool redundant = true;
    for (std::int32_t pair_id : C.conflicts_of(t)) {
      const ConflictPair& p = C.conflict_pairs()[pair_id];
      const bool on_same =
          std::binary_search(p.same_side.begin(), p.same_side.end(), t);
      const auto& opposite = on_same ? p.diff_side : p.same_side;
      for (std::int32_t neighbour : opposite) {
        if (!in_cover[neighbour]) {
          redundant = false;
          break;
        }
      }
      if (!redundant) break;
    }
    if (redundant) in_cover[t] = 0;
  }
  VertexCover pruned;
  for (std::int32_t t : vc.covered)
    if (in_cover[t]) pruned.covered.insert(pruned.covered.end(), t);
  return pruned;
}

ConsistentSplit make_consistent(const TripletSet& T) {
  const ConstraintGraph graph = build_constraint_graph(T);
  const VertexCover cover = prune_redundant(graph, approx_vertex_cover(graph));
  std::vector<char> removed(T.size(), 0);
  for (std::int32_t t : cover.covered) removed[t] = 1;
  std::vector<Triplet> kept;
  kept.reserve(T.size() - cover.size());
  for (std::size_t t = 0; t < T.size(); ++t)
    if (!removed[t]) kept.push_back(T[t]);
  return {TripletSet(T.num_items(), std::move(kept)), cover};
}

CCInstance to_cc_instance(const TripletSet& consistent) {
  CCInstance instance(consistent.num_items());
  for (const auto& [u, v] : consistent.constrained_pairs()) {
    const auto triplets = consistent.by_pair(u, v);
    const PairImplication first =
        pair_implication(consistent[triplets.front()], u, v);
    for (std::int32_t t : triplets.subspan(1)) {
      if (pair_implication(consistent[t], u, v) != first)
        throw InconsistencyError("conflicting evidence for pair (" +
                                 std::to_string(u) + "," + std::to_string(v) +
                                 ")");
    }
    instance.add_edge(u, v,
                      first == PairImplication::same ? EdgeSign::plus
                                                     : EdgeSign::minus,
                      static_cast<Cost>(triplets.size()));
  }
  return instance;
}

}  // namespace relcc
