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

#ifndef RELCC_CONSISTENCY_HPP
#define RELCC_CONSISTENCY_HPP

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "relcc/core.hpp"

namespace relcc {

/// One item pair {u,v} with conflicting evidence: the triplets on same_side
/// can only be satisfied with f(u) == f(v), those on diff_side only with
/// f(u) != f(v). Both sides are non-empty and sorted ascending.
struct ConflictPair {
  ItemIndex u = 0;
  ItemIndex v = 0;  // u < v
  std::vector<std::int32_t> same_side;
  std::vector<std::int32_t> diff_side;
};

/// Conflict structure of a triplet set. Vertices are triplet indices; the
/// edge set is implicit: the union over conflict pairs of the bipartite
/// cliques same_side x diff_side. The quadratically many edges are never
/// materialised.
class ConstraintGraph {
 public:
  /// Conflict pairs sorted by (u, v).
  const std::vector<ConflictPair>& conflict_pairs() const { return pairs_; }

  /// Size of the triplet set the graph was built from.
  std::size_t num_triplets() const { return num_triplets_; }

  /// Triplets that participate in at least one conflict.
  std::size_t num_conflict_vertices() const { return by_triplet_.size(); }

  /// Sorted indices of the triplets participating in at least one conflict.
  std::vector<std::int32_t> conflict_vertices() const;

  /// Sum over pairs of |same_side| * |diff_side|. Counts an edge once per
  /// pair inducing it.
  std::int64_t num_implicit_edges() const;

  bool edgeless() const { return pairs_.empty(); }

  /// Indices into conflict_pairs() of the pairs containing triplet t
  /// (at most 3).
  std::span<const std::int32_t> conflicts_of(std::int32_t t) const;

  friend ConstraintGraph build_constraint_graph(const TripletSet& T);

 private:
  std::size_t num_triplets_ = 0;
  std::vector<ConflictPair> pairs_;
  std::unordered_map<std::int32_t, std::vector<std::int32_t>> by_triplet_;
};

/// A set of triplet indices touching every implicit edge of a constraint
/// graph.
struct VertexCover {
  std::set<std::int32_t> covered;

  bool contains(std::int32_t t) const { return covered.count(t) > 0; }
  std::size_t size() const { return covered.size(); }
  bool empty() const { return covered.empty(); }

  bool operator==(const VertexCover&) const = default;
};

/// Partitions by_pair lists into same/diff sides and keeps the pairs where
/// both sides are non-empty.
ConstraintGraph build_constraint_graph(const TripletSet& T);

/// True iff every implicit edge has an endpoint in vc. Runs side-membership
/// tests per pair, not edge enumeration.
bool is_vertex_cover(const ConstraintGraph& C, const VertexCover& vc);

/// Gavril/Yannakakis 2-approximation: walk the implicit edges in canonical
/// order (pairs by (u,v), same side outer, diff side inner, both ascending),
/// take both endpoints of each edge not yet covered. Returns a cover of size
/// at most twice the minimum.
VertexCover approx_vertex_cover(const ConstraintGraph& C);

/// Drops redundant cover vertices: scans vc in ascending triplet-index order
/// and removes a vertex iff all of its neighbours are currently in the cover.
/// The result is still a cover. Throws InvalidCoverError if vc is not one.
VertexCover prune_redundant(const ConstraintGraph& C, const VertexCover& vc);

struct ConsistentSplit {
  TripletSet consistent;  // the surviving triplets, original order
  VertexCover removed;    // the pruned cover that was taken out
};

/// Removes a pruned approximate vertex cover of the constraint graph, leaving
/// a triplet set whose constraint graph is edgeless.
ConsistentSplit make_consistent(const TripletSet& T);

/// Maps a consistent triplet set to a correlation clustering instance: each
/// constrained pair becomes a "+" edge if all its triplets imply same, a "-"
/// edge if all imply different, weighted by the number of triplets. Throws
/// InconsistencyError (naming an offending pair) on conflicting evidence.
CCInstance to_cc_instance(const TripletSet& consistent);

}  // namespace relcc

#endif  // RELCC_CONSISTENCY_HPP
