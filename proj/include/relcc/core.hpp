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

#ifndef RELCC_CORE_HPP
#define RELCC_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace relcc {

using ItemIndex = std::int32_t;
using Cost = std::int64_t;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Two structures that must share an item universe do not.
class UniverseMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An item pair {u,v} with u == v where a proper pair is required.
class InvalidPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex set handed to a cover operation does not cover all edges.
class InvalidCoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A triplet set expected to be conflict-free carries opposing evidence.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact oracle was asked for an instance above its enumeration limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weighted input where only unit weights are supported.
class UnsupportedWeightsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// Item universe
// ---------------------------------------------------------------------------

/// The set of items being clustered. External string labels are interned to
/// dense indices 0..n-1 in order of first appearance; all algorithms work on
/// the indices.
class ItemUniverse {
 public:
  ItemUniverse() = default;

  /// Universe of n anonymous items labelled "0".."n-1".
  explicit ItemUniverse(std::size_t n);

  /// Index of `label`, interning it if not seen before.
  ItemIndex intern(const std::string& label);

  /// Interns `label`, throwing std::invalid_argument if it already exists.
  ItemIndex intern_unique(const std::string& label);

  std::optional<ItemIndex> find(const std::string& label) const;

  const std::string& label(ItemIndex index) const;

  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ItemIndex> index_;
};

// ---------------------------------------------------------------------------
// Triplets
// ---------------------------------------------------------------------------

/// One relative distance comparison: i and j are the close pair, o is the
/// outlier. The close pair is unordered and stored with i < j; the outlier
/// position is the only semantic one.
struct Triplet {
  ItemIndex i = 0;
  ItemIndex j = 0;
  ItemIndex o = 0;

  /// Normalises the close pair order. Throws std::invalid_argument unless
  /// the three items are pairwise distinct.
  static Triplet make(ItemIndex close_a, ItemIndex close_b, ItemIndex outlier);

  bool contains(ItemIndex u) const { return u == i || u == j || u == o; }

  bool operator==(const Triplet&) const = default;
};

inline std::uint64_t pair_key(ItemIndex u, ItemIndex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

/// A multiset of triplets over items 0..num_items()-1. Duplicates are kept
/// and counted. Inverted indices by item and by unordered item pair are built
/// once at construction; triplet order is preserved.
class TripletSet {
 public:
  TripletSet() = default;

  /// Throws UniverseMismatchError if any triplet mentions an item outside
  /// [0, num_items).
  TripletSet(std::size_t num_items, std::vector<Triplet> triplets);

  std::size_t num_items() const { return num_items_; }
  std::size_t size() const { return triplets_.size(); }
  bool empty() const { return triplets_.empty(); }
  const std::vector<Triplet>& triplets() const { return triplets_; }
  const Triplet& operator[](std::size_t t) const { return triplets_[t]; }

  /// Indices (ascending) of the triplets containing item u.
  std::span<const std::int32_t> by_item(ItemIndex u) const;

  /// Indices (ascending) of the triplets containing both u and v.
  std::span<const std::int32_t> by_pair(ItemIndex u, ItemIndex v) const;

  /// All unordered pairs {u,v} covered by at least one triplet, sorted.
  const std::vector<std::pair<ItemIndex, ItemIndex>>& constrained_pairs()
      const {
    return pairs_;
  }

 private:
  std::size_t num_items_ = 0;
  std::vector<Triplet> triplets_;
  std::vector<std::vector<std::int32_t>> by_item_;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> by_pair_;
  std::vector<std::pair<ItemIndex, ItemIndex>> pairs_;
};

// ---------------------------------------------------------------------------
// Clusterings
// ---------------------------------------------------------------------------

/// Total assignment of items to positive integer cluster labels.
class Clustering {
 public:
  Clustering() = default;

  explicit Clustering(std::size_t n, int label = 1) : labels_(n, label) {}

  /// Throws std::invalid_argument if any label is < 1.
  explicit Clustering(std::vector<int> labels);

  /// Bijection item -> 1..n.
  static Clustering all_different(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  int label(std::size_t u) const { return labels_[u]; }
  void set_label(std::size_t u, int label) { labels_[u] = label; }
  const std::vector<int>& labels() const { return labels_; }
  int max_label() const;

  bool operator==(const Clustering&) const = default;

 private:
  std::vector<int> labels_;
};

// ---------------------------------------------------------------------------
// Correlation clustering instances
// ---------------------------------------------------------------------------

enum class EdgeSign { plus, minus };

struct CCEdge {
  ItemIndex u = 0;
  ItemIndex v = 0;  // u < v
  Cost weight = 1;
  EdgeSign sign = EdgeSign::plus;

  bool operator==(const CCEdge&) const = default;
};

/// Weighted signed graph: "+" edges want their endpoints in the same cluster,
/// "-" edges in different clusters. A pair carries at most one sign; weights
/// are positive integers.
class CCInstance {
 public:
  CCInstance() = default;
  explicit CCInstance(std::size_t num_items) : num_items_(num_items) {}

  /// Adds weight to the signed pair {u,v}, merging with an existing edge of
  /// the same sign. Throws InconsistencyError if the pair already carries the
  /// opposite sign, std::invalid_argument on u == v, weight < 1, or an item
  /// outside the universe.
  void add_edge(ItemIndex u, ItemIndex v, EdgeSign sign, Cost weight = 1);

  std::size_t num_items() const { return num_items_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Edges in insertion order.
  const std::vector<CCEdge>& edges() const { return edges_; }

  /// Null if the pair is unconstrained.
  const CCEdge* find_edge(ItemIndex u, ItemIndex v) const;

  bool unit_weights() const;

 private:
  std::size_t num_items_ = 0;
  std::vector<CCEdge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> by_pair_;
};

// ---------------------------------------------------------------------------
// Cost functions
// ---------------------------------------------------------------------------

enum class PairImplication { same, different, not_constrained };

/// What triplet t says about the unordered pair {u,v}: `same` if {u,v} is the
/// close pair, `different` if one of them is the outlier and the other also
/// belongs to t, `not_constrained` if t does not contain both. Throws
/// InvalidPairError on u == v.
PairImplication pair_implication(const Triplet& t, ItemIndex u, ItemIndex v);

/// True iff f puts the close pair in one cluster and the outlier in another.
/// Throws UniverseMismatchError if an item of t is outside f.
bool is_satisfied(const Triplet& t, const Clustering& f);

/// Number of triplets in T (counted with multiplicity) not satisfied by f.
Cost triplet_cost(const TripletSet& T, const Clustering& f);

/// Correlation clustering disagreement cost: weight of "+" edges cut plus
/// weight of "-" edges not cut.
Cost cc_cost(const CCInstance& G, const Clustering& f);

/// Same partition, labels renumbered to 1..h by order of first appearance in
/// item-index order.
Clustering cleanup_labels(const Clustering& f);

}  // namespace relcc

#endif  // RELCC_CORE_HPP
