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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relcc/core.hpp"

using namespace relcc;

namespace {

// Items a..f as dense indices.
enum : ItemIndex { A, B, C, D, E, F };

// Six items in three planted groups; the reference assignment
// satisfies exactly one of the four triplets.
TripletSet toy_instance() {
  return TripletSet(6, {Triplet::make(A, B, C), Triplet::make(B, D, C),
                        Triplet::make(A, B, E), Triplet::make(A, F, C)});
}

Clustering toy_reference() {
  return Clustering({1, 1, 2, 3, 1, 2});  // a:1 b:1 c:2 d:3 e:1 f:2
}

}  // namespace

TEST_CASE("item universe interns labels to dense indices") {
  ItemUniverse universe;
  CHECK(universe.intern("apple") == 0);
  CHECK(universe.intern("pear") == 1);
  CHECK(universe.intern("apple") == 0);
  CHECK(universe.size() == 2);
  CHECK(universe.label(1) == "pear");
  CHECK(universe.find("pear") == 1);
  CHECK(!universe.find("plum"));
  CHECK_THROWS_AS(universe.intern_unique("apple"), std::invalid_argument);
  CHECK_THROWS_AS(universe.label(2), UniverseMismatchError);

  ItemUniverse numbered(3);
  CHECK(numbered.label(0) == "0");
  CHECK(numbered.label(2) == "2");
}

TEST_CASE("triplet close pair is normalised, items must be distinct") {
  const Triplet t = Triplet::make(4, 1, 2);
  CHECK(t.i == 1);
  CHECK(t.j == 4);
  CHECK(t.o == 2);
  CHECK(Triplet::make(1, 4, 2) == t);
  CHECK_THROWS_AS(Triplet::make(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Triplet::make(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Triplet::make(2, 1, 2), std::invalid_argument);
}

TEST_CASE("triplet set builds exact inverted indices") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    const int m = std::uniform_int_distribution<int>(0, 40)(rng);
    const TripletSet set = testing::random_triplet_set(n, m, rng);

    std::size_t by_item_total = 0;
    for (ItemIndex u = 0; u < n; ++u) {
      const auto indices = set.by_item(u);
      by_item_total += indices.size();
      for (std::int32_t t : indices) CHECK(set[t].contains(u));
    }
    CHECK(by_item_total == 3 * set.size());

    // by_pair matches a full rescan for every pair
    for (ItemIndex u = 0; u < n; ++u) {
      for (ItemIndex v = u + 1; v < n; ++v) {
        std::vector<std::int32_t> expect;
        for (std::size_t t = 0; t < set.size(); ++t)
          if (set[t].contains(u) && set[t].contains(v))
            expect.push_back(static_cast<std::int32_t>(t));
        const auto got = set.by_pair(u, v);
        CHECK(std::vector<std::int32_t>(got.begin(), got.end()) == expect);
      }
    }
  }
}

TEST_CASE("triplet set rejects items outside the universe") {
  CHECK_THROWS_AS(TripletSet(3, {Triplet::make(0, 1, 3)}),
                  UniverseMismatchError);
  CHECK_THROWS_AS(TripletSet(0, {Triplet::make(0, 1, 2)}),
                  UniverseMismatchError);
}

TEST_CASE("satisfaction follows the outlier definition") {
  // f(a)=f(b) != f(c) is satisfied
  CHECK(is_satisfied(Triplet::make(A, B, C), Clustering({1, 1, 2})));
  // all three together is not
  CHECK(!is_satisfied(Triplet::make(A, B, E),
                      Clustering({1, 1, 2, 3, 1, 2})));
  // close pair split is not
  CHECK(!is_satisfied(Triplet::make(A, F, C),
                      Clustering({1, 1, 2, 3, 1, 2})));
  CHECK_THROWS_AS(is_satisfied(Triplet::make(0, 1, 5), Clustering(3)),
                  UniverseMismatchError);
}

TEST_CASE("satisfaction is invariant under swapping the close pair") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    const Triplet t = testing::random_triplet(n, rng);
    const Clustering f = testing::random_clustering(n, rng);
    CHECK(is_satisfied(Triplet::make(t.i, t.j, t.o), f) ==
          is_satisfied(Triplet::make(t.j, t.i, t.o), f));
  }
}

TEST_CASE("triplet cost counts unsatisfied triplets with multiplicity") {
  CHECK(triplet_cost(toy_instance(), toy_reference()) == 3);
  CHECK(triplet_cost(TripletSet(4, {}), Clustering(4)) == 0);
  const TripletSet duplicated(
      3, {Triplet::make(A, B, C), Triplet::make(A, B, C)});
  CHECK(triplet_cost(duplicated, Clustering({1, 2, 3})) == 2);
  CHECK_THROWS_AS(triplet_cost(toy_instance(), Clustering(5)),
                  UniverseMismatchError);
}

TEST_CASE("triplet cost is bounded and label-relabel invariant") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const int m = std::uniform_int_distribution<int>(0, 30)(rng);
    const TripletSet set = testing::random_triplet_set(n, m, rng);
    const Clustering f = testing::random_clustering(n, rng);
    const Cost cost = triplet_cost(set, f);
    CHECK(cost >= 0);
    CHECK(cost <= static_cast<Cost>(set.size()));
    CHECK(cost == testing::naive_triplet_cost(set.triplets(), f.labels()));

    // bijective relabeling: label l -> 2l + 5
    std::vector<int> relabeled(f.labels());
    for (int& l : relabeled) l = 2 * l + 5;
    CHECK(triplet_cost(set, Clustering(std::move(relabeled))) == cost);
  }
}

TEST_CASE("cc instance keeps signed pairs disjoint") {
  CCInstance g(3);
  g.add_edge(0, 1, EdgeSign::plus);
  g.add_edge(1, 0, EdgeSign::plus, 2);  // merges
  g.add_edge(0, 2, EdgeSign::minus);
  CHECK(g.num_edges() == 2);
  CHECK(g.find_edge(1, 0)->weight == 3);
  CHECK_THROWS_AS(g.add_edge(0, 1, EdgeSign::minus), InconsistencyError);
  CHECK_THROWS_AS(g.add_edge(0, 0, EdgeSign::plus), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1, EdgeSign::plus, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5, EdgeSign::plus), UniverseMismatchError);
  CHECK(!g.unit_weights());
}

TEST_CASE("cc cost sums violated edge weights") {
  CCInstance g(3);
  g.add_edge(A, B, EdgeSign::plus);
  g.add_edge(A, C, EdgeSign::minus);
  g.add_edge(B, C, EdgeSign::minus);
  CHECK(cc_cost(g, Clustering(3, 1)) == 2);
  CHECK(cc_cost(g, Clustering({1, 1, 2})) == 0);
  CHECK(cc_cost(g, Clustering({1, 2, 3})) == 1);
  CHECK_THROWS_AS(cc_cost(g, Clustering(4)), UniverseMismatchError);

  std::mt19937_64 rng(17);
  for (int round = 0; round < 50; ++round) {
    const Clustering f = testing::random_clustering(3, rng);
    std::vector<int> relabeled(f.labels());
    for (int& l : relabeled) l += 41;
    CHECK(cc_cost(g, f) == cc_cost(g, Clustering(std::move(relabeled))));
  }
}

TEST_CASE("cleanup renumbers labels by first appearance") {
  CHECK(cleanup_labels(Clustering({5, 5, 9})) == Clustering({1, 1, 2}));
  CHECK(cleanup_labels(Clustering({1, 2, 3})) == Clustering({1, 2, 3}));
  CHECK(cleanup_labels(Clustering({3, 1, 3})) == Clustering({1, 2, 1}));
}

TEST_CASE("cleanup preserves the partition") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const Clustering f = testing::random_clustering(n, rng);
    const Clustering cleaned = cleanup_labels(f);
    CHECK(cleaned.max_label() >= 1);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        CHECK((f.label(u) == f.label(v)) ==
              (cleaned.label(u) == cleaned.label(v)));
    // labels are exactly 1..h
    std::set<int> labels(cleaned.labels().begin(), cleaned.labels().end());
    CHECK(*labels.begin() == 1);
    CHECK(*labels.rbegin() == static_cast<int>(labels.size()));
  }
}

TEST_CASE("pair implication reads the three constraints off a triplet") {
  const Triplet t = Triplet::make(A, B, C);
  CHECK(pair_implication(t, A, B) == PairImplication::same);
  CHECK(pair_implication(t, B, A) == PairImplication::same);
  CHECK(pair_implication(t, B, C) == PairImplication::different);
  CHECK(pair_implication(t, C, A) == PairImplication::different);
  CHECK(pair_implication(t, A, D) == PairImplication::not_constrained);
  CHECK(pair_implication(t, D, E) == PairImplication::not_constrained);
  CHECK_THROWS_AS(pair_implication(t, A, A), InvalidPairError);
}

TEST_CASE("clustering labels must be positive") {
  CHECK_THROWS_AS(Clustering({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Clustering(std::vector<int>{-3}), std::invalid_argument);
  CHECK(Clustering::all_different(4) == Clustering({1, 2, 3, 4}));
}
