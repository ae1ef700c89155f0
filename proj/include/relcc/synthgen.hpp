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

#ifndef RELCC_SYNTHGEN_HPP
#define RELCC_SYNTHGEN_HPP

#include <cstdint>
#include <vector>

#include "relcc/core.hpp"

namespace relcc {

struct GeneratorConfig {
  std::size_t num_items = 0;
  int num_clusters = 0;
  double sample_fraction = 1.0;  // fraction of the valid triplets to keep
  double noise_fraction = 0.0;   // fraction of kept triplets to corrupt
  std::uint64_t seed = 0;
};

/// Balanced ground truth: items assigned round-robin to k clusters, sizes
/// differing by at most one. Throws std::invalid_argument unless
/// 1 <= k <= n. The seed is reserved for a shuffled assignment and currently
/// unused.
Clustering generate_ground_truth(std::size_t n, int k, std::uint64_t seed = 0);

/// Every 3-item subset with exactly two items co-clustered in `truth` yields
/// the triplet whose outlier is the lone item; all-same and all-different
/// subsets yield nothing. Subsets are visited in ascending order.
TripletSet enumerate_valid_triplets(const Clustering& truth);

/// Uniform sample without replacement of round(fraction * |all|) triplets
/// (Fisher-Yates prefix). fraction == 1 returns `all` unchanged. Throws
/// std::invalid_argument unless 0 < fraction <= 1.
TripletSet sample_triplets(const TripletSet& all, double fraction,
                           std::uint64_t seed);

/// Corrupts round(fraction * |T|) distinct positions by swapping the outlier
/// with one close-pair item (fair coin). Output size equals input size.
/// Throws std::invalid_argument unless 0 <= fraction < 1.
TripletSet apply_noise(const TripletSet& T, double fraction,
                       std::uint64_t seed);

struct GeneratedInstance {
  Clustering truth;
  TripletSet triplets;
  std::size_t num_enumerated = 0;  // valid triplets before sampling
};

/// Ground truth, enumeration, sampling and noise in one step, with the
/// stage seeds derived from config.seed.
GeneratedInstance generate_instance(const GeneratorConfig& config);

struct ReducedTriplets {
  TripletSet triplets;  // over num_real_items + dummy_sources.size() items
  std::size_t num_real_items = 0;
  /// Edge that introduced each dummy item; dummy d has item index
  /// num_real_items + d. "+" edge (u,v) yields (u, v, dummy); "-" edge (u,v)
  /// yields (u, dummy, v).
  std::vector<CCEdge> dummy_sources;
};

/// Encodes an unweighted correlation clustering instance as triplets; each
/// edge gets one fresh dummy item occurring in exactly one triplet, so the
/// optimal costs of the two instances coincide. Edges are visited "+" first,
/// each group sorted by (u,v). Throws UnsupportedWeightsError on non-unit
/// weights.
ReducedTriplets reduce_cc_to_triplets(const CCInstance& G);

}  // namespace relcc

#endif  // RELCC_SYNTHGEN_HPP
