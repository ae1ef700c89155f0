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

#include "relcc/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace relcc {

namespace {

// splitmix64; used to derive independent stage seeds from one config seed.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::size_t round_half_up(double x) {
  return static_cast<std::size_t>(std::floor(x + 0.5));
}

// First `count` positions of a Fisher-Yates shuffle of 0..n-1, in draw order.
std::vector<std::size_t> sample_prefix(std::size_t n, std::size_t count,
                                       std::mt19937_64& rng) {
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(positions[i], positions[pick(rng)]);
  }
  positions.resize(count);
  return positions;
}

}  // namespace

Clustering generate_ground_truth(std::size_t n, int k, std::uint64_t seed) {
  (void)seed;
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw std::invalid_argument("need 1 <= k <= n, got k=" +
                                std::to_string(k) + ", n=" +
                                std::to_string(n));
  Clustering truth(n);
  for (std::size_t u = 0; u < n; ++u)
    truth.set_label(u, static_cast<int>(u % static_cast<std::size_t>(k)) + 1);
  return truth;
}

TripletSet enumerate_valid_triplets(const Clustering& truth) {
  const std::size_t n = truth.size();
  std::vector<Triplet> triplets;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        const int lx = truth.label(x), ly = truth.label(y),
                  lz = truth.label(z);
        const auto xi = static_cast<ItemIndex>(x);
        const auto yi = static_cast<ItemIndex>(y);
        const auto zi = static_cast<ItemIndex>(z);
        if (lx == ly && ly != lz)
          triplets.push_back(Triplet::make(xi, yi, zi));
        else if (lx == lz && lz != ly)
          triplets.push_back(Triplet::make(xi, zi, yi));
        else if (ly == lz && lz != lx)
          triplets.push_back(Triplet::make(yi, zi, xi));
      }
    }
  }
  return TripletSet(n, std::move(triplets));
}

TripletSet sample_triplets(const TripletSet& all, double fraction,
                           std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("sample fraction must be in (0, 1], got " +
                                std::to_string(fraction));
  if (fraction == 1.0 || all.empty())
    return TripletSet(all.num_items(), all.triplets());
  const std::size_t count =
      round_half_up(fraction * static_cast<double>(all.size()));
  std::mt19937_64 rng(seed);
  std::vector<Triplet> sampled;
  sampled.reserve(count);
  for (std::size_t p : sample_prefix(all.size(), count, rng))
    sampled.push_back(all[p]);
  return TripletSet(all.num_items(), std::move(sampled));
}

TripletSet apply_noise(const TripletSet& T, double fraction,
                       std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction < 1.0))
    throw std::invalid_argument("noise fraction must be in [0, 1), got " +
                                std::to_string(fraction));
  std::vector<Triplet> triplets = T.triplets();
  const std::size_t count =
      round_half_up(fraction * static_cast<double>(T.size()));
  if (count > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t p : sample_prefix(T.size(), count, rng)) {
      const Triplet t = triplets[p];
      const ItemIndex victim = coin(rng) == 0 ? t.i : t.j;
      const ItemIndex kept = victim == t.i ? t.j : t.i;
      triplets[p] = Triplet::make(kept, t.o, victim);
    }
  }
  return TripletSet(T.num_items(), std::move(triplets));
}

GeneratedInstance generate_instance(const GeneratorConfig& config) {
  GeneratedInstance instance;
  instance.truth = generate_ground_truth(config.num_items,
                                         config.num_clusters, config.seed);
  TripletSet all = enumerate_valid_triplets(instance.truth);
  instance.num_enumerated = all.size();
  TripletSet sampled = sample_triplets(all, config.sample_fraction,
                                       mix_seed(config.seed ^ 0x5a5a5a5aull));
  instance.triplets = apply_noise(sampled, config.noise_fraction,
                                  mix_seed(config.seed ^ 0xc3c3c3c3ull));
  return instance;
}

ReducedTriplets reduce_cc_to_triplets(const CCInstance& G) {
  if (!G.unit_weights())
    throw UnsupportedWeightsError(
        "reduction to triplets requires unit weights");
  std::vector<CCEdge> plus, minus;
  for (const CCEdge& e : G.edges())
    (e.sign == EdgeSign::plus ? plus : minus).push_back(e);
  auto by_pair = [](const CCEdge& a, const CCEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  };
  std::sort(plus.begin(), plus.end(), by_pair);
  std::sort(minus.begin(), minus.end(), by_pair);

  ReducedTriplets reduced;
  reduced.num_real_items = G.num_items();
  std::vector<Triplet> triplets;
  triplets.reserve(plus.size() + minus.size());
  auto next_dummy = static_cast<ItemIndex>(G.num_items());
  for (const CCEdge& e : plus) {
    triplets.push_back(Triplet::make(e.u, e.v, next_dummy++));
    reduced.dummy_sources.push_back(e);
  }
  for (const CCEdge& e : minus) {
    triplets.push_back(Triplet::make(e.u, next_dummy++, e.v));
    reduced.dummy_sources.push_back(e);
  }
  reduced.triplets = TripletSet(
      G.num_items() + reduced.dummy_sources.size(), std::move(triplets));
  return reduced;
}

}  // namespace relcc
