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

#ifndef RELCC_EVALUATION_HPP
#define RELCC_EVALUATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relcc/core.hpp"
#include "relcc/solvers.hpp"

namespace relcc {

/// Adjusted Rand index between two partitions of the same universe, in
/// [-1, 1], 1 iff the partitions are identical. When the contingency
/// denominator degenerates to zero (both all-singletons or both one-cluster)
/// the partitions are compared directly: 1 if identical, else 0. Throws
/// UniverseMismatchError on different sizes.
double adjusted_rand_index(const Clustering& f1, const Clustering& f2);

/// Number of distinct labels in f.
int num_clusters(const Clustering& f);

struct ExperimentRow {
  int k = 0;
  double a = 1.0;
  double b = 0.0;
  std::uint64_t seed = 0;
  Variant variant = Variant::ls_ad_vc;
  double ari = 0.0;
  int found_clusters = 0;
  Cost cost = 0;
  Cost removed = 0;
  std::int64_t runtime_ms = 0;
  bool ok = true;
  std::string error;
};

struct GridConfig {
  std::size_t num_items = 160;
  std::vector<int> ks = {2, 4, 8, 16};
  std::vector<double> fractions = {0.005, 0.01, 0.02, 0.05,
                                   0.1,   0.2,  0.5,  1.0};
  std::vector<double> noises = {0.0, 0.1, 0.2};
  int repeats = 10;
  std::uint64_t master_seed = 0;
  int num_threads = 0;  // 0: hardware concurrency
};

/// Seed of one grid instance, derived from the master seed and the cell
/// coordinates so any cell is reproducible on its own.
std::uint64_t grid_cell_seed(std::uint64_t master_seed, int k, double a,
                             double b, int repeat);

/// Instances the grid will generate: one per cell and repeat, except that the
/// deterministic a == 1, b == 0 cells run once.
std::size_t grid_run_count(const GridConfig& config);

/// Generates every grid instance, runs each variant on it, and returns one
/// row per (instance, variant) with the ARI against the ground truth.
/// Instances run concurrently; rows are sorted by (k, a, b, seed, variant),
/// so the output is deterministic given the master seed. A failing cell is
/// recorded in its rows and the grid continues.
std::vector<ExperimentRow> run_experiment_grid(
    const GridConfig& config, const std::vector<Variant>& variants);

}  // namespace relcc

#endif  // RELCC_EVALUATION_HPP
