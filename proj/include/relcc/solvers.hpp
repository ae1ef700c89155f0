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

#ifndef RELCC_SOLVERS_HPP
#define RELCC_SOLVERS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "relcc/consistency.hpp"
#include "relcc/core.hpp"

namespace relcc {

enum class InitMode { all_equal, all_different };

struct SolverConfig {
  InitMode init_mode = InitMode::all_different;
  /// Seeded per-pass shuffle of the item sweep order; nullopt keeps the
  /// ascending item order.
  std::optional<std::uint64_t> sweep_order_seed;
  bool vc_preprocess = false;
  int max_passes = 1000;
};

struct SolveResult {
  Clustering clustering;        // labels cleaned to 1..h
  Cost cost = 0;                // unsatisfied triplets on the original input
  Cost cost_on_input = 0;       // unsatisfied triplets on the solver's input
  int passes = 0;
  Cost removed_triplets = 0;    // size of the cover taken out, if any
  bool converged = true;        // false iff max_passes was exhausted
};

/// Greedy single-item local search on the unsatisfied-triplet count. Each
/// pass visits every item and moves it to the strictly best label among the
/// existing ones plus one fresh label; ties keep the current label. Labels
/// are cleaned up after every pass. Stops at the first pass without a move,
/// a fixed point of single-item relabelings.
SolveResult local_search(const TripletSet& T, const SolverConfig& config);

enum class Variant { ls_eq, ls_ad, ls_eq_vc, ls_ad_vc };

/// Accepts "ls-eq", "ls-ad", "ls-eq-vc", "ls-ad-vc" (case-insensitive).
/// Throws std::invalid_argument otherwise.
Variant parse_variant(std::string_view name);
std::string_view variant_name(Variant variant);

/// Runs one of the four named heuristics. The -VC variants first strip a
/// pruned vertex cover of the constraint graph and solve on the consistent
/// remainder; cost is always reported against the original T.
SolveResult run_variant(const TripletSet& T, Variant variant,
                        std::optional<std::uint64_t> sweep_seed = {});

using CCSolver = std::function<Clustering(const CCInstance&)>;

/// Cover-then-solve pipeline: make T consistent, map the remainder to a
/// correlation clustering instance, and hand that to cc_solver. Costs are
/// reported on both the original and the consistent triplet set.
SolveResult approximation_pipeline(const TripletSet& T,
                                   const CCSolver& cc_solver);

/// Greedy single-item local search on the CC disagreement cost, all-different
/// initialisation, same sweep and termination contract as local_search.
Clustering cc_local_search(const CCInstance& G,
                           std::optional<std::uint64_t> sweep_seed = {});

/// Exact minimiser of the unsatisfied-triplet count, by enumeration of all
/// set partitions in restricted-growth-string order (first minimiser wins).
/// Throws SizeLimitError above 12 items.
SolveResult brute_force_optimal(const TripletSet& T);

/// Exact minimum vertex cover of the constraint graph, by branch and bound
/// over the implicit edges. Throws SizeLimitError above 20 conflict vertices.
VertexCover brute_force_min_vc(const ConstraintGraph& C);

}  // namespace relcc

#endif  // RELCC_SOLVERS_HPP
