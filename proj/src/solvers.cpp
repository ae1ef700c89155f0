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

#include "relcc/solvers.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <utility>

namespace relcc {

namespace {

// Shared sweep loop for both local searches. `evaluate_item` fills
// `bump` (indexed by label) and returns the label-independent part of the
// item's unsatisfied count, so that count(label) = base + bump[label].
// Returns the clustering after the final pass-end cleanup.
template <typename EvaluateItem>
Clustering greedy_label_sweep(std::size_t n, InitMode init_mode,
                              std::optional<std::uint64_t> sweep_seed,
                              int max_passes, EvaluateItem&& evaluate_item,
                              int* passes_out, bool* converged_out) {
  std::vector<int> f(n);
  int k_new;
  if (init_mode == InitMode::all_equal) {
    std::fill(f.begin(), f.end(), 1);
    k_new = 2;
  } else {
    std::iota(f.begin(), f.end(), 1);
    k_new = static_cast<int>(n) + 1;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::mt19937_64> rng;
  if (sweep_seed) rng.emplace(*sweep_seed);

  std::vector<Cost> bump;
  bool converged = false;
  int passes = 0;
  while (passes < max_passes) {
    ++passes;
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    bool moved = false;
    for (std::size_t u : order) {
      if (static_cast<std::size_t>(k_new) + 1 > bump.size())
        bump.resize(k_new + 1);
      std::fill(bump.begin(), bump.begin() + k_new + 1, 0);
      const Cost base = evaluate_item(u, f, bump);
      if (base < 0) continue;  // item unconstrained, nothing to improve
      const int current = f[u];
      Cost best = base + bump[current];
      int best_label = current;
      for (int label = 1; label <= k_new; ++label) {
        if (base + bump[label] < best) {
          best = base + bump[label];
          best_label = label;
        }
      }
      if (best_label != current) {
        f[u] = best_label;
        moved = true;
        if (best_label == k_new) ++k_new;
      }
    }
    const Clustering cleaned = cleanup_labels(Clustering(std::move(f)));
    f = cleaned.labels();
    k_new = cleaned.max_label() + 1;
    if (!moved) {
      converged = true;
      break;
    }
  }
  *passes_out = passes;
  *converged_out = converged;
  return Clustering(std::move(f));
}

}  // namespace

SolveResult local_search(const TripletSet& T, const SolverConfig& config) {
  if (config.max_passes < 1)
    throw std::invalid_argument("max_passes must be at least 1");
  SolveResult result;
  const std::size_t n = T.num_items();
  if (n == 0) return result;

  auto evaluate_item = [&T](std::size_t u, const std::vector<int>& f,
                            std::vector<Cost>& bump) -> Cost {
    const auto triplets = T.by_item(static_cast<ItemIndex>(u));
    if (triplets.empty()) return -1;
    Cost base = 0;
    for (std::int32_t ti : triplets) {
      const Triplet& t = T[ti];
      if (static_cast<ItemIndex>(u) == t.o) {
        // satisfied iff the close pair shares a label that u avoids
        if (f[t.i] == f[t.j])
          bump[f[t.i]] += 1;
        else
          base += 1;
      } else {
        const ItemIndex other = t.i == static_cast<ItemIndex>(u) ? t.j : t.i;
        base += 1;
        // satisfiable only by joining `other` away from the outlier
        if (f[other] != f[t.o]) bump[f[other]] -= 1;
      }
    }
    return base;
  };

  result.clustering = greedy_label_sweep(
      n, config.init_mode, config.sweep_order_seed, config.max_passes,
      evaluate_item, &result.passes, &result.converged);
  result.cost_on_input = triplet_cost(T, result.clustering);
  result.cost = result.cost_on_input;
  return result;
}

Clustering cc_local_search(const CCInstance& G,
                           std::optional<std::uint64_t> sweep_seed) {
  const std::size_t n = G.num_items();
  if (n == 0) return Clustering();

  struct Arc {
    ItemIndex to;
    Cost weight;
    EdgeSign sign;
  };
  std::vector<std::vector<Arc>> adjacency(n);
  for (const CCEdge& e : G.edges()) {
    adjacency[e.u].push_back({e.v, e.weight, e.sign});
    adjacency[e.v].push_back({e.u, e.weight, e.sign});
  }

  auto evaluate_item = [&adjacency](std::size_t u, const std::vector<int>& f,
                                    std::vector<Cost>& bump) -> Cost {
    if (adjacency[u].empty()) return -1;
    Cost base = 0;
    for (const Arc& arc : adjacency[u]) {
      if (arc.sign == EdgeSign::plus) {
        base += arc.weight;
        bump[f[arc.to]] -= arc.weight;
      } else {
        bump[f[arc.to]] += arc.weight;
      }
    }
    return base;
  };

  int passes = 0;
  bool converged = false;
  return greedy_label_sweep(n, InitMode::all_different, sweep_seed, 1000,
                            evaluate_item, &passes, &converged);
}

Variant parse_variant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "ls-eq") return Variant::ls_eq;
  if (lower == "ls-ad") return Variant::ls_ad;
  if (lower == "ls-eq-vc") return Variant::ls_eq_vc;
  if (lower == "ls-ad-vc") return Variant::ls_ad_vc;
  throw std::invalid_argument("unknown variant: " + std::string(name));
}

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::ls_eq:
      return "ls-eq";
    case Variant::ls_ad:
      return "ls-ad";
    case Variant::ls_eq_vc:
      return "ls-eq-vc";
    case Variant::ls_ad_vc:
      return "ls-ad-vc";
  }
  return "";
}

SolveResult run_variant(const TripletSet& T, Variant variant,
                        std::optional<std::uint64_t> sweep_seed) {
  SolverConfig config;
  config.init_mode =
      (variant == Variant::ls_eq || variant == Variant::ls_eq_vc)
          ? InitMode::all_equal
          : InitMode::all_different;
  config.vc_preprocess =
      variant == Variant::ls_eq_vc || variant == Variant::ls_ad_vc;
  config.sweep_order_seed = sweep_seed;
  if (!config.vc_preprocess) return local_search(T, config);

  ConsistentSplit split = make_consistent(T);
  SolveResult result = local_search(split.consistent, config);
  result.removed_triplets = static_cast<Cost>(split.removed.size());
  result.cost = triplet_cost(T, result.clustering);
  return result;
}

SolveResult approximation_pipeline(const TripletSet& T,
                                   const CCSolver& cc_solver) {
  ConsistentSplit split = make_consistent(T);
  const CCInstance instance = to_cc_instance(split.consistent);
  Clustering f = cleanup_labels(cc_solver(instance));
  if (f.size() != T.num_items())
    throw UniverseMismatchError(
        "cc solver returned a clustering over the wrong universe");
  SolveResult result;
  result.clustering = std::move(f);
  result.cost = triplet_cost(T, result.clustering);
  result.cost_on_input = triplet_cost(split.consistent, result.clustering);
  result.removed_triplets = static_cast<Cost>(split.removed.size());
  return result;
}

SolveResult brute_force_optimal(const TripletSet& T) {
  const std::size_t n = T.num_items();
  if (n > 12)
    throw SizeLimitError("brute_force_optimal enumerates at most 12 items, " +
                         std::to_string(n) + " given");
  SolveResult result;
  if (n == 0) return result;

  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);  // prefix_max[i] = max of rgs[0..i-1]
  std::vector<int> best_rgs;
  Cost best = -1;

  auto evaluate = [&]() {
    Cost cost = 0;
    for (const Triplet& t : T.triplets())
      if (!(rgs[t.i] == rgs[t.j] && rgs[t.j] != rgs[t.o])) ++cost;
    return cost;
  };
  auto advance = [&]() {
    for (std::size_t i = 1; i < n; ++i)
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i - 1]);
    for (std::size_t i = n; i-- > 1;) {
      if (rgs[i] <= prefix_max[i]) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        return true;
      }
    }
    return false;
  };

  do {
    const Cost cost = evaluate();
    if (best < 0 || cost < best) {
      best = cost;
      best_rgs = rgs;
      if (best == 0) break;
    }
  } while (advance());

  std::vector<int> labels(n);
  for (std::size_t u = 0; u < n; ++u) labels[u] = best_rgs[u] + 1;
  result.clustering = Clustering(std::move(labels));
  result.cost = best;
  result.cost_on_input = best;
  return result;
}

VertexCover brute_force_min_vc(const ConstraintGraph& C) {
  std::vector<std::int32_t> vertices = C.conflict_vertices();
  if (vertices.size() > 20)
    throw SizeLimitError(
        "brute_force_min_vc enumerates at most 20 conflict vertices, " +
        std::to_string(vertices.size()) + " given");

  std::unordered_map<std::int32_t, int> local;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  std::set<std::pair<int, int>> edge_set;
  for (const ConflictPair& p : C.conflict_pairs())
    for (std::int32_t s : p.same_side)
      for (std::int32_t d : p.diff_side)
        edge_set.insert(std::minmax(local[s], local[d]));
  const std::vector<std::pair<int, int>> edges(edge_set.begin(),
                                               edge_set.end());

  const std::size_t m = vertices.size();
  std::vector<char> chosen(m, 0);
  std::vector<char> best_chosen;
  std::size_t best_count = m + 1;

  // Branch on the first uncovered edge: any cover contains one endpoint.
  auto dfs = [&](auto&& self, std::size_t count) -> void {
    if (count >= best_count) return;
    for (const auto& [a, b] : edges) {
      if (chosen[a] || chosen[b]) continue;
      chosen[a] = 1;
      self(self, count + 1);
      chosen[a] = 0;
      chosen[b] = 1;
      self(self, count + 1);
      chosen[b] = 0;
      return;
    }
    best_chosen = chosen;
    best_count = count;
  };
  dfs(dfs, 0);

  VertexCover vc;
  for (std::size_t i = 0; i < m; ++i)
    if (best_chosen[i]) vc.covered.insert(vc.covered.end(), vertices[i]);
  return vc;
}

}  // namespace relcc
