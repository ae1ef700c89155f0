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

#include "relcc/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "relcc/synthgen.hpp"

namespace relcc {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

double adjusted_rand_index(const Clustering& f1, const Clustering& f2) {
  if (f1.size() != f2.size())
    throw UniverseMismatchError(
        "partitions over different universes: " + std::to_string(f1.size()) +
        " vs " + std::to_string(f2.size()));
  const std::size_t n = f1.size();
  if (n < 2) return 1.0;

  std::unordered_map<std::uint64_t, std::int64_t> cells;
  std::unordered_map<int, std::int64_t> rows, cols;
  for (std::size_t u = 0; u < n; ++u) {
    const auto key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f1.label(u)))
         << 32) |
        static_cast<std::uint32_t>(f2.label(u));
    ++cells[key];
    ++rows[f1.label(u)];
    ++cols[f2.label(u)];
  }
  std::int64_t sum_cells = 0, sum_rows = 0, sum_cols = 0;
  for (const auto& [_, c] : cells) sum_cells += choose2(c);
  for (const auto& [_, c] : rows) sum_rows += choose2(c);
  for (const auto& [_, c] : cols) sum_cols += choose2(c);
  const std::int64_t total = choose2(static_cast<std::int64_t>(n));

  // Degenerate contingency: both all-singletons or both one-cluster. The
  // partitions are then identical by construction.
  if ((sum_rows == 0 && sum_cols == 0) ||
      (sum_rows == total && sum_cols == total))
    return 1.0;

  const double expected = static_cast<double>(sum_rows) *
                          static_cast<double>(sum_cols) /
                          static_cast<double>(total);
  const double denominator =
      0.5 * static_cast<double>(sum_rows + sum_cols) - expected;
  if (denominator == 0.0)
    return cleanup_labels(f1) == cleanup_labels(f2) ? 1.0 : 0.0;
  return (static_cast<double>(sum_cells) - expected) / denominator;
}

int num_clusters(const Clustering& f) {
  std::unordered_set<int> labels(f.labels().begin(), f.labels().end());
  return static_cast<int>(labels.size());
}

std::uint64_t grid_cell_seed(std::uint64_t master_seed, int k, double a,
                             double b, int repeat) {
  std::uint64_t h = mix(master_seed ^ 0x243f6a8885a308d3ull);
  h = mix(h ^ static_cast<std::uint64_t>(k));
  h = mix(h ^ std::bit_cast<std::uint64_t>(a));
  h = mix(h ^ std::bit_cast<std::uint64_t>(b));
  h = mix(h ^ static_cast<std::uint64_t>(repeat));
  return h;
}

namespace {

struct GridTask {
  int k;
  double a;
  double b;
  int repeat;
  std::uint64_t seed;
};

std::vector<GridTask> grid_tasks(const GridConfig& config) {
  std::vector<GridTask> tasks;
  for (int k : config.ks) {
    for (double a : config.fractions) {
      for (double b : config.noises) {
        const bool deterministic = a == 1.0 && b == 0.0;
        const int repeats = deterministic ? 1 : config.repeats;
        for (int r = 0; r < repeats; ++r)
          tasks.push_back(
              {k, a, b, r, grid_cell_seed(config.master_seed, k, a, b, r)});
      }
    }
  }
  return tasks;
}

std::vector<ExperimentRow> run_task(const GridConfig& config,
                                    const GridTask& task,
                                    const std::vector<Variant>& variants) {
  std::vector<ExperimentRow> rows;
  rows.reserve(variants.size());
  ExperimentRow stub;
  stub.k = task.k;
  stub.a = task.a;
  stub.b = task.b;
  stub.seed = task.seed;
  try {
    GeneratorConfig generator;
    generator.num_items = config.num_items;
    generator.num_clusters = task.k;
    generator.sample_fraction = task.a;
    generator.noise_fraction = task.b;
    generator.seed = task.seed;
    const GeneratedInstance instance = generate_instance(generator);
    for (Variant variant : variants) {
      ExperimentRow row = stub;
      row.variant = variant;
      const auto start = std::chrono::steady_clock::now();
      const SolveResult solved = run_variant(instance.triplets, variant);
      row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      row.ari = adjusted_rand_index(solved.clustering, instance.truth);
      row.found_clusters = num_clusters(solved.clustering);
      row.cost = solved.cost;
      row.removed = solved.removed_triplets;
      rows.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    rows.clear();
    for (Variant variant : variants) {
      ExperimentRow row = stub;
      row.variant = variant;
      row.ok = false;
      row.error = e.what();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::size_t grid_run_count(const GridConfig& config) {
  return grid_tasks(config).size();
}

std::vector<ExperimentRow> run_experiment_grid(
    const GridConfig& config, const std::vector<Variant>& variants) {
  const std::vector<GridTask> tasks = grid_tasks(config);
  std::vector<std::vector<ExperimentRow>> per_task(tasks.size());

  unsigned workers = config.num_threads > 0
                         ? static_cast<unsigned>(config.num_threads)
                         : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(
                             workers, static_cast<unsigned>(tasks.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= tasks.size()) break;
      per_task[index] = run_task(config, tasks[index], variants);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<ExperimentRow> rows;
  rows.reserve(tasks.size() * variants.size());
  for (std::vector<ExperimentRow>& task_rows : per_task)
    for (ExperimentRow& row : task_rows) rows.push_back(std::move(row));
  std::sort(rows.begin(), rows.end(),
            [](const ExperimentRow& x, const ExperimentRow& y) {
              return std::tuple(x.k, x.a, x.b, x.seed,
                                static_cast<int>(x.variant)) <
                     std::tuple(y.k, y.a, y.b, y.seed,
                                static_cast<int>(y.variant));
            });
  return rows;
}

}  // namespace relcc
