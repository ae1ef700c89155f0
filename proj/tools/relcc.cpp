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

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relcc/consistency.hpp"
#include "relcc/core.hpp"
#include "relcc/evaluation.hpp"
#include "relcc/io.hpp"
#include "relcc/solvers.hpp"
#include "relcc/synthgen.hpp"

namespace {

using nlohmann::json;
using namespace relcc;

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

struct ClusterOptions {
  std::string input;
  std::string output;
  std::string variant = "ls-ad-vc";
  std::uint64_t seed = 0;
  bool header = false;
  bool shuffle_sweep = false;
};

int cmd_cluster(const ClusterOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const TripletData data = read_triplet_csv(opt.input, opt.header);
  const Variant variant = parse_variant(opt.variant);
  const std::optional<std::uint64_t> sweep_seed =
      opt.shuffle_sweep ? std::optional(opt.seed) : std::nullopt;
  const SolveResult result = run_variant(data.triplets, variant, sweep_seed);
  write_clustering_csv(opt.output, data.universe, result.clustering);
  emit(json{{"n_items", data.universe.size()},
            {"n_triplets", data.triplets.size()},
            {"n_removed", result.removed_triplets},
            {"n_clusters", num_clusters(result.clustering)},
            {"cost", result.cost},
            {"variant", variant_name(variant)},
            {"seed", opt.seed},
            {"converged", result.converged},
            {"passes", result.passes},
            {"runtime_ms", elapsed_ms(start)}});
  return 0;
}

struct GenOptions {
  std::size_t items = 0;
  int clusters = 0;
  double frac = 1.0;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string truth;
};

int cmd_gen(const GenOptions& opt) {
  GeneratorConfig config;
  config.num_items = opt.items;
  config.num_clusters = opt.clusters;
  config.sample_fraction = opt.frac;
  config.noise_fraction = opt.noise;
  config.seed = opt.seed;
  const GeneratedInstance instance = generate_instance(config);

  const ItemUniverse universe(opt.items);
  write_triplet_csv(opt.out, universe, instance.triplets);
  write_clustering_csv(opt.truth, universe, instance.truth);

  const json report{{"items", opt.items},
                    {"clusters", opt.clusters},
                    {"frac", opt.frac},
                    {"noise", opt.noise},
                    {"seed", opt.seed},
                    {"n_enumerated", instance.num_enumerated},
                    {"n_triplets", instance.triplets.size()},
                    {"out", opt.out},
                    {"truth", opt.truth}};
  std::ofstream sidecar(opt.out + ".json");
  if (!sidecar) throw std::runtime_error("cannot write " + opt.out + ".json");
  sidecar << report.dump(2) << "\n";
  emit(report);
  return 0;
}

struct EvalOptions {
  std::string pred;
  std::string truth;
  bool header = false;
};

int cmd_eval(const EvalOptions& opt) {
  const ClusteringData pred = read_clustering_csv(opt.pred, opt.header);
  const ClusteringData truth = read_clustering_csv(opt.truth, opt.header);
  if (pred.universe.size() != truth.universe.size())
    throw UniverseMismatchError(
        "prediction covers " + std::to_string(pred.universe.size()) +
        " items, truth covers " + std::to_string(truth.universe.size()));
  std::vector<int> aligned(truth.universe.size());
  for (std::size_t u = 0; u < truth.universe.size(); ++u) {
    const std::string& label = truth.universe.label(static_cast<ItemIndex>(u));
    const auto index = pred.universe.find(label);
    if (!index)
      throw UniverseMismatchError("item '" + label +
                                  "' missing from prediction");
    aligned[u] = pred.clustering.label(static_cast<std::size_t>(*index));
  }
  const Clustering prediction(std::move(aligned));
  emit(json{{"ari", adjusted_rand_index(prediction, truth.clustering)},
            {"n_items", truth.universe.size()},
            {"pred_clusters", num_clusters(prediction)},
            {"truth_clusters", num_clusters(truth.clustering)}});
  return 0;
}

struct CheckOptions {
  std::string input;
  bool header = false;
};

int cmd_check(const CheckOptions& opt) {
  const TripletData data = read_triplet_csv(opt.input, opt.header);
  const ConstraintGraph graph = build_constraint_graph(data.triplets);
  const VertexCover cover = approx_vertex_cover(graph);
  const VertexCover pruned = prune_redundant(graph, cover);
  emit(json{{"n_items", data.universe.size()},
            {"n_triplets", data.triplets.size()},
            {"conflicting_pairs", graph.conflict_pairs().size()},
            {"implicit_edges", graph.num_implicit_edges()},
            {"cover_size", cover.size()},
            {"pruned_cover_size", pruned.size()},
            {"n_triplets_consistent", data.triplets.size() - pruned.size()}});
  return 0;
}

struct ReduceOptions {
  std::string input;
  std::string out;
  bool header = false;
};

int cmd_reduce(const ReduceOptions& opt) {
  const CCData data = read_cc_csv(opt.input, opt.header);
  const ReducedTriplets reduced = reduce_cc_to_triplets(data.instance);

  ItemUniverse universe = data.universe;
  std::size_t n_plus = 0, n_minus = 0;
  for (const CCEdge& edge : reduced.dummy_sources) {
    const std::string u = universe.label(edge.u);
    const std::string v = universe.label(edge.v);
    if (edge.sign == EdgeSign::plus) {
      ++n_plus;
      universe.intern_unique("xp_" + u + "_" + v);
    } else {
      ++n_minus;
      universe.intern_unique("xm_" + u + "_" + v);
    }
  }
  write_triplet_csv(opt.out, universe, reduced.triplets);
  emit(json{{"n_real_items", reduced.num_real_items},
            {"n_dummy_items", reduced.dummy_sources.size()},
            {"n_plus", n_plus},
            {"n_minus", n_minus},
            {"n_triplets", reduced.triplets.size()},
            {"out", opt.out}});
  return 0;
}

struct ExperimentOptions {
  std::size_t items = 160;
  std::vector<int> ks = {2, 4, 8, 16};
  std::vector<double> fracs = {0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0};
  std::vector<double> noises = {0.0, 0.1, 0.2};
  int repeats = 10;
  std::uint64_t seed = 0;
  std::vector<std::string> variants = {"ls-ad-vc"};
  int threads = 0;
  std::string out;
  std::string summary;
};

// Per-cell means over the successful runs; runtime is a measurement, not a
// result, so it stays out of the summary.
json summarise(const std::vector<ExperimentRow>& rows) {
  struct Key {
    int k;
    double a, b;
    Variant variant;
    bool operator==(const Key&) const = default;
  };
  std::vector<Key> keys;
  for (const ExperimentRow& row : rows) {
    const Key key{row.k, row.a, row.b, row.variant};
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
    return std::tuple(x.k, x.a, x.b, static_cast<int>(x.variant)) <
           std::tuple(y.k, y.a, y.b, static_cast<int>(y.variant));
  });

  json cells = json::array();
  for (const Key& key : keys) {
    double ari = 0, clusters = 0, cost = 0, removed = 0;
    std::size_t runs = 0, errors = 0;
    for (const ExperimentRow& row : rows) {
      if (!(Key{row.k, row.a, row.b, row.variant} == key)) continue;
      if (!row.ok) {
        ++errors;
        continue;
      }
      ++runs;
      ari += row.ari;
      clusters += row.found_clusters;
      cost += static_cast<double>(row.cost);
      removed += static_cast<double>(row.removed);
    }
    json cell{{"k", key.k},
              {"a", key.a},
              {"b", key.b},
              {"variant", variant_name(key.variant)},
              {"runs", runs},
              {"errors", errors}};
    if (runs > 0) {
      cell["mean_ari"] = ari / static_cast<double>(runs);
      cell["mean_clusters"] = clusters / static_cast<double>(runs);
      cell["mean_cost"] = cost / static_cast<double>(runs);
      cell["mean_removed"] = removed / static_cast<double>(runs);
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

int cmd_experiment(const ExperimentOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  GridConfig config;
  config.num_items = opt.items;
  config.ks = opt.ks;
  config.fractions = opt.fracs;
  config.noises = opt.noises;
  config.repeats = opt.repeats;
  config.master_seed = opt.seed;
  config.num_threads = opt.threads;
  std::vector<Variant> variants;
  for (const std::string& name : opt.variants)
    variants.push_back(parse_variant(name));

  const std::vector<ExperimentRow> rows =
      run_experiment_grid(config, variants);
  write_experiment_csv(opt.out, rows);
  if (!opt.summary.empty()) {
    std::ofstream file(opt.summary);
    if (!file) throw std::runtime_error("cannot write " + opt.summary);
    file << summarise(rows).dump(2) << "\n";
  }
  emit(json{{"cells", opt.ks.size() * opt.fracs.size() * opt.noises.size()},
            {"runs", grid_run_count(config)},
            {"rows", rows.size()},
            {"out", opt.out},
            {"summary", opt.summary},
            {"elapsed_ms", elapsed_ms(start)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustering from relative distance comparisons"};
  app.require_subcommand(1);

  ClusterOptions cluster_opt;
  CLI::App* cluster =
      app.add_subcommand("cluster", "Cluster the items of a triplet CSV");
  cluster->add_option("--input", cluster_opt.input, "Triplet CSV")
      ->required()
      ->check(CLI::ExistingFile);
  cluster->add_flag("--header", cluster_opt.header,
                    "Skip the first line of the input");
  cluster->add_option("--variant", cluster_opt.variant,
                      "ls-eq | ls-ad | ls-eq-vc | ls-ad-vc");
  cluster->add_option("--seed", cluster_opt.seed, "Seed (default 0)");
  cluster->add_flag("--shuffle-sweep", cluster_opt.shuffle_sweep,
                    "Shuffle the item sweep order per pass using --seed");
  cluster
      ->add_option("--output", cluster_opt.output, "Clustering CSV to write")
      ->required();

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand(
      "gen", "Generate synthetic triplets from a balanced ground truth");
  gen->add_option("--items", gen_opt.items, "Number of items")->required();
  gen->add_option("--clusters", gen_opt.clusters, "Ground truth cluster count")
      ->required();
  gen->add_option("--frac", gen_opt.frac,
                  "Fraction of all valid triplets to sample, in (0,1]");
  gen->add_option("--noise", gen_opt.noise,
                  "Fraction of sampled triplets to corrupt, in [0,1)");
  gen->add_option("--seed", gen_opt.seed, "Seed (default 0)");
  gen->add_option("--out", gen_opt.out, "Triplet CSV to write")->required();
  gen->add_option("--truth", gen_opt.truth, "Ground truth clustering CSV")
      ->required();

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand(
      "eval", "Adjusted Rand index of a clustering against a reference");
  eval->add_option("--pred", eval_opt.pred, "Predicted clustering CSV")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--truth", eval_opt.truth, "Reference clustering CSV")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_flag("--header", eval_opt.header, "Skip first line of both files");

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand(
      "check", "Report the conflict structure of a triplet CSV");
  check->add_option("--input", check_opt.input, "Triplet CSV")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_flag("--header", check_opt.header,
                  "Skip the first line of the input");

  ReduceOptions reduce_opt;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Encode a signed edge CSV (u,v,+/-) as triplets");
  reduce->add_option("--input", reduce_opt.input, "Signed edge CSV")
      ->required()
      ->check(CLI::ExistingFile);
  reduce->add_flag("--header", reduce_opt.header,
                   "Skip the first line of the input");
  reduce->add_option("--out", reduce_opt.out, "Triplet CSV to write")
      ->required();

  ExperimentOptions exp_opt;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Run the synthetic grid and write per-run rows");
  experiment->add_option("--items", exp_opt.items, "Items per instance");
  experiment->add_option("--ks", exp_opt.ks, "Cluster counts")->delimiter(',');
  experiment->add_option("--fracs", exp_opt.fracs, "Sampling fractions")
      ->delimiter(',');
  experiment->add_option("--noises", exp_opt.noises, "Noise fractions")
      ->delimiter(',');
  experiment->add_option("--repeats", exp_opt.repeats,
                         "Repeats per nondeterministic cell");
  experiment->add_option("--seed", exp_opt.seed, "Master seed (default 0)");
  experiment->add_option("--variants", exp_opt.variants, "Variants to run")
      ->delimiter(',');
  experiment->add_option("--threads", exp_opt.threads,
                         "Worker threads (0 = hardware)");
  experiment->add_option("--out", exp_opt.out, "Results CSV to write")
      ->required();
  experiment->add_option("--summary", exp_opt.summary,
                         "Per-cell mean JSON to write");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cluster->parsed()) return cmd_cluster(cluster_opt);
    if (gen->parsed()) return cmd_gen(gen_opt);
    if (eval->parsed()) return cmd_eval(eval_opt);
    if (check->parsed()) return cmd_check(check_opt);
    if (reduce->parsed()) return cmd_reduce(reduce_opt);
    if (experiment->parsed()) return cmd_experiment(exp_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
