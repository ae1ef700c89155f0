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

#ifndef RELCC_IO_HPP
#define RELCC_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "relcc/core.hpp"
#include "relcc/evaluation.hpp"

namespace relcc {

// Triplet CSV: one `close1,close2,outlier` line per triplet, UTF-8 labels,
// no quoting. Clustering CSV: `item,cluster` with a positive integer cluster.
// Writers emit no header; readers skip one leading line when asked to.

struct TripletData {
  ItemUniverse universe;
  TripletSet triplets;
};

/// Throws ParseError (with the line number) on malformed lines or triplets
/// with non-distinct items.
TripletData read_triplet_csv(const std::filesystem::path& path,
                             bool skip_header = false);

void write_triplet_csv(const std::filesystem::path& path,
                       const ItemUniverse& universe,
                       const TripletSet& triplets);

struct ClusteringData {
  ItemUniverse universe;
  Clustering clustering;
};

ClusteringData read_clustering_csv(const std::filesystem::path& path,
                                   bool skip_header = false);

/// One row per item, in dense-index order, external labels preserved.
void write_clustering_csv(const std::filesystem::path& path,
                          const ItemUniverse& universe,
                          const Clustering& clustering);

struct CCData {
  ItemUniverse universe;
  CCInstance instance;
};

/// Signed edge CSV for the reduction input: `u,v,sign` with sign "+" or "-",
/// unit weights, one line per edge. A repeated pair is a ParseError.
CCData read_cc_csv(const std::filesystem::path& path,
                   bool skip_header = false);

/// Experiment rows with a header line:
/// k,a,b,seed,variant,ari,found_clusters,cost,removed,runtime_ms,error
void write_experiment_csv(const std::filesystem::path& path,
                          const std::vector<ExperimentRow>& rows);

}  // namespace relcc

#endif  // RELCC_IO_HPP
