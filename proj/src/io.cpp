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

#include "relcc/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>

#include "relcc/solvers.hpp"

namespace relcc {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Calls on_fields(fields, line_number) for every non-empty line.
template <typename OnFields>
void for_each_csv_line(const std::filesystem::path& path, bool skip_header,
                       std::size_t expected_fields, OnFields&& on_fields) {
  std::ifstream in = open_input(path);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_header && line_number == 1) continue;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != expected_fields)
      throw ParseError("expected " + std::to_string(expected_fields) +
                           " fields, got " + std::to_string(fields.size()),
                       line_number);
    for (const std::string& f : fields)
      if (f.empty()) throw ParseError("empty field", line_number);
    on_fields(fields, line_number);
  }
}

int parse_positive_int(const std::string& text, std::size_t line_number) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw ParseError("cluster must be a positive integer, got '" + text + "'",
                     line_number);
  return value;
}

}  // namespace

TripletData read_triplet_csv(const std::filesystem::path& path,
                             bool skip_header) {
  TripletData data;
  std::vector<Triplet> triplets;
  for_each_csv_line(
      path, skip_header, 3,
      [&](const std::vector<std::string>& fields, std::size_t line_number) {
        const ItemIndex a = data.universe.intern(fields[0]);
        const ItemIndex b = data.universe.intern(fields[1]);
        const ItemIndex o = data.universe.intern(fields[2]);
        if (a == b || a == o || b == o)
          throw ParseError("triplet items must be pairwise distinct",
                           line_number);
        triplets.push_back(Triplet::make(a, b, o));
      });
  data.triplets = TripletSet(data.universe.size(), std::move(triplets));
  return data;
}

void write_triplet_csv(const std::filesystem::path& path,
                       const ItemUniverse& universe,
                       const TripletSet& triplets) {
  std::ofstream out = open_output(path);
  for (const Triplet& t : triplets.triplets())
    out << universe.label(t.i) << ',' << universe.label(t.j) << ','
        << universe.label(t.o) << '\n';
}

ClusteringData read_clustering_csv(const std::filesystem::path& path,
                                   bool skip_header) {
  ClusteringData data;
  std::vector<int> labels;
  for_each_csv_line(
      path, skip_header, 2,
      [&](const std::vector<std::string>& fields, std::size_t line_number) {
        if (data.universe.find(fields[0]))
          throw ParseError("duplicate item '" + fields[0] + "'", line_number);
        data.universe.intern(fields[0]);
        labels.push_back(parse_positive_int(fields[1], line_number));
      });
  data.clustering = Clustering(std::move(labels));
  return data;
}

void write_clustering_csv(const std::filesystem::path& path,
                          const ItemUniverse& universe,
                          const Clustering& clustering) {
  if (universe.size() != clustering.size())
    throw UniverseMismatchError("clustering of " +
                                std::to_string(clustering.size()) +
                                " items written against universe of " +
                                std::to_string(universe.size()));
  std::ofstream out = open_output(path);
  for (std::size_t u = 0; u < clustering.size(); ++u)
    out << universe.label(static_cast<ItemIndex>(u)) << ','
        << clustering.label(u) << '\n';
}

CCData read_cc_csv(const std::filesystem::path& path, bool skip_header) {
  ItemUniverse universe;
  struct Edge {
    ItemIndex u, v;
    EdgeSign sign;
    std::size_t line;
  };
  std::vector<Edge> edges;
  for_each_csv_line(
      path, skip_header, 3,
      [&](const std::vector<std::string>& fields, std::size_t line_number) {
        const ItemIndex u = universe.intern(fields[0]);
        const ItemIndex v = universe.intern(fields[1]);
        if (u == v) throw ParseError("edge endpoints must differ", line_number);
        EdgeSign sign;
        if (fields[2] == "+")
          sign = EdgeSign::plus;
        else if (fields[2] == "-")
          sign = EdgeSign::minus;
        else
          throw ParseError("sign must be '+' or '-', got '" + fields[2] + "'",
                           line_number);
        edges.push_back({u, v, sign, line_number});
      });
  CCData data;
  data.instance = CCInstance(universe.size());
  for (const Edge& e : edges) {
    if (data.instance.find_edge(e.u, e.v))
      throw ParseError("repeated pair '" + universe.label(e.u) + "," +
                           universe.label(e.v) + "'",
                       e.line);
    data.instance.add_edge(e.u, e.v, e.sign);
  }
  data.universe = std::move(universe);
  return data;
}

void write_experiment_csv(const std::filesystem::path& path,
                          const std::vector<ExperimentRow>& rows) {
  std::ofstream out = open_output(path);
  out << "k,a,b,seed,variant,ari,found_clusters,cost,removed,runtime_ms,"
         "error\n";
  out << std::setprecision(10);
  for (const ExperimentRow& row : rows) {
    out << row.k << ',' << row.a << ',' << row.b << ',' << row.seed << ','
        << variant_name(row.variant) << ',' << row.ari << ','
        << row.found_clusters << ',' << row.cost << ',' << row.removed << ','
        << row.runtime_ms << ',' << row.error << '\n';
  }
}

}  // namespace relcc
