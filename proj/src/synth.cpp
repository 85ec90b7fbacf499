// Copyright 2026 The recograph Authors
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

#include "recograph/synth.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "recograph/error.hpp"
#include "recograph/parallel.hpp"
#include "recograph/rng.hpp"

namespace recograph {
namespace {

struct Candidate {
  double dist2;
  ItemId id;
  bool operator<(const Candidate& o) const {
    return dist2 < o.dist2 || (dist2 == o.dist2 && id < o.id);
  }
};

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    double diff = a[c] - b[c];
    s += diff * diff;
  }
  return s;
}

}  // namespace

void ModelParams::validate() const {
  if (k_r < 1) throw InvalidParams("k_r must be >= 1");
  if (d < 1 || d_hidden < 1) {
    throw InvalidParams("feature dimensions d and d_hidden must be >= 1");
  }
  if (n <= k_r + k_b) {
    throw InvalidParams("n = " + std::to_string(n) +
                        " must exceed k_r + k_b = " + std::to_string(k_r + k_b));
  }
  if (n >= std::numeric_limits<ItemId>::max()) {
    throw InvalidParams("n exceeds the item id range");
  }
  if (overlap > std::min(d, d_hidden)) {
    throw InvalidParams("overlap = " + std::to_string(overlap) +
                        " exceeds min(d, d_hidden) = " +
                        std::to_string(std::min(d, d_hidden)));
  }
}

KeyValues to_key_values(const ModelParams& params) {
  return {
      {"n", std::to_string(params.n)},
      {"k_r", std::to_string(params.k_r)},
      {"k_b", std::to_string(params.k_b)},
      {"d", std::to_string(params.d)},
      {"d_hidden", std::to_string(params.d_hidden)},
      {"overlap", std::to_string(params.overlap)},
      {"seed", std::to_string(params.seed)},
  };
}

ModelParams model_params_from(const KeyValues& values) {
  ModelParams p;
  for (const auto& [key, value] : values) {
    std::uint64_t v = parse_uint(value);
    if (key == "n") {
      p.n = v;
    } else if (key == "k_r") {
      p.k_r = v;
    } else if (key == "k_b") {
      p.k_b = v;
    } else if (key == "d") {
      p.d = v;
    } else if (key == "d_hidden") {
      p.d_hidden = v;
    } else if (key == "overlap") {
      p.overlap = v;
    } else if (key == "seed") {
      p.seed = v;
    } else {
      throw ParseError("unknown model parameter '" + key + "'");
    }
  }
  return p;
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0 || coords_.size() % dim_ != 0) {
    throw InvalidParams("point coordinates do not form whole rows");
  }
}

PointSet PointSet::from_rows(std::span<const std::vector<double>> rows) {
  if (rows.empty()) throw InvalidParams("empty point set");
  std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw InvalidParams("ragged point set");
    coords.insert(coords.end(), r.begin(), r.end());
  }
  return PointSet(dim, std::move(coords));
}

std::vector<ItemFeatures> generate_features(const ModelParams& params) {
  params.validate();
  Rng rng(params.seed);
  std::vector<ItemFeatures> out(params.n);
  for (ItemFeatures& f : out) {
    f.p.resize(params.d);
    f.b.resize(params.d_hidden);
    for (double& x : f.p) x = rng.uniform01();
    for (double& x : f.b) x = rng.uniform01();
    std::copy_n(f.p.begin(), params.overlap, f.b.begin());
  }
  return out;
}

PointSet official_points(std::span<const ItemFeatures> features) {
  if (features.empty()) throw InvalidParams("no features");
  std::vector<double> coords;
  for (const auto& f : features) coords.insert(coords.end(), f.p.begin(), f.p.end());
  return PointSet(features.front().p.size(), std::move(coords));
}

PointSet hidden_points(std::span<const ItemFeatures> features) {
  if (features.empty()) throw InvalidParams("no features");
  std::vector<double> coords;
  for (const auto& f : features) coords.insert(coords.end(), f.b.begin(), f.b.end());
  return PointSet(features.front().b.size(), std::move(coords));
}

std::vector<ItemId> knn_neighbors(const PointSet& points, ItemId query,
                                  std::size_t k) {
  const std::size_t n = points.size();
  if (query >= n) throw InvalidParams("knn query out of range");
  if (k >= n) {
    throw InvalidParams("k = " + std::to_string(k) + " must be below n = " +
                        std::to_string(n));
  }
  std::vector<Candidate> cand;
  cand.reserve(n - 1);
  auto q = points.row(query);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == query) continue;
    cand.push_back({squared_distance(q, points.row(j)), static_cast<ItemId>(j)});
  }
  auto kth = cand.begin() + static_cast<std::ptrdiff_t>(k);
  std::nth_element(cand.begin(), kth, cand.end());
  std::sort(cand.begin(), kth);
  std::vector<ItemId> out;
  out.reserve(k);
  for (auto it = cand.begin(); it != kth; ++it) out.push_back(it->id);
  return out;
}

SyntheticInstance build_biased_graph(const ModelParams& params,
                                     std::size_t threads) {
  params.validate();
  SyntheticInstance inst{params, RecGraph(params.n), generate_features(params)};
  const PointSet p = official_points(inst.features);
  const PointSet b = hidden_points(inst.features);

  // Row i holds k_r official then k_b biased destinations.
  const std::size_t k = params.k_r + params.k_b;
  std::vector<ItemId> targets(params.n * k);
  parallel_for(params.n, threads, [&](std::size_t i) {
    const auto item = static_cast<ItemId>(i);
    auto official = knn_neighbors(p, item, params.k_r);
    ItemId* row = targets.data() + i * k;
    std::copy(official.begin(), official.end(), row);
    if (params.k_b == 0) return;
    // At most k_r hidden neighbors can collide with official ones.
    auto hidden = knn_neighbors(b, item, k);
    std::size_t placed = 0;
    for (ItemId j : hidden) {
      if (placed == params.k_b) break;
      if (std::find(official.begin(), official.end(), j) != official.end()) {
        continue;
      }
      row[params.k_r + placed++] = j;
    }
  });

  GraphBuilder builder(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      builder.add_edge(static_cast<ItemId>(i), targets[i * k + s],
                       s < params.k_r ? EdgeLabel::kOfficial
                                      : EdgeLabel::kBiased);
    }
  }
  builder.set_metadata("source", "synth-dual-knn");
  for (const auto& [key, value] : to_key_values(params)) {
    builder.set_metadata("model." + key, value);
  }
  inst.graph = builder.freeze();
  return inst;
}

void write_features_csv(std::span<const ItemFeatures> features,
                        std::ostream& out) {
  if (features.empty()) return;
  out << "id";
  for (std::size_t c = 1; c <= features.front().p.size(); ++c) out << ",p" << c;
  for (std::size_t c = 1; c <= features.front().b.size(); ++c) out << ",b" << c;
  out << '\n';
  for (std::size_t i = 0; i < features.size(); ++i) {
    out << i;
    for (double x : features[i].p) out << ',' << format_double(x);
    for (double x : features[i].b) out << ',' << format_double(x);
    out << '\n';
  }
}

}  // namespace recograph
