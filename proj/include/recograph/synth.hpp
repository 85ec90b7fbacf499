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

// Synthetic recommendation graphs from two kNN recommenders.
//
// Every item carries an official feature vector p (dimension d) and a hidden
// vector b (dimension d_hidden), all coordinates uniform on [0, 1). The
// first `overlap` coordinates of b are copies of p, so overlap = 0 makes the
// two recommenders independent and overlap = d = d_hidden makes them
// identical.
//
// The official recommender links each item to its k_r nearest neighbors in
// p-space (Official edges). The hidden recommender links it to the k_b
// nearest neighbors in b-space that are not already Official targets of the
// item (Biased edges), so every item has exactly k_r + k_b distinct
// successors.

#ifndef RECOGRAPH_SYNTH_HPP_
#define RECOGRAPH_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "recograph/graph.hpp"
#include "recograph/io.hpp"

namespace recograph {

struct ModelParams {
  std::size_t n = 8753;
  std::size_t k_r = 17;
  std::size_t k_b = 2;
  std::size_t d = 5;
  std::size_t d_hidden = 5;
  std::size_t overlap = 0;
  std::uint64_t seed = 0;

  // Throws InvalidParams.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Keys: n, k_r, k_b, d, d_hidden, overlap, seed. Missing keys keep their
// defaults; unknown keys throw ParseError.
KeyValues to_key_values(const ModelParams& params);
ModelParams model_params_from(const KeyValues& values);

struct ItemFeatures {
  std::vector<double> p;
  std::vector<double> b;
};

// Row-major n x dim matrix of feature vectors.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<double> coords);
  static PointSet from_rows(std::span<const std::vector<double>> rows);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

// One record per item. Draws p then b for each item in turn from a single
// mt19937_64 stream, then overwrites b[0..overlap) with p[0..overlap).
std::vector<ItemFeatures> generate_features(const ModelParams& params);

PointSet official_points(std::span<const ItemFeatures> features);
PointSet hidden_points(std::span<const ItemFeatures> features);

// The k items other than `query` closest to it in Euclidean distance,
// nearest first, equal distances ordered by ascending id. Throws
// InvalidParams when k >= points.size() or query is out of range.
std::vector<ItemId> knn_neighbors(const PointSet& points, ItemId query,
                                  std::size_t k);

struct SyntheticInstance {
  ModelParams params;
  RecGraph graph;
  std::vector<ItemFeatures> features;
};

// `threads` = 0 picks default_thread_count(). Output does not depend on it.
SyntheticInstance build_biased_graph(const ModelParams& params,
                                     std::size_t threads = 0);

// CSV: header `id,p1..pd,b1..bd'`, then one row per item.
void write_features_csv(std::span<const ItemFeatures> features,
                        std::ostream& out);

}  // namespace recograph

#endif  // RECOGRAPH_SYNTH_HPP_
