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

// Evaluation of bias tagging: rank edges by a score, then measure how early
// the Biased edges show up. Positives are Biased edges; Official and
// Unknown edges are negatives.

#ifndef RECOGRAPH_DETECT_HPP_
#define RECOGRAPH_DETECT_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "recograph/graph.hpp"
#include "recograph/topology.hpp"

namespace recograph {

struct RankedEdge {
  std::uint32_t edge = 0;  // index into graph.edges()
  ItemId src = 0;
  ItemId dst = 0;
  EdgeLabel label = EdgeLabel::kUnknown;
  double score = 0;

  bool positive() const { return label == EdgeLabel::kBiased; }
};

struct EdgeRanking {
  // Descending score; equal scores ordered by (src, dst).
  std::vector<RankedEdge> entries;

  std::size_t positives() const;
  std::size_t negatives() const { return entries.size() - positives(); }
};

// Throws IncompleteScores if `scores` does not hold one finite value per
// edge.
EdgeRanking rank_edges(const RecGraph& graph, const EdgeScores& scores);

// Seeded uniform permutation of the edges, expressed as distinct scores.
EdgeRanking random_baseline(const RecGraph& graph, std::uint64_t seed);

struct RocPoint {
  double fpr = 0;
  double tpr = 0;

  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

struct RocCurve {
  // From (0, 0) to (1, 1), both coordinates non-decreasing.
  std::vector<RocPoint> points;
  double auc = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

double trapezoid_auc(std::span<const RocPoint> points);

// Threshold sweep down the ranking with one point per distinct score, so
// the order inside a tie cannot change the curve. Throws DegenerateTruth
// without both positives and negatives.
RocCurve roc(const EdgeRanking& ranking);

// Best achievable curve for the given class sizes: every positive first.
RocCurve perfect_curve(std::size_t positives, std::size_t negatives);

// Pointwise mean of the curves' tpr over `grid_points` evenly spaced fpr
// values in [0, 1], each curve linearly interpolated (at a vertical step the
// upper value is used). positives/negatives are summed.
RocCurve average_roc(std::span<const RocCurve> curves,
                     std::size_t grid_points = 101);

// Share of all positives inside the top floor(x * |E|) entries, x in (0, 1].
// Throws DegenerateTruth like roc().
double recall_at_fraction(const EdgeRanking& ranking, double x);

// Copies edge labels from `truth` onto `graph`. Edges are matched by node
// names when both graphs are named, by ids otherwise; edges absent from
// `truth` keep their label.
RecGraph apply_truth(const RecGraph& graph, const RecGraph& truth);

// `fpr,tpr` rows, then `# auc=<a> positives=<p> negatives=<n>`.
void write_roc_csv(const RocCurve& curve, std::ostream& out);
// Single line `x,recall`.
void write_recall_csv(double x, double recall, std::ostream& out);

}  // namespace recograph

#endif  // RECOGRAPH_DETECT_HPP_
