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

#include "recograph/detect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

#include "recograph/error.hpp"
#include "recograph/io.hpp"
#include "recograph/rng.hpp"

namespace recograph {
namespace {

void require_both_classes(std::size_t positives, std::size_t negatives) {
  if (positives == 0 || negatives == 0) {
    throw DegenerateTruth("evaluation needs biased and non-biased edges (got " +
                          std::to_string(positives) + " positives, " +
                          std::to_string(negatives) + " negatives)");
  }
}

bool ranks_before(const RankedEdge& a, const RankedEdge& b) {
  if (a.score != b.score) return a.score > b.score;
  return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
}

double tpr_at(std::span<const RocPoint> pts, double fpr) {
  // First point strictly to the right of fpr.
  auto right = std::upper_bound(
      pts.begin(), pts.end(), fpr,
      [](double x, const RocPoint& p) { return x < p.fpr; });
  if (right == pts.begin()) return pts.front().tpr;
  auto left = std::prev(right);
  if (left->fpr == fpr || right == pts.end()) return left->tpr;
  const double t = (fpr - left->fpr) / (right->fpr - left->fpr);
  return left->tpr + t * (right->tpr - left->tpr);
}

}  // namespace

std::size_t EdgeRanking::positives() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                     [](const RankedEdge& e) { return e.positive(); }));
}

EdgeRanking rank_edges(const RecGraph& graph, const EdgeScores& scores) {
  if (scores.values.size() != graph.edge_count()) {
    throw IncompleteScores("got " + std::to_string(scores.values.size()) +
                           " scores for " + std::to_string(graph.edge_count()) +
                           " edges");
  }
  EdgeRanking ranking;
  ranking.entries.reserve(graph.edge_count());
  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    if (!std::isfinite(scores.values[i])) {
      throw IncompleteScores("no usable score for edge (" +
                             std::to_string(e.src) + ", " +
                             std::to_string(e.dst) + ")");
    }
    ranking.entries.push_back({i, e.src, e.dst, e.label, scores.values[i]});
  }
  std::sort(ranking.entries.begin(), ranking.entries.end(), ranks_before);
  return ranking;
}

EdgeRanking random_baseline(const RecGraph& graph, std::uint64_t seed) {
  std::vector<std::uint32_t> perm(graph.edge_count());
  std::iota(perm.begin(), perm.end(), 0u);
  Rng rng(seed);
  rng.shuffle(std::span(perm));
  EdgeScores scores;
  scores.values.resize(graph.edge_count());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) {
    scores.values[perm[pos]] = static_cast<double>(perm.size() - pos);
  }
  return rank_edges(graph, scores);
}

double trapezoid_auc(std::span<const RocPoint> points) {
  double area = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    area += (points[i].fpr - points[i - 1].fpr) *
            (points[i].tpr + points[i - 1].tpr) / 2.0;
  }
  return area;
}

RocCurve roc(const EdgeRanking& ranking) {
  RocCurve curve;
  curve.positives = ranking.positives();
  curve.negatives = ranking.negatives();
  require_both_classes(curve.positives, curve.negatives);

  const auto& entries = ranking.entries;
  const double p = static_cast<double>(curve.positives);
  const double q = static_cast<double>(curve.negatives);
  curve.points.push_back({0.0, 0.0});
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    for (; j < entries.size() && entries[j].score == entries[i].score; ++j) {
      entries[j].positive() ? ++tp : ++fp;
    }
    curve.points.push_back({static_cast<double>(fp) / q,
                            static_cast<double>(tp) / p});
    i = j;
  }
  curve.auc = trapezoid_auc(curve.points);
  return curve;
}

RocCurve perfect_curve(std::size_t positives, std::size_t negatives) {
  require_both_classes(positives, negatives);
  RocCurve curve;
  curve.positives = positives;
  curve.negatives = negatives;
  curve.points = {{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  curve.auc = 1.0;
  return curve;
}

RocCurve average_roc(std::span<const RocCurve> curves,
                     std::size_t grid_points) {
  if (curves.empty()) throw InvalidParams("no curves to average");
  if (grid_points < 2) throw InvalidParams("need at least 2 grid points");
  RocCurve avg;
  avg.points.resize(grid_points);
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double fpr =
        static_cast<double>(g) / static_cast<double>(grid_points - 1);
    double sum = 0;
    for (const RocCurve& c : curves) sum += tpr_at(c.points, fpr);
    avg.points[g] = {fpr, sum / static_cast<double>(curves.size())};
  }
  // Keep the curve anchored at the origin.
  avg.points.insert(avg.points.begin(), RocPoint{0.0, 0.0});
  for (const RocCurve& c : curves) {
    avg.positives += c.positives;
    avg.negatives += c.negatives;
  }
  avg.auc = trapezoid_auc(avg.points);
  return avg;
}

double recall_at_fraction(const EdgeRanking& ranking, double x) {
  if (!(x > 0 && x <= 1)) throw InvalidParams("x must lie in (0, 1]");
  const std::size_t positives = ranking.positives();
  require_both_classes(positives, ranking.entries.size() - positives);
  // The epsilon keeps x = k / |E| from rounding down to k - 1.
  const double raw = x * static_cast<double>(ranking.entries.size());
  const auto top = std::min(ranking.entries.size(),
                            static_cast<std::size_t>(std::floor(raw + 1e-9)));
  std::size_t found = 0;
  for (std::size_t i = 0; i < top; ++i) {
    if (ranking.entries[i].positive()) ++found;
  }
  return static_cast<double>(found) / static_cast<double>(positives);
}

RecGraph apply_truth(const RecGraph& graph, const RecGraph& truth) {
  const bool by_name = graph.has_names() && truth.has_names();
  auto lookup = [&](ItemId id) -> std::optional<ItemId> {
    if (!by_name) {
      if (truth.contains(id)) return id;
      return std::nullopt;
    }
    return truth.find_name(graph.name(id));
  };
  GraphBuilder b(graph.node_count());
  for (ItemId i = 0; i < graph.node_count(); ++i) {
    if (!graph.name(i).empty()) b.set_name(i, std::string(graph.name(i)));
  }
  for (const auto& [k, v] : graph.metadata()) b.set_metadata(k, v);
  for (const Edge& e : graph.edges()) {
    EdgeLabel label = e.label;
    auto src = lookup(e.src);
    auto dst = lookup(e.dst);
    if (src && dst) {
      if (auto idx = truth.find_edge(*src, *dst)) label = truth.edge(*idx).label;
    }
    b.add_edge(e.src, e.dst, label, e.weight);
  }
  return b.freeze();
}

void write_roc_csv(const RocCurve& curve, std::ostream& out) {
  out << "fpr,tpr\n";
  for (const RocPoint& p : curve.points) {
    out << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
  }
  out << "# auc=" << format_double(curve.auc)
      << " positives=" << curve.positives << " negatives=" << curve.negatives
      << '\n';
}

void write_recall_csv(double x, double recall, std::ostream& out) {
  out << format_double(x) << ',' << format_double(recall) << '\n';
}

}  // namespace recograph
