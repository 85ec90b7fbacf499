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

// Topology diagnostics: hop-distance histograms on the directed graph,
// shortest-path edge betweenness and modularity communities on its
// undirected projection.

#ifndef RECOGRAPH_TOPOLOGY_HPP_
#define RECOGRAPH_TOPOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "recograph/graph.hpp"

namespace recograph {

struct AllSources {};
struct SampledSources {
  std::size_t size = 0;
  std::uint64_t seed = 0;
};
using SourceSelection = std::variant<AllSources, SampledSources>;

// Sorted source list. A sample draws `size` distinct nodes uniformly;
// throws InvalidParams when size > node_count.
std::vector<ItemId> select_sources(std::size_t node_count,
                                   const SourceSelection& selection);

struct PathLengthHistogram {
  // hop distance (>= 1) -> number of ordered (source, target) pairs
  std::map<std::uint32_t, std::uint64_t> counts;
  std::uint64_t unreachable_pairs = 0;
  std::size_t sources = 0;
  std::size_t node_count = 0;

  std::uint64_t reachable_pairs() const;
  // NaN when no pair is reachable.
  double mean_finite_distance() const;

  friend bool operator==(const PathLengthHistogram&,
                         const PathLengthHistogram&) = default;
};

// Directed, unweighted BFS from every selected source.
PathLengthHistogram path_length_distribution(
    const RecGraph& graph, const SourceSelection& sources = AllSources{},
    std::size_t threads = 0);

// `distance,count` rows, then `# unreachable=<u> sources=<s> nodes=<n>`.
void write_histogram_csv(const PathLengthHistogram& histogram,
                         std::ostream& out);

// One score per edge, indexed like graph.edges(). NaN marks a missing score.
struct EdgeScores {
  std::vector<double> values;
};

struct BetweennessOptions {
  // Accumulate from a uniform sample of sources only, scaled by
  // node_count / size.
  std::optional<SampledSources> sample;
  std::size_t threads = 0;
};

// Edge betweenness on the undirected, unweighted projection. For every
// ordered source s (both directions of each pair contribute), each shortest
// path s -> t adds 1 / sigma(s, t) to every edge on it. A directed edge gets
// the score of its undirected support, so (u, v) and (v, u) score alike.
// Results are bit-identical for any thread count.
EdgeScores edge_betweenness(const RecGraph& graph,
                            const BetweennessOptions& options = {});

// `src,dst,label,score`, sorted by score descending then (src, dst).
void write_scores_csv(const RecGraph& graph, const EdgeScores& scores,
                      std::ostream& out);
// Reads the format above, matching rows to edges of `graph` by (src, dst).
// Edges without a row get NaN; rows naming unknown edges throw ParseError.
EdgeScores read_scores_csv(const RecGraph& graph, std::istream& in);

struct Partition {
  // community[v] in [0, sizes.size()), numbered by first appearance in node
  // order.
  std::vector<std::uint32_t> community;
  std::vector<std::size_t> sizes;

  std::size_t community_count() const { return sizes.size(); }

  // Renumbers arbitrary labels canonically.
  static Partition from_labels(const std::vector<std::uint32_t>& labels);
};

// Louvain-style greedy modularity maximization on the undirected projection
// with w(u, v) = W(u, v) + W(v, u). Node visit order is shuffled with
// `seed`. Throws InvalidParams unless resolution > 0.
Partition detect_communities(const RecGraph& graph, double resolution = 1.0,
                             std::uint64_t seed = 0);

// Q = sum_c [ in_c / 2m - resolution * (tot_c / 2m)^2 ] on the same
// projection. 0 for an edgeless graph.
double modularity(const RecGraph& graph, const Partition& partition,
                  double resolution = 1.0);

// Communities holding at least fraction * node_count nodes. Throws
// InvalidParams unless 0 < fraction <= 1.
std::size_t large_community_count(const Partition& partition,
                                  const RecGraph& graph, double fraction);

}  // namespace recograph

#endif  // RECOGRAPH_TOPOLOGY_HPP_
