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

#include "recograph/topology.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "recograph/error.hpp"
#include "recograph/synth.hpp"

namespace recograph {
namespace {

RecGraph from_undirected(std::size_t n, const std::set<oracle::UEdge>& edges,
                         std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (auto [a, c] : edges) {
    // Random orientation; the projection must not care.
    if (rng() & 1) {
      b.add_edge(a, c, EdgeLabel::kOfficial);
    } else {
      b.add_edge(c, a, EdgeLabel::kOfficial);
    }
  }
  return b.freeze();
}

RecGraph clique_pair(std::size_t size, bool bridge) {
  GraphBuilder b(2 * size);
  for (std::size_t half = 0; half < 2; ++half) {
    ItemId base = static_cast<ItemId>(half * size);
    for (ItemId i = 0; i < size; ++i)
      for (ItemId j = i + 1; j < size; ++j)
        b.add_edge(base + i, base + j, EdgeLabel::kOfficial);
  }
  if (bridge) b.add_edge(0, static_cast<ItemId>(size), EdgeLabel::kBiased);
  return b.freeze();
}

RecGraph synthetic(std::size_t n, std::uint64_t seed) {
  ModelParams p;
  p.n = n;
  p.seed = seed;
  return build_biased_graph(p).graph;
}

TEST(PathLengths, DirectedThreeCycle) {
  GraphBuilder b(3);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  b.add_edge(1, 2, EdgeLabel::kOfficial);
  b.add_edge(2, 0, EdgeLabel::kOfficial);
  PathLengthHistogram h = path_length_distribution(b.freeze());
  EXPECT_EQ(h.counts, (std::map<std::uint32_t, std::uint64_t>{{1, 3}, {2, 3}}));
  EXPECT_EQ(h.unreachable_pairs, 0u);
  EXPECT_DOUBLE_EQ(h.mean_finite_distance(), 1.5);
}

TEST(PathLengths, TwoIsolatedNodes) {
  PathLengthHistogram h = path_length_distribution(RecGraph(2));
  EXPECT_TRUE(h.counts.empty());
  EXPECT_EQ(h.unreachable_pairs, 2u);
  EXPECT_TRUE(std::isnan(h.mean_finite_distance()));
}

TEST(PathLengths, MatchesFloydWarshall) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + rng() % 30;
    GraphBuilder b(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    const std::size_t m = rng() % (3 * n);
    for (std::size_t i = 0; i < m; ++i) {
      auto s = static_cast<ItemId>(rng() % n), t = static_cast<ItemId>(rng() % n);
      if (s == t) continue;
      b.add_edge(s, t, EdgeLabel::kOfficial);
      arcs.emplace_back(s, t);
    }
    auto d = oracle::all_pairs_hops(n, arcs);
    std::map<std::uint32_t, std::uint64_t> expected;
    std::uint64_t unreachable = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (d[i][j] == oracle::kUnreachable) {
          ++unreachable;
        } else {
          ++expected[static_cast<std::uint32_t>(d[i][j])];
        }
      }
    PathLengthHistogram h = path_length_distribution(b.freeze(), AllSources{}, 3);
    EXPECT_EQ(h.counts, expected);
    EXPECT_EQ(h.unreachable_pairs, unreachable);
    EXPECT_EQ(h.reachable_pairs() + h.unreachable_pairs, n * (n - 1));
  }
}

TEST(PathLengths, FullSampleEqualsAll) {
  RecGraph g = synthetic(300, 8);
  EXPECT_EQ(path_length_distribution(g, SampledSources{300, 5}),
            path_length_distribution(g, AllSources{}));
}

TEST(PathLengths, SampleIsSeededAndBounded) {
  RecGraph g = synthetic(300, 8);
  auto a = path_length_distribution(g, SampledSources{40, 1});
  auto b = path_length_distribution(g, SampledSources{40, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.sources, 40u);
  EXPECT_EQ(a.reachable_pairs() + a.unreachable_pairs, 40u * 299u);
  EXPECT_THROW(path_length_distribution(g, SampledSources{301, 1}), InvalidParams);
  EXPECT_NE(select_sources(300, SampledSources{40, 1}),
            select_sources(300, SampledSources{40, 2}));
}

TEST(PathLengths, RemovingEdgesNeverShortensDistances) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 25;
    GraphBuilder full(n), part(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> all, kept;
    for (int i = 0; i < 70; ++i) {
      auto s = static_cast<ItemId>(rng() % n), t = static_cast<ItemId>(rng() % n);
      if (s == t) continue;
      all.emplace_back(s, t);
      if (rng() % 3) kept.emplace_back(s, t);
    }
    auto d_full = oracle::all_pairs_hops(n, all);
    auto d_part = oracle::all_pairs_hops(n, kept);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_LE(d_full[i][j], d_part[i][j]);

    for (auto [s, t] : all) full.add_edge(s, t, EdgeLabel::kOfficial);
    for (auto [s, t] : kept) part.add_edge(s, t, EdgeLabel::kOfficial);
    EXPECT_LE(path_length_distribution(full.freeze()).unreachable_pairs,
              path_length_distribution(part.freeze()).unreachable_pairs);
  }
}

TEST(PathLengths, BiasedEdgesShortenSyntheticPaths) {
  RecGraph g = synthetic(1500, 3);
  RecGraph stripped = remove_labeled(g, EdgeLabel::kBiased);
  auto full = path_length_distribution(g);
  auto cut = path_length_distribution(stripped);
  EXPECT_LT(full.mean_finite_distance(), cut.mean_finite_distance());
}

TEST(PathLengths, CsvLayout) {
  GraphBuilder b(3);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  b.add_edge(1, 2, EdgeLabel::kOfficial);
  std::ostringstream os;
  write_histogram_csv(path_length_distribution(b.freeze()), os);
  EXPECT_EQ(os.str(), "distance,count\n1,2\n2,1\n# unreachable=3 sources=3 nodes=3\n");
}

TEST(Betweenness, PathOfThree) {
  GraphBuilder b(3);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  b.add_edge(2, 1, EdgeLabel::kOfficial);
  EdgeScores s = edge_betweenness(b.freeze());
  EXPECT_EQ(s.values, (std::vector<double>{4.0, 4.0}));
}

TEST(Betweenness, SingleEdge) {
  GraphBuilder b(2);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  EXPECT_EQ(edge_betweenness(b.freeze()).values, (std::vector<double>{2.0}));
}

TEST(Betweenness, ReciprocalEdgesShareTheUndirectedScore) {
  GraphBuilder b(3);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  b.add_edge(1, 0, EdgeLabel::kOfficial);
  b.add_edge(1, 2, EdgeLabel::kOfficial);
  EdgeScores s = edge_betweenness(b.freeze());
  EXPECT_EQ(s.values, (std::vector<double>{4.0, 4.0, 4.0}));
}

TEST(Betweenness, BridgeIsStrictMaximum) {
  RecGraph g = clique_pair(5, true);
  EdgeScores s = edge_betweenness(g);
  auto bridge = g.find_edge(0, 5).value();
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i != bridge) EXPECT_LT(s.values[i], s.values[bridge]);
  }
  // Every one of the 2 * 5 * 5 cross pairs goes over the bridge.
  EXPECT_DOUBLE_EQ(s.values[bridge], 50.0);
}

TEST(Betweenness, MatchesPathEnumeration) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 39;
    auto edges = oracle::random_connected(n, rng() % (2 * n), rng);
    RecGraph g = from_undirected(n, edges, rng);
    auto expected = oracle::betweenness(n, edges);
    EdgeScores s = edge_betweenness(g, {.threads = 2});
    ASSERT_EQ(s.values.size(), g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      EXPECT_NEAR(s.values[i], expected.at(oracle::undirected(e.src, e.dst)), 1e-9)
          << "trial " << trial << " edge " << e.src << "-" << e.dst;
    }
  }
}

TEST(Betweenness, BitIdenticalAcrossThreadCounts) {
  RecGraph g = synthetic(600, 12);
  EdgeScores one = edge_betweenness(g, {.threads = 1});
  for (std::size_t t : {2, 3, 8}) {
    EXPECT_EQ(edge_betweenness(g, {.threads = t}).values, one.values);
  }
}

TEST(Betweenness, FullSampleMatchesExact) {
  RecGraph g = synthetic(200, 1);
  EdgeScores exact = edge_betweenness(g);
  EdgeScores sampled = edge_betweenness(g, {.sample = SampledSources{200, 9}});
  for (std::size_t i = 0; i < exact.values.size(); ++i) {
    EXPECT_NEAR(sampled.values[i], exact.values[i], 1e-9 * exact.values[i]);
  }
}

TEST(Scores, CsvRoundTrip) {
  RecGraph g = clique_pair(4, true);
  EdgeScores s = edge_betweenness(g);
  std::stringstream io;
  write_scores_csv(g, s, io);
  std::string first;
  std::getline(io, first);
  EXPECT_EQ(first, "src,dst,label,score");
  std::getline(io, first);
  EXPECT_EQ(first, "0,4,biased,32");
  io.seekg(0);
  EXPECT_EQ(read_scores_csv(g, io).values, s.values);
}

TEST(Scores, MissingAndUnknownRows) {
  RecGraph g = clique_pair(3, true);
  std::istringstream partial("src,dst,label,score\n0,1,official,2\n");
  EdgeScores s = read_scores_csv(g, partial);
  EXPECT_EQ(s.values[0], 2.0);
  EXPECT_TRUE(std::isnan(s.values[1]));
  std::istringstream unknown("0,5,official,1\n");
  EXPECT_THROW(read_scores_csv(g, unknown), ParseError);
}

std::vector<std::vector<double>> adjacency(const RecGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    a[e.src][e.dst] += e.weight;
    a[e.dst][e.src] += e.weight;
  }
  return a;
}

TEST(Communities, TwoCliquesSplitApart) {
  RecGraph g = clique_pair(6, true);
  Partition p = detect_communities(g);
  ASSERT_EQ(p.community_count(), 2u);
  EXPECT_EQ(p.sizes, (std::vector<std::size_t>{6, 6}));
  for (ItemId v = 0; v < 6; ++v) EXPECT_EQ(p.community[v], 0u);
  for (ItemId v = 6; v < 12; ++v) EXPECT_EQ(p.community[v], 1u);
}

TEST(Communities, EdgelessGraphIsAllSingletons) {
  Partition p = detect_communities(RecGraph(5));
  EXPECT_EQ(p.community_count(), 5u);
  EXPECT_DOUBLE_EQ(modularity(RecGraph(5), p), 0.0);
}

TEST(Communities, ModularityMatchesDefinition) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6 + rng() % 20;
    RecGraph g = from_undirected(n, oracle::random_connected(n, n, rng), rng);
    std::vector<std::uint32_t> labels(n);
    for (auto& l : labels) l = static_cast<std::uint32_t>(rng() % 4);
    Partition p = Partition::from_labels(labels);
    for (double res : {0.5, 1.0, 5.0}) {
      EXPECT_NEAR(modularity(g, p, res),
                  oracle::modularity(adjacency(g), p.community, res), 1e-12);
    }
  }
}

TEST(Communities, BeatsSingletonsAndIsSeeded) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10 + rng() % 40;
    RecGraph g = from_undirected(n, oracle::random_connected(n, 2 * n, rng), rng);
    std::vector<std::uint32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0u);
    Partition singletons = Partition::from_labels(ids);
    for (double res : {1.0, 5.0}) {
      Partition p = detect_communities(g, res, trial);
      EXPECT_GE(modularity(g, p, res) + 1e-12, modularity(g, singletons, res));
      EXPECT_EQ(detect_communities(g, res, trial).community, p.community);
    }
  }
}

TEST(Communities, HigherResolutionGivesMoreCommunities) {
  RecGraph g = synthetic(800, 6);
  EXPECT_GT(detect_communities(g, 5.0).community_count(),
            detect_communities(g, 1.0).community_count());
}

TEST(Communities, LargeCommunityCount) {
  std::vector<std::uint32_t> labels;
  labels.insert(labels.end(), 60, 0);
  labels.insert(labels.end(), 39, 1);
  labels.insert(labels.end(), 1, 2);
  Partition p = Partition::from_labels(labels);
  RecGraph g(100);
  EXPECT_EQ(large_community_count(p, g, 0.01), 3u);
  EXPECT_EQ(large_community_count(p, g, 0.5), 1u);
  EXPECT_EQ(large_community_count(p, g, 0.4), 1u);
  EXPECT_EQ(large_community_count(p, g, 0.39), 2u);
  EXPECT_THROW(large_community_count(p, g, 0.0), InvalidParams);
  EXPECT_THROW(large_community_count(p, g, 1.5), InvalidParams);
}

TEST(Communities, FromLabelsNumbersByFirstAppearance) {
  Partition p = Partition::from_labels({7, 7, 3, 9, 3});
  EXPECT_EQ(p.community, (std::vector<std::uint32_t>{0, 0, 1, 2, 1}));
  EXPECT_EQ(p.sizes, (std::vector<std::size_t>{2, 2, 1}));
}

}  // namespace
}  // namespace recograph
