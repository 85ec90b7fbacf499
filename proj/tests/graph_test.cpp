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

#include "recograph/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "recograph/error.hpp"
#include "recograph/synth.hpp"

namespace recograph {
namespace {

TEST(AddEdge, InsertsWeightOneEdge) {
  RecGraph g = add_edge(RecGraph(2), 0, 1, EdgeLabel::kOfficial);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, EdgeLabel::kOfficial, 1}));
}

TEST(AddEdge, RepeatedEdgeIncrementsWeight) {
  RecGraph g = add_edge(RecGraph(2), 0, 1, EdgeLabel::kOfficial);
  g = add_edge(g, 0, 1, EdgeLabel::kOfficial);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(0).weight, 2u);
}

TEST(AddEdge, RejectsSelfLoop) {
  EXPECT_THROW(add_edge(RecGraph(2), 0, 0, EdgeLabel::kOfficial), InvalidEdge);
}

TEST(AddEdge, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(add_edge(RecGraph(2), 0, 2, EdgeLabel::kOfficial), InvalidEdge);
}

TEST(AddEdge, UnknownIsRefinedAndNeverDowngrades) {
  GraphBuilder b(2);
  b.add_edge(0, 1, EdgeLabel::kUnknown);
  b.add_edge(0, 1, EdgeLabel::kBiased);
  b.add_edge(0, 1, EdgeLabel::kUnknown);
  RecGraph g = b.freeze();
  EXPECT_EQ(g.edge(0).label, EdgeLabel::kBiased);
  EXPECT_EQ(g.edge(0).weight, 3u);
}

TEST(AddEdge, OfficialBiasedConflictThrows) {
  GraphBuilder b(2);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  EXPECT_THROW(b.add_edge(0, 1, EdgeLabel::kBiased), LabelConflict);
}

TEST(AddEdge, InputGraphIsUnchanged) {
  RecGraph g(3);
  RecGraph h = add_edge(g, 1, 2, EdgeLabel::kBiased);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(RemoveLabeled, SyntheticGraphKeepsOfficialOutDegree) {
  ModelParams p;
  p.n = 300;
  p.k_r = 17;
  p.k_b = 2;
  p.seed = 3;
  RecGraph g = build_biased_graph(p).graph;
  RecGraph stripped = remove_labeled(g, EdgeLabel::kBiased);
  EXPECT_EQ(stripped.node_count(), g.node_count());
  for (ItemId v = 0; v < stripped.node_count(); ++v) {
    EXPECT_EQ(stripped.out_degree(v), 17u);
  }
}

TEST(RemoveLabeled, NoOpWithoutThatLabel) {
  GraphBuilder b(3);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  b.add_edge(1, 2, EdgeLabel::kOfficial, 4);
  RecGraph g = b.freeze();
  RecGraph h = remove_labeled(g, EdgeLabel::kBiased);
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(),
                         h.edges().end()));
}

TEST(RemoveLabeled, FiltersToyGraph) {
  GraphBuilder b(4);
  b.add_edge(0, 1, EdgeLabel::kOfficial);
  b.add_edge(1, 2, EdgeLabel::kBiased);
  b.add_edge(2, 3, EdgeLabel::kUnknown);
  b.set_name(0, "a");
  b.set_metadata("t", "2016");
  RecGraph g = b.freeze();
  RecGraph h = remove_labeled(g, EdgeLabel::kBiased);
  ASSERT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.edge(0), g.edge(0));
  EXPECT_EQ(h.edge(1), g.edge(2));
  EXPECT_EQ(h.name(0), "a");
  EXPECT_EQ(h.meta("t"), "2016");
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(InDegreeTail, StarHub) {
  GraphBuilder b(6);
  for (ItemId s = 1; s <= 5; ++s) b.add_edge(s, 0, EdgeLabel::kOfficial);
  RecGraph g = b.freeze();
  EXPECT_EQ(in_degree_tail_count(g, 4), 1u);
  EXPECT_EQ(in_degree_tail_count(g, 5), 0u);
}

TEST(InDegreeTail, ThresholdAtNodeCountIsZero) {
  GraphBuilder b(4);
  for (ItemId s = 0; s < 4; ++s)
    for (ItemId t = 0; t < 4; ++t)
      if (s != t) b.add_edge(s, t, EdgeLabel::kOfficial);
  RecGraph g = b.freeze();
  EXPECT_EQ(in_degree_tail_count(g, 4), 0u);
  EXPECT_EQ(in_degree_tail_count(g, 2), 4u);
}

TEST(InDegreeTail, WeightsIgnored) {
  GraphBuilder b(3);
  b.add_edge(1, 0, EdgeLabel::kOfficial, 50);
  b.add_edge(2, 0, EdgeLabel::kOfficial, 50);
  EXPECT_EQ(in_degree_tail_count(b.freeze(), 1), 1u);
  EXPECT_EQ(in_degree_tail_count(b.freeze(), 2), 0u);
}

TEST(Names, UniqueAndResolvable) {
  GraphBuilder b;
  ItemId a = b.add_node("vidA");
  ItemId c = b.add_node("vidC");
  EXPECT_THROW(b.add_node("vidA"), InvalidParams);
  b.add_edge(a, c, EdgeLabel::kUnknown);
  RecGraph g = b.freeze();
  EXPECT_EQ(g.find_name("vidC"), c);
  EXPECT_FALSE(g.find_name("nope").has_value());
  EXPECT_EQ(g.display_name(a), "vidA");
}

TEST(RecGraph, AtLeastOneNode) {
  EXPECT_THROW(RecGraph(0), InvalidParams);
  EXPECT_EQ(GraphBuilder().freeze().node_count(), 1u);
}

TEST(Labels, TextRoundTrip) {
  for (auto l : {EdgeLabel::kOfficial, EdgeLabel::kBiased, EdgeLabel::kUnknown}) {
    EXPECT_EQ(parse_label(to_string(l)), l);
  }
  EXPECT_THROW(parse_label("Official"), ParseError);
}

// Random edge sequences without label conflicts.
std::vector<std::tuple<ItemId, ItemId, EdgeLabel>> random_ops(std::mt19937_64& rng,
                                                             std::size_t n) {
  std::uniform_int_distribution<ItemId> node(0, static_cast<ItemId>(n - 1));
  std::vector<std::tuple<ItemId, ItemId, EdgeLabel>> ops;
  for (int i = 0; i < 200; ++i) {
    ItemId a = node(rng), b = node(rng);
    if (a == b) continue;
    // Label is a function of the pair, so no conflicts arise.
    EdgeLabel l = (a + b) % 3 == 0 ? EdgeLabel::kBiased : EdgeLabel::kOfficial;
    ops.emplace_back(a, b, l);
  }
  return ops;
}

TEST(GraphProperties, DegreeSumsMatchEdgeCount) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    GraphBuilder b(25);
    for (auto [s, t, l] : random_ops(rng, 25)) b.add_edge(s, t, l);
    RecGraph g = b.freeze();
    std::size_t out_sum = 0, in_sum = 0;
    for (ItemId v = 0; v < g.node_count(); ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
      for (auto e : g.out_edges(v)) EXPECT_EQ(g.edge(e).src, v);
      for (auto e : g.in_edges(v)) EXPECT_EQ(g.edge(e).dst, v);
    }
    EXPECT_EQ(out_sum, g.edge_count());
    EXPECT_EQ(in_sum, g.edge_count());
  }
}

TEST(GraphProperties, RemoveLabeledAccountsForEveryEdge) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    GraphBuilder b(25);
    for (auto [s, t, l] : random_ops(rng, 25)) b.add_edge(s, t, l);
    RecGraph g = b.freeze();
    RecGraph h = remove_labeled(g, EdgeLabel::kBiased);
    EXPECT_EQ(h.count_label(EdgeLabel::kBiased), 0u);
    EXPECT_EQ(g.edge_count() - h.edge_count(), g.count_label(EdgeLabel::kBiased));
  }
}

TEST(GraphProperties, InsertionOrderDoesNotChangeWeights) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto ops = random_ops(rng, 20);
    auto shuffled = ops;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto summarize = [](const std::vector<std::tuple<ItemId, ItemId, EdgeLabel>>& seq) {
      GraphBuilder b(20);
      for (auto [s, t, l] : seq) b.add_edge(s, t, l);
      RecGraph g = b.freeze();
      std::map<std::pair<ItemId, ItemId>, std::pair<EdgeLabel, std::uint32_t>> m;
      for (const Edge& e : g.edges()) m[{e.src, e.dst}] = {e.label, e.weight};
      return m;
    };
    EXPECT_EQ(summarize(ops), summarize(shuffled));
  }
}

}  // namespace
}  // namespace recograph
