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

// Directed graph of recommendations. Nodes are items, an edge (i, j) means
// "j was recommended from i". Edges carry a provenance label and an
// occurrence count; parallel observations collapse into the count.
//
// Graphs are built through GraphBuilder and then frozen into an immutable
// RecGraph. All analysis code takes `const RecGraph&`.

#ifndef RECOGRAPH_GRAPH_HPP_
#define RECOGRAPH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace recograph {

// Dense item index, contiguous from 0 within a graph.
using ItemId = std::uint32_t;

enum class EdgeLabel : std::uint8_t {
  kOfficial,
  kBiased,
  kUnknown,
};

// "official", "biased", "unknown".
std::string_view to_string(EdgeLabel label);

// Inverse of to_string. Throws ParseError.
EdgeLabel parse_label(std::string_view text);

struct Edge {
  ItemId src = 0;
  ItemId dst = 0;
  EdgeLabel label = EdgeLabel::kUnknown;
  std::uint32_t weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using Metadata = std::map<std::string, std::string>;

class GraphBuilder;

class RecGraph {
 public:
  // Edgeless graph on `node_count` >= 1 nodes.
  explicit RecGraph(std::size_t node_count = 1);

  std::size_t node_count() const { return out_offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  // Edges in insertion order. The position of an edge in this span is its
  // edge index, used by score vectors and rankings.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  // Edge indices leaving / entering `item`, in insertion order.
  std::span<const std::uint32_t> out_edges(ItemId item) const;
  std::span<const std::uint32_t> in_edges(ItemId item) const;

  std::size_t out_degree(ItemId item) const { return out_edges(item).size(); }
  // Distinct in-neighbors; weights are ignored.
  std::size_t in_degree(ItemId item) const { return in_edges(item).size(); }

  std::optional<std::size_t> find_edge(ItemId src, ItemId dst) const;

  std::size_t count_label(EdgeLabel label) const;

  const Metadata& metadata() const { return metadata_; }
  // Empty when the key is absent.
  std::string_view meta(std::string_view key) const;

  bool has_names() const { return !names_.empty(); }
  // External name of `item`, or "" when unnamed.
  std::string_view name(ItemId item) const;
  // External name if present, decimal id otherwise.
  std::string display_name(ItemId item) const;
  std::optional<ItemId> find_name(std::string_view name) const;

  bool contains(ItemId item) const { return item < node_count(); }

 private:
  friend class GraphBuilder;

  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_offsets_;
  std::vector<std::uint32_t> out_index_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<std::uint32_t> in_index_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ItemId> name_lookup_;
  Metadata metadata_;
};

// Single-writer construction of a RecGraph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t node_count = 0);

  // Seeds the builder with every node, edge, name and metadata entry of
  // `graph`.
  static GraphBuilder from(const RecGraph& graph);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  ItemId add_node();
  // Throws InvalidParams if the name is already taken or empty.
  ItemId add_node(std::string name);
  void set_name(ItemId item, std::string name);
  std::optional<ItemId> find_name(std::string_view name) const;

  // Inserts (src, dst) with weight `times`, or adds `times` to the weight of
  // an existing edge. An Unknown label is refined by a specific one; Official
  // against Biased throws LabelConflict. Self-loops and out-of-range ids
  // throw InvalidEdge.
  void add_edge(ItemId src, ItemId dst, EdgeLabel label,
                std::uint32_t times = 1);

  void set_metadata(std::string key, std::string value);

  // Nodes are numbered 0..node_count()-1; an empty builder yields a single
  // isolated node.
  RecGraph freeze() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ItemId> name_lookup_;
  Metadata metadata_;
};

// Functional form of GraphBuilder::add_edge: returns a new graph.
RecGraph add_edge(const RecGraph& graph, ItemId src, ItemId dst,
                  EdgeLabel label);

// Same nodes, names and metadata; only edges whose label differs from
// `label` are kept.
RecGraph remove_labeled(const RecGraph& graph, EdgeLabel label);

// Number of nodes with strictly more than `threshold` distinct in-neighbors.
std::size_t in_degree_tail_count(const RecGraph& graph, std::size_t threshold);

}  // namespace recograph

#endif  // RECOGRAPH_GRAPH_HPP_
