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

#include <limits>
#include <utility>

#include "recograph/error.hpp"

namespace recograph {
namespace {

std::uint64_t pair_key(ItemId src, ItemId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

// Counting sort of edge indices by one endpoint; stable, so per-node lists
// keep insertion order.
void build_index(const std::vector<Edge>& edges, std::size_t node_count,
                 bool by_src, std::vector<std::uint32_t>& offsets,
                 std::vector<std::uint32_t>& index) {
  offsets.assign(node_count + 1, 0);
  for (const Edge& e : edges) ++offsets[(by_src ? e.src : e.dst) + 1];
  for (std::size_t i = 0; i < node_count; ++i) offsets[i + 1] += offsets[i];
  index.resize(edges.size());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    index[cursor[by_src ? e.src : e.dst]++] = i;
  }
}

}  // namespace

std::string_view to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::kOfficial:
      return "official";
    case EdgeLabel::kBiased:
      return "biased";
    case EdgeLabel::kUnknown:
      return "unknown";
  }
  return "unknown";
}

EdgeLabel parse_label(std::string_view text) {
  if (text == "official") return EdgeLabel::kOfficial;
  if (text == "biased") return EdgeLabel::kBiased;
  if (text == "unknown") return EdgeLabel::kUnknown;
  throw ParseError("unknown edge label '" + std::string(text) + "'");
}

RecGraph::RecGraph(std::size_t node_count) {
  if (node_count == 0) throw InvalidParams("a graph needs at least one node");
  out_offsets_.assign(node_count + 1, 0);
  in_offsets_.assign(node_count + 1, 0);
}

std::span<const std::uint32_t> RecGraph::out_edges(ItemId item) const {
  return std::span<const std::uint32_t>(out_index_)
      .subspan(out_offsets_[item], out_offsets_[item + 1] - out_offsets_[item]);
}

std::span<const std::uint32_t> RecGraph::in_edges(ItemId item) const {
  return std::span<const std::uint32_t>(in_index_)
      .subspan(in_offsets_[item], in_offsets_[item + 1] - in_offsets_[item]);
}

std::optional<std::size_t> RecGraph::find_edge(ItemId src, ItemId dst) const {
  auto it = lookup_.find(pair_key(src, dst));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RecGraph::count_label(EdgeLabel label) const {
  std::size_t count = 0;
  for (const Edge& e : edges_) count += e.label == label ? 1 : 0;
  return count;
}

std::string_view RecGraph::meta(std::string_view key) const {
  auto it = metadata_.find(std::string(key));
  if (it == metadata_.end()) return {};
  return it->second;
}

std::string_view RecGraph::name(ItemId item) const {
  if (names_.empty()) return {};
  return names_[item];
}

std::string RecGraph::display_name(ItemId item) const {
  std::string_view n = name(item);
  return n.empty() ? std::to_string(item) : std::string(n);
}

std::optional<ItemId> RecGraph::find_name(std::string_view name) const {
  auto it = name_lookup_.find(std::string(name));
  if (it == name_lookup_.end()) return std::nullopt;
  return it->second;
}

GraphBuilder::GraphBuilder(std::size_t node_count) : node_count_(node_count) {}

GraphBuilder GraphBuilder::from(const RecGraph& graph) {
  GraphBuilder b(graph.node_count());
  b.edges_ = graph.edges_;
  b.lookup_ = graph.lookup_;
  b.names_ = graph.names_;
  b.name_lookup_ = graph.name_lookup_;
  b.metadata_ = graph.metadata_;
  return b;
}

ItemId GraphBuilder::add_node() {
  if (node_count_ >= std::numeric_limits<ItemId>::max()) {
    throw InvalidParams("node count exceeds ItemId range");
  }
  if (!names_.empty()) names_.emplace_back();
  return static_cast<ItemId>(node_count_++);
}

ItemId GraphBuilder::add_node(std::string name) {
  ItemId id = add_node();
  set_name(id, std::move(name));
  return id;
}

void GraphBuilder::set_name(ItemId item, std::string name) {
  if (item >= node_count_) throw InvalidParams("set_name: item out of range");
  if (name.empty()) throw InvalidParams("node names must be non-empty");
  auto [it, inserted] = name_lookup_.emplace(name, item);
  if (!inserted && it->second != item) {
    throw InvalidParams("duplicate node name '" + name + "'");
  }
  if (names_.empty()) names_.resize(node_count_);
  if (!names_[item].empty() && names_[item] != name) {
    name_lookup_.erase(names_[item]);
  }
  names_[item] = std::move(name);
}

std::optional<ItemId> GraphBuilder::find_name(std::string_view name) const {
  auto it = name_lookup_.find(std::string(name));
  if (it == name_lookup_.end()) return std::nullopt;
  return it->second;
}

void GraphBuilder::add_edge(ItemId src, ItemId dst, EdgeLabel label,
                            std::uint32_t times) {
  if (src == dst) {
    throw InvalidEdge("self-loop on item " + std::to_string(src));
  }
  if (src >= node_count_ || dst >= node_count_) {
    throw InvalidEdge("edge (" + std::to_string(src) + ", " +
                      std::to_string(dst) + ") has an endpoint out of range");
  }
  if (times == 0) throw InvalidEdge("edge weight must be positive");

  auto [it, inserted] = lookup_.emplace(
      pair_key(src, dst), static_cast<std::uint32_t>(edges_.size()));
  if (inserted) {
    edges_.push_back(Edge{src, dst, label, times});
    return;
  }
  Edge& e = edges_[it->second];
  if (label != EdgeLabel::kUnknown) {
    if (e.label == EdgeLabel::kUnknown) {
      e.label = label;
    } else if (e.label != label) {
      throw LabelConflict("edge (" + std::to_string(src) + ", " +
                          std::to_string(dst) + ") labeled both " +
                          std::string(to_string(e.label)) + " and " +
                          std::string(to_string(label)));
    }
  }
  e.weight += times;
}

void GraphBuilder::set_metadata(std::string key, std::string value) {
  metadata_[std::move(key)] = std::move(value);
}

RecGraph GraphBuilder::freeze() const {
  RecGraph g(node_count_ == 0 ? 1 : node_count_);
  g.edges_ = edges_;
  g.lookup_ = lookup_;
  g.metadata_ = metadata_;
  if (!names_.empty()) {
    g.names_ = names_;
    g.names_.resize(g.node_count());
    g.name_lookup_ = name_lookup_;
  }
  build_index(g.edges_, g.node_count(), true, g.out_offsets_, g.out_index_);
  build_index(g.edges_, g.node_count(), false, g.in_offsets_, g.in_index_);
  return g;
}

RecGraph add_edge(const RecGraph& graph, ItemId src, ItemId dst,
                  EdgeLabel label) {
  GraphBuilder b = GraphBuilder::from(graph);
  b.add_edge(src, dst, label);
  return b.freeze();
}

RecGraph remove_labeled(const RecGraph& graph, EdgeLabel label) {
  GraphBuilder b(graph.node_count());
  for (ItemId i = 0; i < graph.node_count(); ++i) {
    std::string_view n = graph.name(i);
    if (!n.empty()) b.set_name(i, std::string(n));
  }
  for (const auto& [k, v] : graph.metadata()) b.set_metadata(k, v);
  for (const Edge& e : graph.edges()) {
    if (e.label != label) b.add_edge(e.src, e.dst, e.label, e.weight);
  }
  return b.freeze();
}

std::size_t in_degree_tail_count(const RecGraph& graph,
                                 std::size_t threshold) {
  std::size_t count = 0;
  for (ItemId i = 0; i < graph.node_count(); ++i) {
    if (graph.in_degree(i) > threshold) ++count;
  }
  return count;
}

}  // namespace recograph
