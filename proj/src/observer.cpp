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

#include "recograph/observer.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>

#include "recograph/io.hpp"

namespace recograph {
namespace {

// 1 + k + ... + k^h, saturating at uint64 max.
std::uint64_t geometric_sum(std::uint64_t k, std::uint64_t h, bool& overflow) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  overflow = false;
  std::uint64_t total = 1;
  std::uint64_t term = 1;
  for (std::uint64_t j = 1; j <= h; ++j) {
    if (k != 0 && term > kMax / k) {
      overflow = true;
      return kMax;
    }
    term *= k;
    if (total > kMax - term) {
      overflow = true;
      return kMax;
    }
    total += term;
    if (k <= 1 && term == 0) break;
  }
  return total;
}

}  // namespace

GraphOracle::GraphOracle(RecGraph graph)
    : graph_(std::make_shared<const RecGraph>(std::move(graph))) {}

GraphOracle GraphOracle::from_dump(
    const std::filesystem::path& path,
    const std::optional<std::filesystem::path>& names_path) {
  return GraphOracle(load_graph(path, names_path));
}

std::vector<Recommendation> GraphOracle::recommend(ItemId item) {
  if (!graph_->contains(item)) {
    throw OracleError("item " + std::to_string(item) + " is not served");
  }
  ++queries_;
  std::vector<Recommendation> out;
  auto out_edges = graph_->out_edges(item);
  out.reserve(out_edges.size());
  for (std::uint32_t e : out_edges) {
    const Edge& edge = graph_->edge(e);
    out.push_back({edge.dst, edge.label});
  }
  return out;
}

std::string GraphOracle::name(ItemId item) const {
  return graph_->display_name(item);
}

std::optional<std::size_t> GraphOracle::declared_fanout() const {
  std::string_view f = graph_->meta("fanout");
  if (f.empty()) return std::nullopt;
  return parse_uint(f);
}

ItemId GraphOracle::resolve(std::string_view name_or_id) const {
  if (auto id = graph_->find_name(name_or_id)) return *id;
  try {
    std::uint64_t v = parse_uint(name_or_id);
    if (v < graph_->node_count()) return static_cast<ItemId>(v);
  } catch (const ParseError&) {
  }
  throw OracleError("unknown item '" + std::string(name_or_id) + "'");
}

std::uint64_t tree_bound(std::uint64_t k, std::uint64_t h) {
  if (k < 2) throw InvalidParams("tree_bound needs k >= 2");
  bool overflow = false;
  std::uint64_t total = geometric_sum(k, h, overflow);
  if (overflow) throw InvalidParams("tree_bound overflows 64 bits");
  return total;
}

ObservedGraph crawl(RecommendationOracle& oracle, ItemId seed,
                    std::size_t depth) {
  GraphBuilder builder;
  std::unordered_map<ItemId, ItemId> local;
  ObservedGraph obs;
  obs.seed = seed;
  obs.depth = depth;

  auto discover = [&](ItemId oracle_id) {
    auto [it, inserted] =
        local.emplace(oracle_id, static_cast<ItemId>(builder.node_count()));
    if (inserted) {
      std::string n = oracle.name(oracle_id);
      if (n.empty()) n = std::to_string(oracle_id);
      builder.add_node(std::move(n));
      obs.origin.push_back(oracle_id);
    }
    return std::pair{it->second, inserted};
  };

  std::size_t longest_list = 0;
  auto finish = [&] {
    obs.fanout = oracle.declared_fanout().value_or(longest_list);
    builder.set_metadata("source", "crawl");
    builder.set_metadata("seed", oracle.name(seed).empty()
                                     ? std::to_string(seed)
                                     : oracle.name(seed));
    builder.set_metadata("depth", std::to_string(depth));
    builder.set_metadata("fanout", std::to_string(obs.fanout));
    obs.graph = builder.freeze();
  };

  std::vector<ItemId> frontier{discover(seed).first};
  obs.frontier_sizes.push_back(1);
  for (std::size_t hop = 0; hop < depth && !frontier.empty(); ++hop) {
    std::vector<ItemId> next;
    for (ItemId v : frontier) {
      std::vector<Recommendation> recs;
      try {
        recs = oracle.recommend(obs.origin[v]);
      } catch (const OracleError& e) {
        ItemId failed = obs.origin[v];
        obs.frontier_sizes.push_back(next.size());
        finish();
        throw CrawlError(std::string("crawl interrupted: ") + e.what(),
                         std::move(obs), failed);
      }
      ++obs.queries;
      longest_list = std::max(longest_list, recs.size());
      for (const Recommendation& r : recs) {
        if (r.item == obs.origin[v]) continue;
        auto [w, fresh] = discover(r.item);
        if (fresh) next.push_back(w);
        builder.add_edge(v, w, r.label);
      }
    }
    obs.frontier_sizes.push_back(next.size());
    frontier = std::move(next);
  }
  obs.frontier_sizes.resize(depth + 1, 0);
  finish();
  return obs;
}

double redundancy(std::size_t node_count, std::size_t fanout,
                  std::size_t depth) {
  bool overflow = false;
  std::uint64_t bound = geometric_sum(fanout, depth, overflow);
  return 1.0 - static_cast<double>(node_count) / static_cast<double>(bound);
}

double redundancy(const ObservedGraph& observed) {
  return redundancy(observed.graph.node_count(), observed.fanout,
                    observed.depth);
}

}  // namespace recograph
