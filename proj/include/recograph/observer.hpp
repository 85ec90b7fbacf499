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

// User-side observation of a recommender: breadth-first crawl from a seed
// item up to a hop limit, against anything that can answer "what is
// recommended on this item's page?".

#ifndef RECOGRAPH_OBSERVER_HPP_
#define RECOGRAPH_OBSERVER_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "recograph/error.hpp"
#include "recograph/graph.hpp"

namespace recograph {

struct Recommendation {
  ItemId item = 0;
  EdgeLabel label = EdgeLabel::kUnknown;
};

// Must answer deterministically for the duration of one crawl.
class RecommendationOracle {
 public:
  virtual ~RecommendationOracle() = default;

  // Recommendations displayed for `item`, in page order. Throws OracleError
  // when the item cannot be served.
  virtual std::vector<Recommendation> recommend(ItemId item) = 0;

  // External name for `item`; "" if the oracle has none.
  virtual std::string name(ItemId item) const = 0;

  // Page size advertised by the source, if it advertises one.
  virtual std::optional<std::size_t> declared_fanout() const {
    return std::nullopt;
  }
};

// Serves the out-edges of a frozen graph. Used both for synthetic graphs and
// for replaying crawl dumps.
class GraphOracle : public RecommendationOracle {
 public:
  explicit GraphOracle(RecGraph graph);

  // Loads a crawl dump (edge list with `#meta seed= depth= fanout=`) and its
  // optional names sidecar.
  static GraphOracle from_dump(
      const std::filesystem::path& path,
      const std::optional<std::filesystem::path>& names_path = std::nullopt);

  std::vector<Recommendation> recommend(ItemId item) override;
  std::string name(ItemId item) const override;
  std::optional<std::size_t> declared_fanout() const override;

  // Resolves an external name, or a decimal id when the graph has no such
  // name. Throws OracleError.
  ItemId resolve(std::string_view name_or_id) const;

  const RecGraph& graph() const { return *graph_; }
  std::size_t queries() const { return queries_; }

 private:
  std::shared_ptr<const RecGraph> graph_;
  std::size_t queries_ = 0;
};

// (k^(h+1) - 1) / (k - 1): the node count of a complete k-ary tree of
// height h. Throws InvalidParams for k < 2 or on 64-bit overflow.
std::uint64_t tree_bound(std::uint64_t k, std::uint64_t h);

struct ObservedGraph {
  // Node 0 is the seed; other nodes are numbered in discovery order.
  RecGraph graph;
  // Seed as the oracle knows it.
  ItemId seed = 0;
  std::size_t depth = 0;
  // Declared by the oracle, else the longest recommendation list seen.
  std::size_t fanout = 0;
  // frontier_sizes[j] = nodes first discovered at hop j.
  std::vector<std::size_t> frontier_sizes;
  // origin[v] = oracle id of observed node v.
  std::vector<ItemId> origin;
  std::size_t queries = 0;
};

// Oracle failure during a crawl. Carries everything observed so far.
class CrawlError : public Error {
 public:
  CrawlError(const std::string& message, ObservedGraph partial,
             ItemId failed_item)
      : Error(message), partial_(std::move(partial)), failed_item_(failed_item) {}

  const ObservedGraph& partial() const { return partial_; }
  // Oracle id of the item whose query failed.
  ItemId failed_item() const { return failed_item_; }

 private:
  ObservedGraph partial_;
  ItemId failed_item_;
};

// Breadth-first exploration: every item first discovered at hop < depth is
// queried exactly once, in discovery order; every returned recommendation
// becomes an edge, including those pointing at already-known items. Items at
// hop == depth are recorded but not expanded. Self-recommendations are
// dropped. Throws CrawlError if the oracle fails.
ObservedGraph crawl(RecommendationOracle& oracle, ItemId seed,
                    std::size_t depth);

// 1 - node_count / tree_bound(fanout, depth). Fanouts below 2 use the
// geometric sum directly (k = 1 gives depth + 1, k = 0 gives 1).
double redundancy(const ObservedGraph& observed);
double redundancy(std::size_t node_count, std::size_t fanout,
                  std::size_t depth);

}  // namespace recograph

#endif  // RECOGRAPH_OBSERVER_HPP_
