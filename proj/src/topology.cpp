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

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>

#include "recograph/error.hpp"
#include "recograph/io.hpp"
#include "recograph/parallel.hpp"
#include "recograph/rng.hpp"

namespace recograph {
namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Source blocks are fixed independently of the thread count so that the
// floating-point reduction order never changes.
constexpr std::size_t kSourceBlocks = 32;

struct Undirected {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> neighbor;
  std::vector<std::uint32_t> link;  // undirected edge id per adjacency slot
  std::vector<std::uint32_t> of_edge;  // directed edge index -> undirected id
  std::vector<double> weight;          // per undirected id
  std::size_t link_count = 0;
};

Undirected project(const RecGraph& g) {
  Undirected u;
  const std::size_t n = g.node_count();
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  ids.reserve(g.edge_count());
  std::vector<std::pair<ItemId, ItemId>> ends;
  u.of_edge.resize(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    ItemId a = std::min(e.src, e.dst);
    ItemId b = std::max(e.src, e.dst);
    auto key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto [it, inserted] =
        ids.emplace(key, static_cast<std::uint32_t>(ends.size()));
    if (inserted) {
      ends.emplace_back(a, b);
      u.weight.push_back(0.0);
    }
    u.of_edge[i] = it->second;
    u.weight[it->second] += e.weight;
  }
  u.link_count = ends.size();
  u.offsets.assign(n + 1, 0);
  for (auto [a, b] : ends) {
    ++u.offsets[a + 1];
    ++u.offsets[b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) u.offsets[i + 1] += u.offsets[i];
  u.neighbor.resize(2 * ends.size());
  u.link.resize(2 * ends.size());
  std::vector<std::uint32_t> cursor(u.offsets.begin(), u.offsets.end() - 1);
  for (std::uint32_t id = 0; id < ends.size(); ++id) {
    auto [a, b] = ends[id];
    u.neighbor[cursor[a]] = b;
    u.link[cursor[a]++] = id;
    u.neighbor[cursor[b]] = a;
    u.link[cursor[b]++] = id;
  }
  return u;
}

std::pair<std::size_t, std::size_t> block_range(std::size_t block,
                                                std::size_t blocks,
                                                std::size_t count) {
  return {block * count / blocks, (block + 1) * count / blocks};
}

}  // namespace

std::vector<ItemId> select_sources(std::size_t node_count,
                                   const SourceSelection& selection) {
  std::vector<ItemId> all(node_count);
  std::iota(all.begin(), all.end(), ItemId{0});
  if (std::holds_alternative<AllSources>(selection)) return all;

  const auto& sample = std::get<SampledSources>(selection);
  if (sample.size > node_count) {
    throw InvalidParams("source sample of " + std::to_string(sample.size) +
                        " exceeds node count " + std::to_string(node_count));
  }
  // Partial Fisher-Yates: the first `size` slots are the sample.
  Rng rng(sample.seed);
  for (std::size_t i = 0; i < sample.size; ++i) {
    std::size_t j = i + rng.below(node_count - i);
    std::swap(all[i], all[j]);
  }
  all.resize(sample.size);
  std::sort(all.begin(), all.end());
  return all;
}

std::uint64_t PathLengthHistogram::reachable_pairs() const {
  std::uint64_t total = 0;
  for (const auto& [dist, count] : counts) total += count;
  return total;
}

double PathLengthHistogram::mean_finite_distance() const {
  std::uint64_t pairs = 0;
  long double sum = 0;
  for (const auto& [dist, count] : counts) {
    pairs += count;
    sum += static_cast<long double>(dist) * count;
  }
  if (pairs == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(sum / pairs);
}

PathLengthHistogram path_length_distribution(const RecGraph& graph,
                                             const SourceSelection& sources,
                                             std::size_t threads) {
  const std::size_t n = graph.node_count();
  const std::vector<ItemId> selected = select_sources(n, sources);
  const std::size_t blocks = std::min(kSourceBlocks, selected.size());

  std::vector<std::vector<std::uint64_t>> partial(blocks);
  std::vector<std::uint64_t> unreachable(blocks, 0);
  parallel_for(blocks, threads, [&](std::size_t block) {
    auto [begin, end] = block_range(block, blocks, selected.size());
    std::vector<std::uint32_t> dist(n, kUnvisited);
    std::vector<ItemId> queue;
    queue.reserve(n);
    auto& hist = partial[block];
    for (std::size_t s = begin; s < end; ++s) {
      std::fill(dist.begin(), dist.end(), kUnvisited);
      queue.clear();
      queue.push_back(selected[s]);
      dist[selected[s]] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        ItemId v = queue[head];
        for (std::uint32_t e : graph.out_edges(v)) {
          ItemId w = graph.edge(e).dst;
          if (dist[w] != kUnvisited) continue;
          dist[w] = dist[v] + 1;
          if (hist.size() <= dist[w]) hist.resize(dist[w] + 1, 0);
          ++hist[dist[w]];
          queue.push_back(w);
        }
      }
      unreachable[block] += n - queue.size();
    }
  });

  PathLengthHistogram h;
  h.sources = selected.size();
  h.node_count = n;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t dist = 1; dist < partial[b].size(); ++dist) {
      if (partial[b][dist] != 0) {
        h.counts[static_cast<std::uint32_t>(dist)] += partial[b][dist];
      }
    }
    h.unreachable_pairs += unreachable[b];
  }
  return h;
}

void write_histogram_csv(const PathLengthHistogram& histogram,
                         std::ostream& out) {
  out << "distance,count\n";
  for (const auto& [dist, count] : histogram.counts) {
    out << dist << ',' << count << '\n';
  }
  out << "# unreachable=" << histogram.unreachable_pairs
      << " sources=" << histogram.sources << " nodes=" << histogram.node_count
      << '\n';
}

EdgeScores edge_betweenness(const RecGraph& graph,
                            const BetweennessOptions& options) {
  const std::size_t n = graph.node_count();
  const Undirected u = project(graph);
  const std::vector<ItemId> sources =
      options.sample ? select_sources(n, *options.sample)
                     : select_sources(n, AllSources{});
  const std::size_t blocks = std::min(kSourceBlocks, sources.size());

  std::vector<std::vector<double>> partial(blocks);
  parallel_for(blocks, options.threads, [&](std::size_t block) {
    auto [begin, end] = block_range(block, blocks, sources.size());
    std::vector<double> acc(u.link_count, 0.0);
    std::vector<std::uint32_t> dist(n, kUnvisited);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<ItemId> order;
    order.reserve(n);
    for (std::size_t s = begin; s < end; ++s) {
      for (ItemId v : order) {
        dist[v] = kUnvisited;
        sigma[v] = 0.0;
        delta[v] = 0.0;
      }
      order.clear();
      const ItemId src = sources[s];
      dist[src] = 0;
      sigma[src] = 1.0;
      order.push_back(src);
      for (std::size_t head = 0; head < order.size(); ++head) {
        ItemId v = order[head];
        for (std::uint32_t a = u.offsets[v]; a < u.offsets[v + 1]; ++a) {
          ItemId w = u.neighbor[a];
          if (dist[w] == kUnvisited) {
            dist[w] = dist[v] + 1;
            order.push_back(w);
          }
          if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
      }
      // Dependencies flow back from the farthest nodes; each successor w of
      // v on a shortest path hands v the share sigma[v] / sigma[w].
      for (std::size_t i = order.size(); i-- > 1;) {
        ItemId w = order[i];
        const double coeff = (1.0 + delta[w]) / sigma[w];
        for (std::uint32_t a = u.offsets[w]; a < u.offsets[w + 1]; ++a) {
          ItemId v = u.neighbor[a];
          if (dist[v] + 1 != dist[w]) continue;
          const double c = sigma[v] * coeff;
          acc[u.link[a]] += c;
          delta[v] += c;
        }
      }
    }
    partial[block] = std::move(acc);
  });

  std::vector<double> total(u.link_count, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += acc[i];
  }
  if (options.sample && !sources.empty()) {
    const double scale =
        static_cast<double>(n) / static_cast<double>(sources.size());
    for (double& x : total) x *= scale;
  }

  EdgeScores scores;
  scores.values.resize(graph.edge_count());
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    scores.values[i] = total[u.of_edge[i]];
  }
  return scores;
}

void write_scores_csv(const RecGraph& graph, const EdgeScores& scores,
                      std::ostream& out) {
  if (scores.values.size() != graph.edge_count()) {
    throw IncompleteScores("score vector does not match the edge count");
  }
  std::vector<std::uint32_t> order(graph.edge_count());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const double sa = scores.values[a], sb = scores.values[b];
    if (sa != sb) return sa > sb;
    const Edge& ea = graph.edge(a);
    const Edge& eb = graph.edge(b);
    return std::pair(ea.src, ea.dst) < std::pair(eb.src, eb.dst);
  });
  out << "src,dst,label,score\n";
  for (std::uint32_t i : order) {
    const Edge& e = graph.edge(i);
    out << e.src << ',' << e.dst << ',' << to_string(e.label) << ','
        << format_double(scores.values[i]) << '\n';
  }
}

EdgeScores read_scores_csv(const RecGraph& graph, std::istream& in) {
  EdgeScores scores;
  scores.values.assign(graph.edge_count(),
                       std::numeric_limits<double>::quiet_NaN());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (lineno == 1 && line.rfind("src,", 0) == 0) continue;
    std::vector<std::string_view> f;
    std::string_view view = line;
    for (std::size_t start = 0;;) {
      auto pos = view.find(',', start);
      f.push_back(view.substr(start, pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (f.size() != 4) {
      throw ParseError("scores line " + std::to_string(lineno) +
                       ": expected src,dst,label,score");
    }
    auto src = static_cast<ItemId>(parse_uint(f[0]));
    auto dst = static_cast<ItemId>(parse_uint(f[1]));
    auto idx = graph.find_edge(src, dst);
    if (!idx) {
      throw ParseError("scores line " + std::to_string(lineno) +
                       ": no edge (" + std::string(f[0]) + ", " +
                       std::string(f[1]) + ") in the graph");
    }
    scores.values[*idx] = parse_double(f[3]);
  }
  return scores;
}

Partition Partition::from_labels(const std::vector<std::uint32_t>& labels) {
  Partition p;
  p.community.resize(labels.size());
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = renumber.emplace(
        labels[v], static_cast<std::uint32_t>(p.sizes.size()));
    if (inserted) p.sizes.push_back(0);
    p.community[v] = it->second;
    ++p.sizes[it->second];
  }
  return p;
}

namespace {

// Weighted undirected graph for one Louvain level; self-loop weight is kept
// apart from the neighbor lists.
struct LevelGraph {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> self_loop;

  std::size_t size() const { return adj.size(); }
  double degree(std::uint32_t v) const {
    double d = 2.0 * self_loop[v];
    for (auto [w, x] : adj[v]) d += x;
    return d;
  }
};

LevelGraph base_level(const RecGraph& graph) {
  const Undirected u = project(graph);
  LevelGraph lg;
  lg.adj.resize(graph.node_count());
  lg.self_loop.assign(graph.node_count(), 0.0);
  for (ItemId v = 0; v < graph.node_count(); ++v) {
    for (std::uint32_t a = u.offsets[v]; a < u.offsets[v + 1]; ++a) {
      lg.adj[v].emplace_back(u.neighbor[a], u.weight[u.link[a]]);
    }
  }
  return lg;
}

// One round of local moves. Returns the community of every node and whether
// anything moved.
bool local_moves(const LevelGraph& g, double resolution, Rng& rng,
                 std::vector<std::uint32_t>& comm) {
  const std::size_t n = g.size();
  std::vector<double> k(n);
  double two_m = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    k[v] = g.degree(v);
    two_m += k[v];
  }
  comm.resize(n);
  std::iota(comm.begin(), comm.end(), 0u);
  if (two_m <= 0) return false;

  std::vector<double> tot(k);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(std::span(order));

  std::vector<double> link_to(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool moved_any = false;
  constexpr double kMinGain = 1e-12;
  for (int pass = 0; pass < 1000; ++pass) {
    bool moved = false;
    for (std::uint32_t v : order) {
      const std::uint32_t own = comm[v];
      touched.clear();
      for (auto [w, x] : g.adj[v]) {
        std::uint32_t c = comm[w];
        if (link_to[c] == 0.0) touched.push_back(c);
        link_to[c] += x;
      }
      tot[own] -= k[v];
      const double scale = resolution * k[v] / two_m;
      std::uint32_t best = own;
      double best_gain = link_to[own] - scale * tot[own];
      for (std::uint32_t c : touched) {
        double gain = link_to[c] - scale * tot[c];
        if (gain > best_gain + kMinGain) {
          best = c;
          best_gain = gain;
        }
      }
      tot[best] += k[v];
      comm[v] = best;
      if (best != own) moved = true;
      for (std::uint32_t c : touched) link_to[c] = 0.0;
    }
    if (!moved) break;
    moved_any = true;
  }
  return moved_any;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::uint32_t>& comm,
                     std::size_t communities) {
  LevelGraph out;
  out.adj.resize(communities);
  out.self_loop.assign(communities, 0.0);
  std::vector<std::unordered_map<std::uint32_t, double>> acc(communities);
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const std::uint32_t cv = comm[v];
    out.self_loop[cv] += g.self_loop[v];
    for (auto [w, x] : g.adj[v]) {
      const std::uint32_t cw = comm[w];
      if (cv == cw) {
        // Every internal link is seen from both ends.
        out.self_loop[cv] += x / 2.0;
      } else {
        acc[cv][cw] += x;
      }
    }
  }
  for (std::uint32_t c = 0; c < communities; ++c) {
    out.adj[c].assign(acc[c].begin(), acc[c].end());
    std::sort(out.adj[c].begin(), out.adj[c].end());
  }
  return out;
}

}  // namespace

Partition detect_communities(const RecGraph& graph, double resolution,
                             std::uint64_t seed) {
  if (!(resolution > 0)) throw InvalidParams("resolution must be > 0");
  Rng rng(seed);
  LevelGraph level = base_level(graph);
  std::vector<std::uint32_t> membership(graph.node_count());
  std::iota(membership.begin(), membership.end(), 0u);

  while (true) {
    std::vector<std::uint32_t> comm;
    if (!local_moves(level, resolution, rng, comm)) break;
    Partition step = Partition::from_labels(comm);
    for (auto& m : membership) m = step.community[m];
    if (step.community_count() == level.size()) break;
    level = aggregate(level, step.community, step.community_count());
  }
  return Partition::from_labels(membership);
}

double modularity(const RecGraph& graph, const Partition& partition,
                  double resolution) {
  const Undirected u = project(graph);
  std::vector<double> internal(partition.community_count(), 0.0);
  std::vector<double> tot(partition.community_count(), 0.0);
  double two_m = 0;
  for (ItemId v = 0; v < graph.node_count(); ++v) {
    for (std::uint32_t a = u.offsets[v]; a < u.offsets[v + 1]; ++a) {
      const double x = u.weight[u.link[a]];
      two_m += x;
      tot[partition.community[v]] += x;
      if (partition.community[v] == partition.community[u.neighbor[a]]) {
        internal[partition.community[v]] += x;
      }
    }
  }
  if (two_m == 0) return 0.0;
  double q = 0;
  for (std::size_t c = 0; c < tot.size(); ++c) {
    q += internal[c] / two_m - resolution * (tot[c] / two_m) * (tot[c] / two_m);
  }
  return q;
}

std::size_t large_community_count(const Partition& partition,
                                  const RecGraph& graph, double fraction) {
  if (!(fraction > 0 && fraction <= 1)) {
    throw InvalidParams("fraction must lie in (0, 1]");
  }
  const double threshold = fraction * static_cast<double>(graph.node_count());
  std::size_t count = 0;
  for (std::size_t s : partition.sizes) {
    if (static_cast<double>(s) >= threshold) ++count;
  }
  return count;
}

}  // namespace recograph
