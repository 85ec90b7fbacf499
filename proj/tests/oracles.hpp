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

// Brute-force reference computations for tests. Nothing here calls into the
// library's algorithms: they only share the plain data types.

#ifndef RECOGRAPH_TESTS_ORACLES_HPP_
#define RECOGRAPH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace recograph::oracle {

// Exhaustive sort of every other point by (distance, id).
inline std::vector<std::uint32_t> knn(const std::vector<std::vector<double>>& pts,
                                      std::uint32_t query, std::size_t k) {
  std::vector<std::pair<double, std::uint32_t>> all;
  for (std::uint32_t j = 0; j < pts.size(); ++j) {
    if (j == query) continue;
    double s = 0;
    for (std::size_t c = 0; c < pts[query].size(); ++c) {
      s += (pts[query][c] - pts[j][c]) * (pts[query][c] - pts[j][c]);
    }
    all.emplace_back(std::sqrt(s), j);
  }
  std::sort(all.begin(), all.end());
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(all[i].second);
  return out;
}

using UEdge = std::pair<std::uint32_t, std::uint32_t>;  // first < second

inline UEdge undirected(std::uint32_t a, std::uint32_t b) {
  return a < b ? UEdge{a, b} : UEdge{b, a};
}

// Enumerates every shortest path between every ordered pair (s, t), s != t,
// of the undirected graph and credits each edge on a path with
// 1 / (number of shortest s-t paths).
inline std::map<UEdge, double> betweenness(std::size_t n,
                                           const std::set<UEdge>& edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::map<UEdge, double> score;
  for (const auto& e : edges) score[e] = 0.0;

  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, kInf);
    std::vector<std::uint32_t> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto w : adj[queue[h]]) {
        if (dist[w] == kInf) {
          dist[w] = dist[queue[h]] + 1;
          queue.push_back(w);
        }
      }
    }
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t == s || dist[t] == kInf) continue;
      std::vector<std::vector<std::uint32_t>> paths;
      std::vector<std::uint32_t> path{s};
      // Depth-first walk along strictly increasing distance, kept only when
      // it lands on t after dist[t] steps.
      auto walk = [&](auto&& self) -> void {
        std::uint32_t v = path.back();
        if (path.size() - 1 == dist[t]) {
          if (v == t) paths.push_back(path);
          return;
        }
        for (auto w : adj[v]) {
          if (dist[w] == dist[v] + 1) {
            path.push_back(w);
            self(self);
            path.pop_back();
          }
        }
      };
      walk(walk);
      const double share = 1.0 / static_cast<double>(paths.size());
      for (const auto& p : paths) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          score[undirected(p[i], p[i + 1])] += share;
        }
      }
    }
  }
  return score;
}

// Floyd-Warshall hop distances on a directed graph; kInf when unreachable.
inline std::vector<std::vector<std::size_t>> all_pairs_hops(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : arcs) d[a][b] = std::min<std::size_t>(d[a][b], 1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline constexpr std::size_t kUnreachable =
    std::numeric_limits<std::size_t>::max() / 4;

// Random connected undirected graph: a random spanning tree plus `extra`
// random chords.
inline std::set<UEdge> random_connected(std::size_t n, std::size_t extra,
                                        std::mt19937_64& rng) {
  std::set<UEdge> edges;
  for (std::uint32_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::uint32_t> parent(0, v - 1);
    edges.insert(undirected(v, parent(rng)));
  }
  std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(n - 1));
  for (std::size_t i = 0; i < extra * 4 && edges.size() < n - 1 + extra; ++i) {
    auto a = any(rng), b = any(rng);
    if (a != b) edges.insert(undirected(a, b));
  }
  return edges;
}

// Newman modularity straight from the definition:
// Q = 1/2m * sum_ij [A_ij - res * k_i k_j / 2m] delta(c_i, c_j).
inline double modularity(const std::vector<std::vector<double>>& a,
                         const std::vector<std::uint32_t>& comm,
                         double resolution) {
  const std::size_t n = a.size();
  std::vector<double> k(n, 0.0);
  double two_m = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += a[i][j];
      two_m += a[i][j];
    }
  if (two_m == 0) return 0.0;
  double q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (comm[i] == comm[j]) q += a[i][j] - resolution * k[i] * k[j] / two_m;
  return q / two_m;
}

}  // namespace recograph::oracle

#endif  // RECOGRAPH_TESTS_ORACLES_HPP_
