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

#include "recograph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "recograph/detect.hpp"
#include "recograph/error.hpp"
#include "recograph/graph.hpp"
#include "recograph/io.hpp"
#include "recograph/observer.hpp"
#include "recograph/rng.hpp"
#include "recograph/synth.hpp"
#include "recograph/topology.hpp"

namespace recograph::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kManifestName = "manifest.txt";

// Ordered key=value lines; keys may repeat (multi-valued options).
using Entries = std::vector<std::pair<std::string, std::string>>;

class Summary {
 public:
  template <typename T>
  void add(std::string key, const T& value) {
    std::ostringstream os;
    if constexpr (std::is_floating_point_v<T>) {
      os << format_double(value);
    } else {
      os << value;
    }
    entries_.emplace_back(std::move(key), os.str());
  }
  std::string str() const {
    std::string s;
    for (const auto& [k, v] : entries_) s += k + "=" + v + "\n";
    return s;
  }

 private:
  Entries entries_;
};

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const InvalidEdge*>(&e)) return "InvalidEdge";
  if (dynamic_cast<const LabelConflict*>(&e)) return "LabelConflict";
  if (dynamic_cast<const InvalidParams*>(&e)) return "InvalidParams";
  if (dynamic_cast<const IncompleteScores*>(&e)) return "IncompleteScores";
  if (dynamic_cast<const DegenerateTruth*>(&e)) return "DegenerateTruth";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  if (dynamic_cast<const CrawlError*>(&e)) return "CrawlError";
  if (dynamic_cast<const OracleError*>(&e)) return "OracleError";
  return "Error";
}

std::optional<fs::path> sidecar_for(const fs::path& graph,
                                    const std::string& explicit_names) {
  if (!explicit_names.empty()) return fs::path(explicit_names);
  fs::path candidate = graph.string() + ".names";
  if (fs::exists(candidate)) return candidate;
  return std::nullopt;
}

RecGraph load_input(const std::string& path, const std::string& names = {}) {
  return load_graph(path, sidecar_for(path, names));
}

std::string csv_of(const std::function<void(std::ostream&)>& writer) {
  std::ostringstream os;
  writer(os);
  return os.str();
}

SourceSelection parse_sources(const std::string& text, std::uint64_t seed) {
  if (text == "all") return AllSources{};
  return SampledSources{parse_uint(text), seed};
}

// Resolved option values of the selected subcommand, excluding --help and
// --manifest. Options neither given nor defaulted are omitted; flags always
// appear as true/false.
Entries resolved_options(const CLI::App& sub) {
  Entries entries;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help" || name == "manifest") continue;
    const bool flag = opt->get_expected_min() == 0;
    if (opt->count() > 0) {
      for (const std::string& r : opt->results()) entries.emplace_back(name, r);
    } else if (flag) {
      entries.emplace_back(name, "false");
    } else if (!opt->get_default_str().empty()) {
      entries.emplace_back(name, opt->get_default_str());
    }
  }
  return entries;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const Entries& entries) {
  std::string text = "# recograph manifest\ncommand=" + command + "\n";
  for (const auto& [k, v] : entries) text += k + "=" + v + "\n";
  write_text_file(dir / kManifestName, text);
}

// Expands `--manifest FILE` into the recorded options. Options also given on
// the command line win over the recorded ones.
std::vector<std::string> expand_manifest(const std::vector<std::string>& args) {
  auto it = std::find_if(args.begin(), args.end(), [](const std::string& a) {
    return a == "--manifest" || a.rfind("--manifest=", 0) == 0;
  });
  if (it == args.end()) return args;

  std::string path;
  std::vector<std::string> rest(args.begin(), it);
  if (*it == "--manifest") {
    if (std::next(it) == args.end()) throw ParseError("--manifest needs a file");
    path = *std::next(it);
    rest.insert(rest.end(), std::next(it, 2), args.end());
  } else {
    path = it->substr(std::string("--manifest=").size());
    rest.insert(rest.end(), std::next(it), args.end());
  }

  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path);
  std::string command;
  Entries recorded;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("bad manifest line: " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "command") {
      command = value;
    } else {
      recorded.emplace_back(std::move(key), std::move(value));
    }
  }
  if (command.empty()) throw ParseError("manifest has no command");
  if (rest.empty() || rest.front().rfind("-", 0) == 0) {
    rest.insert(rest.begin(), command);
  } else if (rest.front() != command) {
    throw InvalidParams("manifest records '" + command + "', not '" +
                        rest.front() + "'");
  }

  auto overridden = [&](const std::string& key) {
    return std::any_of(rest.begin() + 1, rest.end(), [&](const std::string& a) {
      return a == "--" + key || a.rfind("--" + key + "=", 0) == 0;
    });
  };
  std::vector<std::string> out{rest.front()};
  for (const auto& [key, value] : recorded) {
    if (!overridden(key)) out.push_back("--" + key + "=" + value);
  }
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  ModelParams params;
  std::string params_file;
  std::string out;
  bool no_features = false;
  std::size_t threads = 0;
};

void add_generate(CLI::App& app, GenerateArgs& a) {
  auto* sub = app.add_subcommand(
      "generate", "Generate a labeled synthetic recommendation graph");
  sub->add_option("--params", a.params_file,
                  "Model parameter file (key=value); flags override it");
  sub->add_option("--n", a.params.n, "Number of items")->capture_default_str();
  sub->add_option("--k-r", a.params.k_r, "Official out-degree")
      ->capture_default_str();
  sub->add_option("--k-b", a.params.k_b, "Biased out-degree")
      ->capture_default_str();
  sub->add_option("--d", a.params.d, "Official feature dimension")
      ->capture_default_str();
  sub->add_option("--d-hidden", a.params.d_hidden, "Hidden feature dimension")
      ->capture_default_str();
  sub->add_option("--overlap", a.params.overlap,
                  "Leading coordinates shared by official and hidden features")
      ->capture_default_str();
  sub->add_option("--seed", a.params.seed, "Feature RNG seed")
      ->capture_default_str();
  sub->add_option("--out", a.out, "Output directory")->required();
  sub->add_flag("--no-features", a.no_features, "Skip features.csv");
  sub->add_option("--threads", a.threads, "Worker threads (0 = auto)")
      ->capture_default_str();
}

ModelParams resolve_params(const CLI::App& sub, const GenerateArgs& a) {
  if (a.params_file.empty()) return a.params;
  ModelParams p = model_params_from(load_key_values(a.params_file));
  auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
  if (given("--n")) p.n = a.params.n;
  if (given("--k-r")) p.k_r = a.params.k_r;
  if (given("--k-b")) p.k_b = a.params.k_b;
  if (given("--d")) p.d = a.params.d;
  if (given("--d-hidden")) p.d_hidden = a.params.d_hidden;
  if (given("--overlap")) p.overlap = a.params.overlap;
  if (given("--seed")) p.seed = a.params.seed;
  return p;
}

void run_generate(const CLI::App& sub, const GenerateArgs& a,
                  std::ostream& out) {
  const ModelParams params = resolve_params(sub, a);
  params.validate();
  SyntheticInstance inst = build_biased_graph(params, a.threads);
  const fs::path dir(a.out);
  fs::create_directories(dir);
  save_graph(inst.graph, dir / "graph.tsv");
  write_text_file(dir / "model.conf", csv_of([&](std::ostream& os) {
                    write_key_values(to_key_values(params), os);
                  }));
  if (!a.no_features) {
    write_text_file(dir / "features.csv", csv_of([&](std::ostream& os) {
                      write_features_csv(inst.features, os);
                    }));
  }
  Summary s;
  s.add("nodes", inst.graph.node_count());
  s.add("edges", inst.graph.edge_count());
  s.add("official_edges", inst.graph.count_label(EdgeLabel::kOfficial));
  s.add("biased_edges", inst.graph.count_label(EdgeLabel::kBiased));
  out << s.str();
}

// ------------------------------------------------------------------- crawl

struct CrawlArgs {
  std::string oracle;
  std::string seed_item;
  std::size_t depth = 4;
  std::string names;
  std::string out;
};

void add_crawl(CLI::App& app, CrawlArgs& a) {
  auto* sub = app.add_subcommand(
      "crawl", "Breadth-first observation of a recommender from a seed item");
  sub->add_option("--oracle", a.oracle,
                  "file:<crawl dump> or synth:<model parameter file>")
      ->required();
  sub->add_option("--seed-item", a.seed_item,
                  "Seed item name or id (default: the dump's seed, else 0)");
  sub->add_option("--depth", a.depth, "Hop limit h")->capture_default_str();
  sub->add_option("--names", a.names,
                  "Names sidecar for a file oracle (default <dump>.names)");
  sub->add_option("--out", a.out, "Output directory")->required();
}

void run_crawl(const CrawlArgs& a, std::ostream& out) {
  std::optional<GraphOracle> oracle;
  if (a.oracle.rfind("file:", 0) == 0) {
    fs::path dump = a.oracle.substr(5);
    oracle.emplace(GraphOracle::from_dump(dump, sidecar_for(dump, a.names)));
  } else if (a.oracle.rfind("synth:", 0) == 0) {
    ModelParams p = model_params_from(load_key_values(a.oracle.substr(6)));
    oracle.emplace(build_biased_graph(p).graph);
  } else {
    throw InvalidParams("--oracle must be file:<path> or synth:<config>");
  }
  std::string seed_name = a.seed_item;
  if (seed_name.empty()) seed_name = std::string(oracle->graph().meta("seed"));
  if (seed_name.empty()) seed_name = "0";
  const ItemId seed = oracle->resolve(seed_name);

  const fs::path dir(a.out);
  fs::create_directories(dir);
  ObservedGraph obs;
  std::string failure;
  try {
    obs = crawl(*oracle, seed, a.depth);
  } catch (const CrawlError& e) {
    obs = e.partial();
    failure = e.what();
  }
  save_graph(obs.graph, dir / "observed.tsv");

  Summary s;
  s.add("seed", seed_name);
  s.add("depth", obs.depth);
  s.add("fanout", obs.fanout);
  s.add("nodes", obs.graph.node_count());
  s.add("edges", obs.graph.edge_count());
  s.add("queries", obs.queries);
  std::string frontier;
  for (std::size_t f : obs.frontier_sizes) {
    frontier += (frontier.empty() ? "" : ",") + std::to_string(f);
  }
  s.add("frontier_sizes", frontier);
  s.add("redundancy", redundancy(obs));
  s.add("biased_edges", obs.graph.count_label(EdgeLabel::kBiased));
  if (!failure.empty()) s.add("partial", failure);
  write_text_file(dir / "crawl_summary.txt", s.str());
  out << s.str();
  if (!failure.empty()) throw OracleError(failure);
}

// ---------------------------------------------------------------- topology

struct TopologyArgs {
  std::string graph;
  std::string names;
  std::string out;
  std::string sources = "all";
  std::uint64_t seed = 0;
  double resolution = 1.0;
  double community_fraction = 0.01;
  std::size_t degree_threshold = 100;
  std::size_t threads = 0;
};

void add_topology(CLI::App& app, TopologyArgs& a) {
  auto* sub = app.add_subcommand(
      "topology", "Path lengths, edge betweenness and communities of a graph");
  sub->add_option("--graph", a.graph, "Edge-list file")->required();
  sub->add_option("--names", a.names, "Names sidecar (default <graph>.names)");
  sub->add_option("--out", a.out, "Output directory")->required();
  sub->add_option("--sources", a.sources,
                  "Path-length sources: 'all' or a sample size")
      ->capture_default_str();
  sub->add_option("--seed", a.seed, "Global seed")->capture_default_str();
  sub->add_option("--resolution", a.resolution, "Modularity resolution")
      ->capture_default_str();
  sub->add_option("--community-fraction", a.community_fraction,
                  "Minimum community size as a fraction of the node count")
      ->capture_default_str();
  sub->add_option("--degree-threshold", a.degree_threshold,
                  "Report nodes with more in-neighbors than this")
      ->capture_default_str();
  sub->add_option("--threads", a.threads, "Worker threads (0 = auto)")
      ->capture_default_str();
}

void run_topology(const TopologyArgs& a, std::ostream& out) {
  const RecGraph g = load_input(a.graph, a.names);
  const fs::path dir(a.out);
  fs::create_directories(dir);

  auto hist = path_length_distribution(
      g, parse_sources(a.sources, derive_seed(a.seed, "path-sample")),
      a.threads);
  write_text_file(dir / "path_lengths.csv",
                  csv_of([&](std::ostream& os) { write_histogram_csv(hist, os); }));

  BetweennessOptions bo;
  bo.threads = a.threads;
  EdgeScores scores = edge_betweenness(g, bo);
  write_text_file(dir / "betweenness.csv", csv_of([&](std::ostream& os) {
                    write_scores_csv(g, scores, os);
                  }));

  Partition part =
      detect_communities(g, a.resolution, derive_seed(a.seed, "communities"));
  write_text_file(dir / "communities.csv", csv_of([&](std::ostream& os) {
                    os << "id,community\n";
                    for (ItemId v = 0; v < g.node_count(); ++v) {
                      os << v << ',' << part.community[v] << '\n';
                    }
                  }));

  Summary s;
  s.add("nodes", g.node_count());
  s.add("edges", g.edge_count());
  s.add("mean_path_length", hist.mean_finite_distance());
  s.add("reachable_pairs", hist.reachable_pairs());
  s.add("unreachable_pairs", hist.unreachable_pairs);
  s.add("communities", part.community_count());
  s.add("large_communities",
        large_community_count(part, g, a.community_fraction));
  s.add("modularity", modularity(g, part, a.resolution));
  s.add("in_degree_above_threshold", in_degree_tail_count(g, a.degree_threshold));
  write_text_file(dir / "topology_summary.txt", s.str());
  out << s.str();
}

// ------------------------------------------------------------------ detect

struct DetectArgs {
  std::vector<std::string> graphs;
  std::vector<std::string> scores;
  std::string truth;
  std::string out;
  double x = 0.125;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
};

void add_detect(CLI::App& app, DetectArgs& a) {
  auto* sub = app.add_subcommand(
      "detect",
      "Rank edges by betweenness and evaluate against Biased labels (ROC)");
  sub->add_option("--graph", a.graphs,
                  "Labeled edge-list file; repeat to average ROC curves")
      ->required();
  sub->add_option("--scores", a.scores,
                  "Precomputed src,dst,label,score CSV per graph "
                  "(default: compute edge betweenness)");
  sub->add_option("--truth", a.truth,
                  "Edge list whose labels override the graphs' labels");
  sub->add_option("--x", a.x, "Ranking fraction for recall")
      ->capture_default_str();
  sub->add_option("--seed", a.seed, "Global seed")->capture_default_str();
  sub->add_option("--out", a.out, "Output directory")->required();
  sub->add_option("--threads", a.threads, "Worker threads (0 = auto)")
      ->capture_default_str();
}

struct Evaluation {
  RocCurve curve;
  RocCurve baseline;
  RocCurve best;
  double recall = 0;
  double baseline_recall = 0;
};

Evaluation evaluate(const RecGraph& g, const EdgeScores& scores, double x,
                    std::uint64_t baseline_seed) {
  Evaluation ev;
  EdgeRanking ranking = rank_edges(g, scores);
  ev.curve = roc(ranking);
  ev.recall = recall_at_fraction(ranking, x);
  EdgeRanking base = random_baseline(g, baseline_seed);
  ev.baseline = roc(base);
  ev.baseline_recall = recall_at_fraction(base, x);
  ev.best = perfect_curve(ev.curve.positives, ev.curve.negatives);
  return ev;
}

void write_evaluation(const fs::path& dir, const std::string& suffix,
                      const Evaluation& ev, double x) {
  write_text_file(dir / ("roc" + suffix + ".csv"),
                  csv_of([&](std::ostream& os) { write_roc_csv(ev.curve, os); }));
  write_text_file(dir / ("baseline_roc" + suffix + ".csv"),
                  csv_of([&](std::ostream& os) { write_roc_csv(ev.baseline, os); }));
  write_text_file(dir / ("thmax_roc" + suffix + ".csv"),
                  csv_of([&](std::ostream& os) { write_roc_csv(ev.best, os); }));
  write_text_file(dir / ("recall" + suffix + ".csv"),
                  csv_of([&](std::ostream& os) { write_recall_csv(x, ev.recall, os); }));
}

RecGraph with_optional_truth(RecGraph g, const std::string& truth) {
  if (truth.empty()) return g;
  return apply_truth(g, load_input(truth));
}

void run_detect(const DetectArgs& a, std::ostream& out) {
  if (!a.scores.empty() && a.scores.size() != a.graphs.size()) {
    throw InvalidParams("give one --scores file per --graph");
  }
  const fs::path dir(a.out);
  fs::create_directories(dir);
  std::vector<Evaluation> evals;
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    RecGraph g = with_optional_truth(load_input(a.graphs[i]), a.truth);
    EdgeScores scores;
    if (a.scores.empty()) {
      BetweennessOptions bo;
      bo.threads = a.threads;
      scores = edge_betweenness(g, bo);
    } else {
      std::ifstream in(a.scores[i]);
      if (!in) throw IoError("cannot open " + a.scores[i]);
      scores = read_scores_csv(g, in);
    }
    evals.push_back(evaluate(
        g, scores, a.x,
        derive_seed(a.seed, "baseline") + static_cast<std::uint64_t>(i)));
  }

  Evaluation combined;
  if (evals.size() == 1) {
    combined = evals.front();
  } else {
    std::vector<RocCurve> curves, baselines, bests;
    for (std::size_t i = 0; i < evals.size(); ++i) {
      write_evaluation(dir, "_" + std::to_string(i), evals[i], a.x);
      curves.push_back(evals[i].curve);
      baselines.push_back(evals[i].baseline);
      bests.push_back(evals[i].best);
      combined.recall += evals[i].recall / static_cast<double>(evals.size());
      combined.baseline_recall +=
          evals[i].baseline_recall / static_cast<double>(evals.size());
    }
    combined.curve = average_roc(curves);
    combined.baseline = average_roc(baselines);
    combined.best = average_roc(bests);
  }
  write_evaluation(dir, "", combined, a.x);

  Summary s;
  s.add("inputs", evals.size());
  s.add("positives", combined.curve.positives);
  s.add("negatives", combined.curve.negatives);
  s.add("auc", combined.curve.auc);
  s.add("baseline_auc", combined.baseline.auc);
  s.add("thmax_auc", combined.best.auc);
  s.add("x", a.x);
  s.add("recall_at_x", combined.recall);
  s.add("baseline_recall_at_x", combined.baseline_recall);
  write_text_file(dir / "detect_summary.txt", s.str());
  out << s.str();
}

// ---------------------------------------------------------------- pipeline

struct PipelineArgs {
  std::string graph;
  std::string names;
  std::string truth;
  std::string out;
  double x = 0.125;
  std::uint64_t seed = 0;
  std::string sources = "all";
  double resolution = 1.0;
  double community_fraction = 0.01;
  std::size_t threads = 0;
};

void add_pipeline(CLI::App& app, PipelineArgs& a) {
  auto* sub = app.add_subcommand(
      "pipeline",
      "Betweenness ranking, ROC, recall and path lengths with and without "
      "Biased edges");
  sub->add_option("--graph", a.graph, "Edge-list file")->required();
  sub->add_option("--names", a.names, "Names sidecar (default <graph>.names)");
  sub->add_option("--truth", a.truth,
                  "Edge list whose labels override the graph's labels");
  sub->add_option("--out", a.out, "Output directory")->required();
  sub->add_option("--x", a.x, "Ranking fraction for recall")
      ->capture_default_str();
  sub->add_option("--seed", a.seed, "Global seed")->capture_default_str();
  sub->add_option("--sources", a.sources,
                  "Path-length sources: 'all' or a sample size")
      ->capture_default_str();
  sub->add_option("--resolution", a.resolution, "Modularity resolution")
      ->capture_default_str();
  sub->add_option("--community-fraction", a.community_fraction,
                  "Minimum community size as a fraction of the node count")
      ->capture_default_str();
  sub->add_option("--threads", a.threads, "Worker threads (0 = auto)")
      ->capture_default_str();
}

void run_pipeline(const PipelineArgs& a, std::ostream& out) {
  const RecGraph g =
      with_optional_truth(load_input(a.graph, a.names), a.truth);
  // Fail before any heavy work when the labels cannot support a ROC.
  const std::size_t positives = g.count_label(EdgeLabel::kBiased);
  if (positives == 0 || positives == g.edge_count()) {
    throw DegenerateTruth("the graph has " + std::to_string(positives) +
                          " Biased edges out of " +
                          std::to_string(g.edge_count()));
  }
  const fs::path dir(a.out);
  fs::create_directories(dir);

  BetweennessOptions bo;
  bo.threads = a.threads;
  const EdgeScores scores = edge_betweenness(g, bo);
  write_text_file(dir / "betweenness.csv", csv_of([&](std::ostream& os) {
                    write_scores_csv(g, scores, os);
                  }));
  const Evaluation ev =
      evaluate(g, scores, a.x, derive_seed(a.seed, "baseline"));
  write_evaluation(dir, "", ev, a.x);

  const RecGraph stripped = remove_labeled(g, EdgeLabel::kBiased);
  const SourceSelection sel =
      parse_sources(a.sources, derive_seed(a.seed, "path-sample"));
  const auto full = path_length_distribution(g, sel, a.threads);
  const auto unbiased = path_length_distribution(stripped, sel, a.threads);
  write_text_file(dir / "path_lengths_full.csv",
                  csv_of([&](std::ostream& os) { write_histogram_csv(full, os); }));
  write_text_file(dir / "path_lengths_unbiased.csv", csv_of([&](std::ostream& os) {
                    write_histogram_csv(unbiased, os);
                  }));

  const std::uint64_t cseed = derive_seed(a.seed, "communities");
  const Partition pf = detect_communities(g, a.resolution, cseed);
  const Partition pu = detect_communities(stripped, a.resolution, cseed);

  Summary s;
  s.add("graph", a.graph);
  s.add("nodes", g.node_count());
  s.add("edges", g.edge_count());
  s.add("biased_edges", ev.curve.positives);
  s.add("auc", ev.curve.auc);
  s.add("baseline_auc", ev.baseline.auc);
  s.add("thmax_auc", ev.best.auc);
  s.add("x", a.x);
  s.add("recall_at_x", ev.recall);
  s.add("baseline_recall_at_x", ev.baseline_recall);
  s.add("mean_path_length_full", full.mean_finite_distance());
  s.add("mean_path_length_unbiased", unbiased.mean_finite_distance());
  s.add("unreachable_pairs_full", full.unreachable_pairs);
  s.add("unreachable_pairs_unbiased", unbiased.unreachable_pairs);
  s.add("large_communities_full",
        large_community_count(pf, g, a.community_fraction));
  s.add("large_communities_unbiased",
        large_community_count(pu, stripped, a.community_fraction));
  write_text_file(dir / "summary.txt", s.str());
  out << s.str();
}

// ------------------------------------------------------------------ report

struct ReportArgs {
  std::string graph;
  std::string names;
  std::string out;
  std::size_t degree_threshold = 100;
  bool communities = false;
  double resolution = 1.0;
  double community_fraction = 0.01;
  std::uint64_t seed = 0;
};

void add_report(CLI::App& app, ReportArgs& a) {
  auto* sub = app.add_subcommand(
      "report", "Degree, label and crawl statistics of a graph");
  sub->add_option("--graph", a.graph, "Edge-list file")->required();
  sub->add_option("--names", a.names, "Names sidecar (default <graph>.names)");
  sub->add_option("--out", a.out, "Output directory")->required();
  sub->add_option("--degree-threshold", a.degree_threshold,
                  "Count nodes with more in-neighbors than this")
      ->capture_default_str();
  sub->add_flag("--communities", a.communities,
                "Also count large modularity communities");
  sub->add_option("--resolution", a.resolution, "Modularity resolution")
      ->capture_default_str();
  sub->add_option("--community-fraction", a.community_fraction,
                  "Minimum community size as a fraction of the node count")
      ->capture_default_str();
  sub->add_option("--seed", a.seed, "Global seed")->capture_default_str();
}

void run_report(const ReportArgs& a, std::ostream& out) {
  const RecGraph g = load_input(a.graph, a.names);
  Summary s;
  s.add("nodes", g.node_count());
  s.add("edges", g.edge_count());
  s.add("official_edges", g.count_label(EdgeLabel::kOfficial));
  s.add("biased_edges", g.count_label(EdgeLabel::kBiased));
  s.add("unknown_edges", g.count_label(EdgeLabel::kUnknown));
  std::uint64_t total_weight = 0;
  for (const Edge& e : g.edges()) total_weight += e.weight;
  s.add("total_weight", total_weight);
  std::size_t max_out = 0, max_in = 0, sinks = 0;
  for (ItemId v = 0; v < g.node_count(); ++v) {
    max_out = std::max(max_out, g.out_degree(v));
    max_in = std::max(max_in, g.in_degree(v));
    if (g.out_degree(v) == 0) ++sinks;
  }
  s.add("max_out_degree", max_out);
  s.add("max_in_degree", max_in);
  s.add("nodes_without_out_edges", sinks);
  s.add("degree_threshold", a.degree_threshold);
  s.add("in_degree_above_threshold", in_degree_tail_count(g, a.degree_threshold));
  if (!g.meta("depth").empty() && !g.meta("fanout").empty()) {
    const auto depth = parse_uint(g.meta("depth"));
    const auto fanout = parse_uint(g.meta("fanout"));
    s.add("depth", depth);
    s.add("fanout", fanout);
    if (fanout >= 2) s.add("tree_bound", tree_bound(fanout, depth));
    s.add("redundancy", redundancy(g.node_count(), fanout, depth));
  }
  if (a.communities) {
    Partition p = detect_communities(g, a.resolution,
                                     derive_seed(a.seed, "communities"));
    s.add("communities", p.community_count());
    s.add("large_communities", large_community_count(p, g, a.community_fraction));
  }
  const fs::path dir(a.out);
  fs::create_directories(dir);
  write_text_file(dir / "report.txt", s.str());
  out << s.str();
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "recograph: recommendation graphs, synthetic bias models and "
      "topology-based bias detection"};
  app.require_subcommand(1);
  app.footer(
      "Every subcommand writes manifest.txt into its --out directory; pass it "
      "back with `--manifest <file>` (other flags override it) to reproduce "
      "the run. RECOGRAPH_THREADS caps internal parallelism (0 = auto).");

  GenerateArgs gen;
  CrawlArgs crawl_args;
  TopologyArgs topo;
  DetectArgs det;
  PipelineArgs pipe;
  ReportArgs rep;
  add_generate(app, gen);
  add_crawl(app, crawl_args);
  add_topology(app, topo);
  add_detect(app, det);
  add_pipeline(app, pipe);
  add_report(app, rep);
  std::string manifest_help;
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("--manifest", manifest_help,
                    "Replay the options recorded in a manifest file");
  }

  try {
    std::vector<std::string> args = expand_manifest(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const Error& e) {
    err << "error [" << error_kind(e) << "]: " << e.what() << '\n';
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    std::string out_dir;
    if (command == "generate") {
      run_generate(*sub, gen, out);
      out_dir = gen.out;
    } else if (command == "crawl") {
      run_crawl(crawl_args, out);
      out_dir = crawl_args.out;
    } else if (command == "topology") {
      run_topology(topo, out);
      out_dir = topo.out;
    } else if (command == "detect") {
      run_detect(det, out);
      out_dir = det.out;
    } else if (command == "pipeline") {
      run_pipeline(pipe, out);
      out_dir = pipe.out;
    } else {
      run_report(rep, out);
      out_dir = rep.out;
    }
    write_manifest(out_dir, command, resolved_options(*sub));
  } catch (const std::exception& e) {
    err << "error [" << error_kind(e) << "]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace recograph::cli
