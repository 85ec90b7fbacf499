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

// Flat-file formats.
//
// Edge list (TSV, UTF-8):
//
//   #meta key=value [key=value ...]
//   # any other comment
//   src<TAB>dst<TAB>label<TAB>weight
//
// `label` is one of official|biased|unknown, `weight` >= 1. The label and
// weight columns may be omitted (unknown, 1). The reserved metadata key
// `nodes` records the node count so isolated trailing nodes survive a round
// trip. Repeated (src, dst) lines accumulate weight.
//
// Names sidecar (TSV): `id<TAB>name`, one line per named node.
//
// Config: `key=value` lines, `#` comments, surrounding blanks trimmed.

#ifndef RECOGRAPH_IO_HPP_
#define RECOGRAPH_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recograph/graph.hpp"

namespace recograph {

using NameTable = std::vector<std::pair<ItemId, std::string>>;

RecGraph read_edge_list(std::istream& in, const NameTable& names = {});
void write_edge_list(const RecGraph& graph, std::ostream& out);

NameTable read_names(std::istream& in);
// Writes nothing when the graph has no names.
void write_names(const RecGraph& graph, std::ostream& out);

// Reads `path` and, when present, the sidecar `names_path`.
RecGraph load_graph(const std::filesystem::path& path,
                    const std::optional<std::filesystem::path>& names_path =
                        std::nullopt);
// Writes `path`, plus `path` + ".names" when the graph carries names.
void save_graph(const RecGraph& graph, const std::filesystem::path& path);

using KeyValues = std::map<std::string, std::string>;

KeyValues read_key_values(std::istream& in);
KeyValues load_key_values(const std::filesystem::path& path);
void write_key_values(const KeyValues& values, std::ostream& out);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Strict numeric parsing of a whole token. Throw ParseError.
std::uint64_t parse_uint(std::string_view text);
double parse_double(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view contents);

}  // namespace recograph

#endif  // RECOGRAPH_IO_HPP_
