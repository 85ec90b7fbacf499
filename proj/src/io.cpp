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

#include "recograph/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "recograph/error.hpp"

namespace recograph {
namespace {

constexpr std::string_view kNodesKey = "nodes";

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool has_blank(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

std::string at_line(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

ItemId parse_item(std::string_view text, std::size_t line) {
  std::uint64_t v = 0;
  try {
    v = parse_uint(text);
  } catch (const ParseError& e) {
    throw ParseError(at_line(line) + e.what());
  }
  if (v >= std::numeric_limits<ItemId>::max()) {
    throw ParseError(at_line(line) + "item id too large");
  }
  return static_cast<ItemId>(v);
}

}  // namespace

std::uint64_t parse_uint(std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected a non-negative integer, got '" +
                     std::string(text) + "'");
  }
  return v;
}

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

RecGraph read_edge_list(std::istream& in, const NameTable& names) {
  struct Row {
    ItemId src, dst;
    EdgeLabel label;
    std::uint32_t weight;
  };
  std::vector<Row> rows;
  Metadata meta;
  std::size_t node_count = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (trim(view).empty()) continue;
    if (view.front() == '#') {
      if (view.substr(0, 5) == "#meta" &&
          (view.size() == 5 || view[5] == ' ' || view[5] == '\t')) {
        for (std::string_view token : split_ws(view.substr(5))) {
          auto eq = token.find('=');
          if (eq == std::string_view::npos || eq == 0) {
            throw ParseError(at_line(lineno) + "bad #meta entry '" +
                             std::string(token) + "'");
          }
          meta[std::string(token.substr(0, eq))] =
              std::string(token.substr(eq + 1));
        }
      }
      continue;
    }
    auto fields = split(view, '\t');
    if (fields.size() < 2 || fields.size() > 4) {
      throw ParseError(at_line(lineno) + "expected 2 to 4 tab-separated fields");
    }
    Row row{parse_item(fields[0], lineno), parse_item(fields[1], lineno),
            EdgeLabel::kUnknown, 1};
    if (fields.size() >= 3) {
      try {
        row.label = parse_label(trim(fields[2]));
      } catch (const ParseError& e) {
        throw ParseError(at_line(lineno) + e.what());
      }
    }
    if (fields.size() == 4) {
      std::uint64_t w = 0;
      try {
        w = parse_uint(fields[3]);
      } catch (const ParseError& e) {
        throw ParseError(at_line(lineno) + e.what());
      }
      if (w == 0 || w > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(at_line(lineno) + "weight must be in [1, 2^32)");
      }
      row.weight = static_cast<std::uint32_t>(w);
    }
    node_count = std::max<std::size_t>(
        node_count, std::max(row.src, row.dst) + std::size_t{1});
    rows.push_back(row);
  }

  if (auto it = meta.find(std::string(kNodesKey)); it != meta.end()) {
    node_count = std::max<std::size_t>(node_count, parse_uint(it->second));
    meta.erase(it);
  }
  for (const auto& [id, name] : names) {
    node_count = std::max<std::size_t>(node_count, id + std::size_t{1});
  }

  GraphBuilder b(node_count);
  for (const auto& [id, name] : names) b.set_name(id, name);
  for (auto& [k, v] : meta) b.set_metadata(k, v);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    b.add_edge(r.src, r.dst, r.label, r.weight);
  }
  return b.freeze();
}

void write_edge_list(const RecGraph& graph, std::ostream& out) {
  out << "#meta " << kNodesKey << '=' << graph.node_count() << '\n';
  for (const auto& [key, value] : graph.metadata()) {
    if (key == kNodesKey) continue;
    if (key.empty() || has_blank(key) || key.find('=') != std::string::npos ||
        has_blank(value)) {
      throw InvalidParams("metadata entry '" + key +
                          "' cannot be written as #meta key=value");
    }
    out << "#meta " << key << '=' << value << '\n';
  }
  for (const Edge& e : graph.edges()) {
    out << e.src << '\t' << e.dst << '\t' << to_string(e.label) << '\t'
        << e.weight << '\n';
  }
}

NameTable read_names(std::istream& in) {
  NameTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (trim(view).empty() || view.front() == '#') continue;
    auto tab = view.find('\t');
    if (tab == std::string_view::npos || tab + 1 == view.size()) {
      throw ParseError(at_line(lineno) + "expected id<TAB>name");
    }
    table.emplace_back(parse_item(view.substr(0, tab), lineno),
                       std::string(view.substr(tab + 1)));
  }
  return table;
}

void write_names(const RecGraph& graph, std::ostream& out) {
  if (!graph.has_names()) return;
  for (ItemId i = 0; i < graph.node_count(); ++i) {
    std::string_view n = graph.name(i);
    if (!n.empty()) out << i << '\t' << n << '\n';
  }
}

RecGraph load_graph(const std::filesystem::path& path,
                    const std::optional<std::filesystem::path>& names_path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  NameTable names;
  if (names_path) {
    std::ifstream nin(*names_path);
    if (!nin) throw IoError("cannot open " + names_path->string());
    names = read_names(nin);
  }
  try {
    return read_edge_list(in, names);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_graph(const RecGraph& graph, const std::filesystem::path& path) {
  std::ostringstream os;
  write_edge_list(graph, os);
  write_text_file(path, os.str());
  if (graph.has_names()) {
    std::ostringstream ns;
    write_names(graph, ns);
    write_text_file(path.string() + ".names", ns.str());
  }
}

KeyValues read_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(at_line(lineno) + "expected key=value");
    }
    std::string key(trim(view.substr(0, eq)));
    if (key.empty()) throw ParseError(at_line(lineno) + "empty key");
    kv[key] = std::string(trim(view.substr(eq + 1)));
  }
  return kv;
}

KeyValues load_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return read_key_values(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_key_values(const KeyValues& values, std::ostream& out) {
  for (const auto& [k, v] : values) out << k << '=' << v << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace recograph
