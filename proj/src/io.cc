// Copyright 2026 The Authors.
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

#include "polymat/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "polymat/error.h"
#include "polymat/limits.h"

namespace polymat {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    const std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    ++number;
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    const auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return out;
    s = s.substr(end);
  }
}

bool to_int(std::string_view text, int& out) {
  text = trim(text);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size();
}

int int_or_fail(const Line& line, std::string_view text, const char* what) {
  int value = 0;
  if (!to_int(text, value)) fail(line.number, std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

// Reads "<key>=<value>" attributes from a header line.
std::string_view attribute(const Line& line, const std::vector<std::string_view>& parts,
                           std::string_view key) {
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].starts_with(key) && parts[k].size() > key.size() && parts[k][key.size()] == '=') {
      return parts[k].substr(key.size() + 1);
    }
  }
  fail(line.number, "header lacks " + std::string(key) + "=");
}

int ground_size(const Line& line, const std::vector<std::string_view>& parts) {
  const int n = int_or_fail(line, attribute(line, parts, "n"), "ground set size");
  if (n < 0 || n > kMaskBits) fail(line.number, "ground set size out of range");
  return n;
}

Rational rank_or_fail(const Line& line, std::string_view text) {
  try {
    return Rational::parse(trim(text));
  } catch (const Error& e) {
    fail(line.number, e.what());
  }
}

// Splits "<left>: <right>".
std::pair<std::string_view, std::string_view> split_colon(const Line& line) {
  const auto colon = line.text.rfind(':');
  if (colon == std::string_view::npos) fail(line.number, "expected ':'");
  return {trim(line.text.substr(0, colon)), trim(line.text.substr(colon + 1))};
}

Subset subset_or_fail(const Line& line, std::string_view text, int n) {
  try {
    return parse_subset(text, n);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kElementOutOfRange) throw;
    fail(line.number, e.what());
  }
}

// Space-separated entries.
IntVector parse_vector(const Line& line, std::string_view text) {
  IntVector out;
  for (std::string_view part : words(text)) out.push_back(int_or_fail(line, part, "vector entry"));
  return out;
}

std::string join_entries(const IntVector& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(u[i]);
  }
  return out;
}

// "(i,t)" with 1-based labels.
std::pair<int, int> parse_element_name(const Line& line, std::string_view text) {
  const auto comma = text.find(',');
  if (text.size() < 5 || text.front() != '(' || text.back() != ')' || comma == std::string_view::npos) {
    fail(line.number, "expected an element name (i,t), got '" + std::string(text) + "'");
  }
  return {int_or_fail(line, text.substr(1, comma - 1), "block label"),
          int_or_fail(line, text.substr(comma + 1, text.size() - comma - 2), "block position")};
}

}  // namespace

std::string_view format_name(Format format) {
  switch (format) {
    case Format::kPoly: return "poly";
    case Format::kVec: return "vec";
    case Format::kZed: return "zed";
    case Format::kGraph: return "graph";
    case Format::kDiag: return "diag";
  }
  return "";
}

std::optional<Format> parse_format_name(std::string_view name) {
  for (Format f : {Format::kPoly, Format::kVec, Format::kZed, Format::kGraph, Format::kDiag}) {
    if (name == format_name(f)) return f;
  }
  return std::nullopt;
}

std::optional<Format> detect_format(std::string_view path, std::string_view text) {
  const auto dot = path.rfind('.');
  if (dot != std::string_view::npos) {
    if (auto f = parse_format_name(path.substr(dot + 1))) return f;
  }
  const auto lines = content_lines(text);
  if (lines.empty()) return std::nullopt;
  const auto first = words(lines.front().text).front();
  if (first == "poly") return Format::kPoly;
  if (first == "vectors") return Format::kVec;
  if (first == "zflats") return Format::kZed;
  if (first == "graph" || first == "edge") return Format::kGraph;
  if (first == "diagram" || first == "row") return Format::kDiag;
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Subset parse_subset(std::string_view text, int n) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(ErrorCode::kParseError, "expected a set {i,...}, got '" + std::string(text) + "'");
  }
  std::string_view body = trim(text.substr(1, text.size() - 2));
  Subset out = 0;
  while (!body.empty()) {
    const auto comma = body.find(',');
    int i = 0;
    if (!to_int(body.substr(0, comma), i)) {
      throw Error(ErrorCode::kParseError, "bad element in '" + std::string(text) + "'");
    }
    if (i < 1 || i > n) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "element " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    out |= singleton(i - 1);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return out;
}

PolyFile parse_poly(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty input");
  const auto header = words(lines[0].text);
  if (header.front() != "poly") fail(lines[0].number, "expected 'poly n=<n>'");
  const int n = ground_size(lines[0], header);
  require_table_capacity(n, "rank table");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::optional<Rational>> seen(count);
  std::size_t k = 1;
  for (; k < lines.size() && lines[k].text != "blocks"; ++k) {
    const auto [left, right] = split_colon(lines[k]);
    const Subset s = subset_or_fail(lines[k], left, n);
    if (seen[s]) {
      throw Error(ErrorCode::kDuplicateSubset,
                  "line " + std::to_string(lines[k].number) + ": " + format_subset(s) + " repeated");
    }
    seen[s] = rank_or_fail(lines[k], right);
  }
  std::vector<Rational> ranks(count);
  for (Subset s = 0; s < count; ++s) {
    if (!seen[s]) throw Error(ErrorCode::kMissingSubset, "no rank for " + format_subset(s));
    ranks[s] = *seen[s];
  }
  PolyFile file{Polymatroid::from_table_unchecked(n, std::move(ranks)), std::nullopt};
  if (k < lines.size()) {
    // Names (i,t) fix positions: E' is ordered lexicographically by name.
    std::vector<std::pair<int, int>> names;
    int label = 0;
    for (++k; k < lines.size(); ++k) {
      const auto colon = lines[k].text.find(':');
      const auto head = words(lines[k].text.substr(0, colon));
      if (colon == std::string_view::npos || head.size() != 2 || head[0] != "block" ||
          int_or_fail(lines[k], head[1], "block label") != label + 1) {
        fail(lines[k].number, "expected 'block " + std::to_string(label + 1) + ": (i,1) ...'");
      }
      ++label;
      int expected = 1;
      for (std::string_view word : words(lines[k].text.substr(colon + 1))) {
        const auto name = parse_element_name(lines[k], word);
        if (name.first != label || name.second != expected) {
          fail(lines[k].number, "expected element (" + std::to_string(label) + "," +
                                    std::to_string(expected) + ")");
        }
        ++expected;
        names.push_back(name);
      }
    }
    if (static_cast<int>(names.size()) != n) {
      throw Error(ErrorCode::kBlockSizeMismatch, "blocks name " + std::to_string(names.size()) +
                                                     " elements, the table has " + std::to_string(n));
    }
    std::vector<int> sizes(label, 0);
    for (const auto& name : names) ++sizes[name.first - 1];
    file.blocks = BlockMap::consecutive(sizes);
  }
  return file;
}

std::string write_poly(const Polymatroid& rho, const BlockMap* blocks) {
  std::string out = "poly n=" + std::to_string(rho.size()) + "\n";
  for (Subset s = 0; s <= rho.ground(); ++s) {
    out += format_subset(s) + ": " + rho(s).to_string() + "\n";
  }
  if (blocks != nullptr) {
    out += "blocks\n";
    for (int i = 0; i < blocks->num_blocks(); ++i) {
      out += "block " + std::to_string(i + 1) + ":";
      for (int e : elements(blocks->block(i))) out += " " + blocks->format_element(e);
      out += "\n";
    }
  }
  return out;
}

std::string_view vector_kind_name(VectorKind kind) {
  switch (kind) {
    case VectorKind::kBases: return "bases";
    case VectorKind::kCircuits: return "circuits";
    case VectorKind::kIndependents: return "independents";
  }
  return "";
}

VecFile parse_vec(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty input");
  const auto header = words(lines[0].text);
  if (header.front() != "vectors") fail(lines[0].number, "expected 'vectors n=<n> kind=<kind>'");
  VecFile file;
  file.n = ground_size(lines[0], header);
  const std::string_view kind = attribute(lines[0], header, "kind");
  bool known = false;
  for (VectorKind k : {VectorKind::kBases, VectorKind::kCircuits, VectorKind::kIndependents}) {
    if (kind == vector_kind_name(k)) {
      file.kind = k;
      known = true;
    }
  }
  if (!known) fail(lines[0].number, "unknown kind '" + std::string(kind) + "'");
  std::size_t k = 1;
  if (file.kind == VectorKind::kCircuits) {
    if (k >= lines.size() || !lines[k].text.starts_with("bounds:")) {
      fail(k < lines.size() ? lines[k].number : lines[0].number, "circuits need a bounds: line");
    }
    file.bounds = parse_vector(lines[k], lines[k].text.substr(7));
    if (static_cast<int>(file.bounds.size()) != file.n) fail(lines[k].number, "bounds length differs from n");
    ++k;
  }
  for (; k < lines.size(); ++k) {
    std::string_view body = lines[k].text;
    if (body.starts_with("circuit:")) body.remove_prefix(8);
    IntVector u = parse_vector(lines[k], body);
    if (static_cast<int>(u.size()) != file.n) fail(lines[k].number, "vector length differs from n");
    for (int x : u) {
      if (x < 0) fail(lines[k].number, "negative vector entry");
    }
    file.vectors.push_back(std::move(u));
  }
  return file;
}

std::string write_vec(const VecFile& file) {
  VectorFamily vectors = file.vectors;
  canonicalize(vectors);
  std::string out = "vectors n=" + std::to_string(file.n) + " kind=" +
                    std::string(vector_kind_name(file.kind)) + "\n";
  if (file.kind == VectorKind::kCircuits) out += "bounds: " + join_entries(file.bounds) + "\n";
  for (const auto& u : vectors) out += join_entries(u) + "\n";
  return out;
}

RankedCyclicFlatFamily parse_zed(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty input");
  const auto header = words(lines[0].text);
  if (header.front() != "zflats") fail(lines[0].number, "expected 'zflats n=<n>'");
  RankedCyclicFlatFamily family;
  family.n = ground_size(lines[0], header);
  family.element_ranks.resize(family.n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [left, right] = split_colon(lines[k]);
    const Rational rank = rank_or_fail(lines[k], right);
    if (left.starts_with("flat ")) {
      const Subset s = subset_or_fail(lines[k], left.substr(5), family.n);
      if (family.flat_rank(s)) {
        throw Error(ErrorCode::kDuplicateSubset, "line " + std::to_string(lines[k].number) +
                                                     ": " + format_subset(s) + " repeated");
      }
      family.flats.push_back(s);
      family.flat_ranks.push_back(rank);
    } else if (left.starts_with("singleton ")) {
      const int i = int_or_fail(lines[k], left.substr(10), "element");
      if (i < 1 || i > family.n) {
        throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(i) + " outside 1.." +
                                                       std::to_string(family.n));
      }
      if (family.element_ranks[i - 1]) fail(lines[k].number, "singleton repeated");
      family.element_ranks[i - 1] = rank;
    } else {
      fail(lines[k].number, "expected 'flat {...}: r' or 'singleton i: r'");
    }
  }
  family.normalize();
  return family;
}

std::string write_zed(const RankedCyclicFlatFamily& input) {
  RankedCyclicFlatFamily family = input;
  family.normalize();
  std::string out = "zflats n=" + std::to_string(family.n) + "\n";
  for (std::size_t k = 0; k < family.flats.size(); ++k) {
    out += "flat " + format_subset(family.flats[k]) + ": " + family.flat_ranks[k].to_string() + "\n";
  }
  for (std::size_t i = 0; i < family.element_ranks.size(); ++i) {
    if (family.element_ranks[i]) {
      out += "singleton " + std::to_string(i + 1) + ": " + family.element_ranks[i]->to_string() + "\n";
    }
  }
  return out;
}

BipartiteGraph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  BipartiteGraph graph;
  bool sized = false;
  std::size_t k = 0;
  if (!lines.empty() && words(lines[0].text).front() == "graph") {
    const auto header = words(lines[0].text);
    graph.n = ground_size(lines[0], header);
    graph.k = int_or_fail(lines[0], attribute(lines[0], header, "k"), "right side size");
    sized = true;
    k = 1;
  }
  for (; k < lines.size(); ++k) {
    const auto parts = words(lines[k].text);
    if (parts.size() != 3 || parts[0] != "edge") fail(lines[k].number, "expected 'edge <e> <h>'");
    const int e = int_or_fail(lines[k], parts[1], "element");
    const int h = int_or_fail(lines[k], parts[2], "right vertex");
    if (e < 1 || h < 1) fail(lines[k].number, "vertices are numbered from 1");
    if (!sized) {
      graph.n = std::max(graph.n, e);
      graph.k = std::max(graph.k, h);
    }
    graph.edges.emplace_back(e - 1, h - 1);
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  graph.validate();
  return graph;
}

LatticePathDiagram parse_diag(std::string_view text) {
  const auto lines = content_lines(text);
  LatticePathDiagram diagram;
  bool sized = false;
  std::size_t k = 0;
  if (!lines.empty() && words(lines[0].text).front() == "diagram") {
    diagram.n = ground_size(lines[0], words(lines[0].text));
    sized = true;
    k = 1;
  }
  for (; k < lines.size(); ++k) {
    const auto parts = words(lines[k].text);
    if (parts.size() != 3 || parts[0] != "row") fail(lines[k].number, "expected 'row <a> <b>'");
    const int a = int_or_fail(lines[k], parts[1], "row start");
    const int b = int_or_fail(lines[k], parts[2], "row end");
    if (!sized) diagram.n = std::max(diagram.n, b);
    diagram.rows.emplace_back(a, b);
  }
  diagram.validate();
  return diagram;
}

}  // namespace polymat
