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

// Text formats. Every format is line based; blank lines and lines starting
// with '#' are ignored on input, and output is canonical (sorted, LF line
// endings, no trailing whitespace).
//
//   POLY v1   poly n=<n>
//             {<i>,...}: <rank>            one line per subset, mask order
//             blocks                        optional block section
//             block <i>: (i,1) (i,2) ...   names in lexicographic order
//   VEC v1    vectors n=<n> kind=<bases|circuits|independents>
//             bounds: <m_1> ... <m_n>       circuits only
//             <u_1> ... <u_n>               one vector per line, sorted;
//                                           "circuit:" prefix accepted
//   ZED v1    zflats n=<n>
//             flat {<i>,...}: <rank>
//             singleton <i>: <rank>
//   GRAPH v1  graph n=<n> k=<k>             optional header
//             edge <e> <h>
//   DIAG v1   diagram n=<n>                 optional header
//             row <a> <b>
//
// Elements are written 1-based; ranks are integers or p/q.

#ifndef POLYMAT_IO_H_
#define POLYMAT_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "polymat/constructions.h"
#include "polymat/natural.h"
#include "polymat/polymatroid.h"
#include "polymat/vectors.h"
#include "polymat/zflats.h"

namespace polymat {

enum class Format { kPoly, kVec, kZed, kGraph, kDiag };

std::string_view format_name(Format format);
// Accepts "poly", "vec", "zed", "graph", "diag".
std::optional<Format> parse_format_name(std::string_view name);
// By file extension, then by the first keyword of the text.
std::optional<Format> detect_format(std::string_view path, std::string_view text);

// Reads a whole file; throws kInvalidArgument if it cannot be opened.
std::string read_file(const std::string& path);

// Parses "{1,3}" into a mask over n elements.
Subset parse_subset(std::string_view text, int n);

struct PolyFile {
  Polymatroid rho;  // not checked against the polymatroid axioms
  std::optional<BlockMap> blocks;
};

PolyFile parse_poly(std::string_view text);
std::string write_poly(const Polymatroid& rho, const BlockMap* blocks = nullptr);

enum class VectorKind { kBases, kCircuits, kIndependents };

std::string_view vector_kind_name(VectorKind kind);

struct VecFile {
  int n = 0;
  VectorKind kind = VectorKind::kBases;
  VectorFamily vectors;
  IntVector bounds;  // circuits only
};

VecFile parse_vec(std::string_view text);
std::string write_vec(const VecFile& file);

RankedCyclicFlatFamily parse_zed(std::string_view text);
std::string write_zed(const RankedCyclicFlatFamily& family);

BipartiteGraph parse_graph(std::string_view text);
LatticePathDiagram parse_diag(std::string_view text);

}  // namespace polymat

#endif  // POLYMAT_IO_H_
