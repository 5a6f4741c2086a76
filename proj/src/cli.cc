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

#include "polymat/cli.h"

#include <fstream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "polymat/constructions.h"
#include "polymat/error.h"
#include "polymat/io.h"
#include "polymat/natural.h"
#include "polymat/polymatroid.h"
#include "polymat/vectors.h"
#include "polymat/zflats.h"

namespace polymat {

namespace {

// Parsed content of an input file.
using Input = std::variant<PolyFile, VecFile, RankedCyclicFlatFamily, BipartiteGraph,
                           LatticePathDiagram>;

struct Options {
  std::string path;
  std::string format;
  std::string from;
  std::string to;
  std::string axioms;
  std::string set;
  std::string output;
  std::string name;
};

Input load(const Options& opts) {
  const std::string text = read_file(opts.path);
  std::optional<Format> format;
  if (!opts.format.empty()) {
    format = parse_format_name(opts.format);
    if (!format) throw Error(ErrorCode::kInvalidArgument, "unknown format '" + opts.format + "'");
  } else {
    format = detect_format(opts.path, text);
    if (!format) throw Error(ErrorCode::kParseError, "cannot detect the format of " + opts.path);
  }
  switch (*format) {
    case Format::kPoly: return parse_poly(text);
    case Format::kVec: return parse_vec(text);
    case Format::kZed: return parse_zed(text);
    case Format::kGraph: return parse_graph(text);
    case Format::kDiag: return parse_diag(text);
  }
  throw Error(ErrorCode::kInvalidArgument, "unsupported format");
}

// Representation name of an input, as used by --from and --to.
std::string representation(const Input& input) {
  if (std::holds_alternative<PolyFile>(input)) return "rank";
  if (const auto* vec = std::get_if<VecFile>(&input)) return std::string(vector_kind_name(vec->kind));
  if (std::holds_alternative<RankedCyclicFlatFamily>(input)) return "zflats";
  if (std::holds_alternative<BipartiteGraph>(input)) return "graph";
  return "diagram";
}

void require_holds(const CheckReport& report, const char* what) {
  if (!report.holds()) {
    throw Error(ErrorCode::kAxiomsFailed, std::string("input is not ") + what + ":\n" + report.to_string());
  }
}

Polymatroid to_polymatroid(const Input& input) {
  if (const auto* poly = std::get_if<PolyFile>(&input)) {
    const auto table = poly->rho.table();
    return validate(poly->rho.size(), std::vector<Rational>(table.begin(), table.end()));
  }
  if (const auto* vec = std::get_if<VecFile>(&input)) {
    switch (vec->kind) {
      case VectorKind::kCircuits:
        return polymatroid_from_circuits(CircuitSystem{vec->bounds, vec->vectors});
      case VectorKind::kBases:
        require_holds(check_basis_axioms(vec->vectors, BasisAxiom::kExchange), "a basis family");
        return polymatroid_from_vectors(vec->vectors, vec->n);
      case VectorKind::kIndependents:
        require_holds(check_independence_axioms(vec->vectors), "an independent-vector family");
        return polymatroid_from_vectors(vec->vectors, vec->n);
    }
  }
  if (const auto* zed = std::get_if<RankedCyclicFlatFamily>(&input)) {
    return polymatroid_from_cyclic_flats(*zed);
  }
  if (const auto* graph = std::get_if<BipartiteGraph>(&input)) return boolean_polymatroid(*graph);
  return lattice_path_polymatroid(std::get<LatticePathDiagram>(input));
}

std::string render(const Polymatroid& rho, const std::string& to) {
  if (to == "rank") return write_poly(rho);
  if (to == "bases") return write_vec(VecFile{rho.size(), VectorKind::kBases, bases(rho), {}});
  if (to == "independents") {
    return write_vec(VecFile{rho.size(), VectorKind::kIndependents, independent_vectors(rho), {}});
  }
  if (to == "circuits") {
    CircuitSystem system = circuits(rho);
    return write_vec(VecFile{rho.size(), VectorKind::kCircuits, system.circuits, system.bounds});
  }
  if (to == "zflats") return write_zed(ranked_cyclic_flats(rho));
  throw Error(ErrorCode::kInvalidArgument, "unknown target '" + to + "'");
}

void emit(const Options& opts, const std::string& text, std::ostream& out) {
  if (opts.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file || !(file << text)) throw Error(ErrorCode::kInvalidArgument, "cannot write " + opts.output);
}

CheckReport rank_report(const Polymatroid& table) {
  const auto violation = find_rank_violation(table.size(), table.table());
  const std::pair<ErrorCode, const char*> axioms[] = {
      {ErrorCode::kNegativeRank, "(nonnegative)"},
      {ErrorCode::kNotNormalized, "(normalized)"},
      {ErrorCode::kNotMonotone, "(monotone)"},
      {ErrorCode::kNotSubmodular, "(submodular)"},
  };
  CheckReport report;
  bool failed = false;
  for (const auto& [code, name] : axioms) {
    if (failed) {
      report.outcomes.push_back({name, AxiomOutcome::Status::kSkipped, "an earlier axiom failed"});
    } else if (violation && violation->kind == code) {
      report.outcomes.push_back({name, AxiomOutcome::Status::kFails, violation->describe()});
      failed = true;
    } else {
      report.outcomes.push_back({name, AxiomOutcome::Status::kHolds, ""});
    }
  }
  return report;
}

CheckReport check(const Input& input, const std::string& axioms) {
  if (axioms == "poly") {
    if (const auto* poly = std::get_if<PolyFile>(&input)) return rank_report(poly->rho);
    return rank_report(to_polymatroid(input));
  }
  const auto* vec = std::get_if<VecFile>(&input);
  auto vectors_of = [&](VectorKind kind) {
    if (vec != nullptr && vec->kind == kind) return vec->vectors;
    const Polymatroid rho = to_polymatroid(input);
    return kind == VectorKind::kBases ? bases(rho) : independent_vectors(rho);
  };
  if (axioms == "I") return check_independence_axioms(vectors_of(VectorKind::kIndependents));
  if (axioms == "B") return check_basis_axioms(vectors_of(VectorKind::kBases), BasisAxiom::kExchange);
  if (axioms == "Bprime") {
    return check_basis_axioms(vectors_of(VectorKind::kBases), BasisAxiom::kSymmetricExchange);
  }
  if (axioms == "middle") return check_basis_axioms(vectors_of(VectorKind::kBases), BasisAxiom::kMiddle);
  if (axioms == "C") {
    if (vec != nullptr && vec->kind == VectorKind::kCircuits) {
      return check_circuit_axioms(CircuitSystem{vec->bounds, vec->vectors});
    }
    return check_circuit_axioms(circuits(to_polymatroid(input)));
  }
  if (axioms == "Z" || axioms == "PZ") {
    const ZMode mode = axioms == "Z" ? ZMode::kMatroid : ZMode::kPolymatroid;
    if (const auto* zed = std::get_if<RankedCyclicFlatFamily>(&input)) return check_z_axioms(*zed, mode);
    return check_z_axioms(ranked_cyclic_flats(to_polymatroid(input)), mode);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown axiom system '" + axioms + "'");
}

std::string info(const Polymatroid& rho) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) {
    out += key + ": " + value + "\n";
  };
  line("n", std::to_string(rho.size()));
  line("rank", rho.total_rank().to_string());
  line("integral", rho.is_integral() ? "yes" : "no");
  line("loops", format_subset(rho.loops()));
  line("connected", rho.size() == 0 ? "n/a" : (is_connected(rho) ? "yes" : "no"));
  line("cyclic flats", std::to_string(cyclic_flats(rho).size()));
  if (rho.is_integral()) {
    line("bases", std::to_string(bases(rho).size()));
    line("circuits", std::to_string(circuits(rho).circuits.size()));
  } else {
    line("bases", "n/a");
    line("circuits", "n/a");
  }
  return out;
}

Polymatroid make(const Options& opts) {
  if (opts.name == "boolean") {
    if (opts.path.empty()) throw Error(ErrorCode::kInvalidArgument, "boolean needs a graph file");
    return boolean_polymatroid(parse_graph(read_file(opts.path)));
  }
  if (opts.name == "lattice_path") {
    if (opts.path.empty()) throw Error(ErrorCode::kInvalidArgument, "lattice_path needs a diagram file");
    return lattice_path_polymatroid(parse_diag(read_file(opts.path)));
  }
  if (!opts.path.empty()) throw Error(ErrorCode::kInvalidArgument, opts.name + " takes no input file");
  return builtin(opts.name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Integer polymatroid toolkit", "polymat");
  app.require_subcommand(1);
  Options opts;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", opts.path, "Input file")->required();
    sub->add_option("--format", opts.format, "Input format: poly, vec, zed, graph, diag");
  };
  auto* validate_cmd = app.add_subcommand("validate", "Check the polymatroid rank axioms");
  add_input(validate_cmd);
  auto* info_cmd = app.add_subcommand("info", "Summarize a polymatroid");
  add_input(info_cmd);
  auto* convert_cmd = app.add_subcommand("convert", "Convert between representations");
  add_input(convert_cmd);
  convert_cmd->add_option("--from", opts.from, "Expected input representation")
      ->check(CLI::IsMember({"rank", "bases", "circuits", "independents", "zflats", "graph", "diagram"}));
  convert_cmd->add_option("--to", opts.to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"rank", "bases", "circuits", "independents", "zflats"}));
  convert_cmd->add_option("-o,--output", opts.output, "Output file");
  auto* natural_cmd = app.add_subcommand("natural", "Emit the natural matroid with its blocks");
  add_input(natural_cmd);
  natural_cmd->add_option("-o,--output", opts.output, "Output file");
  auto* check_cmd = app.add_subcommand("check", "Check an axiom system");
  add_input(check_cmd);
  check_cmd->add_option("--axioms", opts.axioms, "poly, I, B, Bprime, middle, C, Z, PZ")
      ->required()
      ->check(CLI::IsMember({"poly", "I", "B", "Bprime", "middle", "C", "Z", "PZ"}));
  auto* rset_cmd = app.add_subcommand("rset", "Report the minimizing cyclic flats of a set");
  add_input(rset_cmd);
  rset_cmd->add_option("--set", opts.set, "Set such as {1,3}")->required();
  auto* make_cmd = app.add_subcommand("make", "Build a named polymatroid");
  make_cmd->add_option("name", opts.name,
                       "uniform(r,n), fano, pg22_lines, vamos2poly, fig2poly, boolean, lattice_path")
      ->required();
  make_cmd->add_option("file", opts.path, "Graph or diagram file");
  make_cmd->add_option("-o,--output", opts.output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (make_cmd->parsed()) {
      emit(opts, write_poly(make(opts)), out);
      return kExitOk;
    }
    const Input input = load(opts);
    if (validate_cmd->parsed()) {
      const CheckReport report = check(input, "poly");
      out << report.to_string();
      return report.holds() ? kExitOk : kExitAxiomsFail;
    }
    if (check_cmd->parsed()) {
      const CheckReport report = check(input, opts.axioms);
      out << report.to_string();
      return report.holds() ? kExitOk : kExitAxiomsFail;
    }
    if (convert_cmd->parsed() && !opts.from.empty() && opts.from != representation(input)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "input holds " + representation(input) + ", not " + opts.from);
    }
    const Polymatroid rho = to_polymatroid(input);
    if (info_cmd->parsed()) {
      out << info(rho);
    } else if (convert_cmd->parsed()) {
      emit(opts, render(rho, opts.to), out);
    } else if (natural_cmd->parsed()) {
      const Matroid m = build_natural_matroid(rho);
      emit(opts, write_poly(m.rank_function(), &*m.blocks()), out);
    } else if (rset_cmd->parsed()) {
      const RSetReport report = r_set(rho, parse_subset(opts.set, rho.size()));
      out << report.to_string();
      return report.structure_holds() ? kExitOk : kExitAxiomsFail;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace polymat
