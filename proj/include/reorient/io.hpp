#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reorient/exact.hpp"
#include "reorient/graph.hpp"
#include "reorient/rational.hpp"
#include "reorient/sat.hpp"

namespace reorient {

/// Malformed instance text. `line()` is 1-based; 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Everything the line format can carry besides the bare graph. Unset parts are empty.
struct InstanceFile {
  MixedGraph graph;
  std::vector<Rational> edge_weights;  ///< empty, or one per edge
  std::vector<Rational> arc_weights;   ///< empty, or one per arc
  std::optional<Requirement> requirement;
  std::vector<VertexId> terminals;
  std::optional<int> budget;
  std::vector<std::string> vertex_labels;  ///< empty, or one per vertex

  bool operator==(const InstanceFile&) const = default;
};

/// Line format:
///   v <count>              vertex count (optional; otherwise 1 + the largest id used)
///   e <u> <v>              undirected edge
///   a <tail> <head>        arc
///   w e|a <index> <p[/q]>  weight of an element (default 1)
///   r <x> <y> <value>      requirement entry; `r * * <value>` sets every ordered pair
///   t <v>                  terminal vertex
///   k <value>              budget
///   label v|e|a <index> <text...>
///   # comment
InstanceFile parse_instance_text(std::string_view text);
InstanceFile read_instance_file(const std::string& path);

/// Canonical text: header, elements in index order, then weights, requirement, terminals,
/// budget and labels. Only non-default weights and non-zero requirement entries are written.
std::string emit_instance_text(const InstanceFile& inst);

/// Reads weight lines (`w ...` and comments only) and applies them to `inst`.
void apply_weights_text(InstanceFile& inst, std::string_view text);

/// DIMACS CNF: `p cnf <vars> <clauses>` then clauses of 1-based signed literals ending in 0.
SatInstance parse_sat_text(std::string_view text);
SatInstance read_sat_file(const std::string& path);
std::string emit_sat_text(const SatInstance& sat);

std::string instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(std::string_view json);
std::string sat_to_json(const SatInstance& sat);
SatInstance sat_from_json(std::string_view json);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string content_hash(std::string_view canonical_text);

std::string read_text_file(const std::string& path);

}  // namespace reorient
