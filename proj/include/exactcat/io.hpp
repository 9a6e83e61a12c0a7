#pragma once

// Quiver spec files and Graphviz output.
//
// A quiver spec is a small TOML subset:
//
//   vertices = ["1", "2", "3"]
//   arrows = [{from = "1", to = "2", name = "a"}, {from = "3", to = "2", name = "b"}]
//   p = 2
//
// `p` is optional. Vertex labels may also be written as bare integers.

#include "exactcat/aux_models.hpp"

#include <optional>

namespace exactcat {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuiverSpec {
  std::shared_ptr<const Quiver> quiver;
  std::optional<long> p;
};

/// Throws InputError with a line number on malformed input.
QuiverSpec parse_quiver_spec(const std::string& text);
QuiverSpec load_quiver_spec(const std::string& path);
std::string format_quiver_spec(const QuiverSpec& spec);

/// Sub-quiver of `parent` from a comma list of arrows and lone vertices, e.g.
/// "1->2", "1->2,3" or "1->2:a" (the name picks one of several parallel arrows).
Quiver parse_subquiver(const Quiver& parent, const std::string& text);

std::string ar_quiver_dot(const ARCatalog& catalog);
std::string lattice_dot(const ExLattice& lattice);
/// Degree 0 arrows dotted, degree 1 solid.
std::string graded_quiver_dot(const ARCatalog& catalog, const GradedQuiver& q, const std::string& title);
std::string poset_quiver_dot(const PosetQuiver& q);

}  // namespace exactcat
