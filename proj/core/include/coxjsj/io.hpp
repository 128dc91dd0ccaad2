#pragma once

#include <string>

#include "coxjsj/diagram.hpp"

namespace coxjsj {

// Parses the diagram text format:
//
//   # comment
//   generators: a b c d
//   edges:
//   a b 3
//   b c 4
//   a d inf
//
// The generators line fixes the generator order. Each edge line names two
// distinct generators and an integer label >= 2, or "inf" to state that the
// pair is unrelated (equivalent to omitting the line, but a later finite
// label for the pair becomes an error). Repeating an edge with the same
// label is accepted; conflicting labels are errors. Errors carry 1-based
// line and column numbers.
CoxeterDiagram parse_diagram(const std::string& text);

CoxeterDiagram load_diagram_file(const std::string& path);

// Inverse of parse_diagram up to comments and whitespace.
std::string serialize_diagram(const CoxeterDiagram& d);

}  // namespace coxjsj
