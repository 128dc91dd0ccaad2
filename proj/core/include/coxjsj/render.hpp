#pragma once

#include <string>
#include <vector>

#include "coxjsj/graph_of_groups.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/orbifold.hpp"

namespace coxjsj {

// JSON document for a finished run: the diagram, every stage, and the final
// stage with its vertex classifications. Stable field layout:
//
// {
//   "generators": ["a", ...],
//   "edges": [{"s": "a", "t": "b", "m": 3}, ...],
//   "stages": [{"vertices": [["a", "b"], ...],
//               "edges": [{"between": [0, 1], "set": ["a"]}, ...]}, ...],
//   "final": {"vertices": ..., "edges": ...,
//             "vertex_classifications": [
//                 {"vertex": [...], "kind": "rigid"},
//                 {"vertex": [...], "kind": "orbifold",
//                  "t": [...], "m": [...], "shape": "loop(4)"}]}
// }
std::string trace_to_json(const StageTrace& trace,
                          const std::vector<VertexClassification>& classifications);

// Graphviz rendering of one stage, nodes labeled by their generator lists.
std::string stage_to_dot(const GraphOfGroups& g, int stage_index);

}  // namespace coxjsj
