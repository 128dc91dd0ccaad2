#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxjsj/diagram.hpp"
#include "coxjsj/graph_of_groups.hpp"
#include "coxjsj/subset.hpp"

namespace coxjsj {

enum class VertexKind { Rigid, Orbifold };

enum class OrbifoldClass { VirtuallySurface, VirtuallyFree };

// Shape of the quotient part of an orbifold vertex, read off the
// presentation diagram induced on it: either a single cycle, or a disjoint
// union of paths and points.
struct OrbifoldShape {
    enum class Kind { Loop, PathsAndPoints };

    Kind kind = Kind::PathsAndPoints;
    int loop_length = 0;
    // For PathsAndPoints: generator indices along each path, one entry per
    // component ordered by smallest member, each read from its smaller end.
    std::vector<std::vector<int>> paths;

    // "loop(4)" or "paths-and-points".
    std::string to_string() const;
};

struct OrbifoldStructure {
    // The witnessing pair of crossing minimal splitters.
    GeneratorSubset splitter_a;
    GeneratorSubset splitter_b;
    // Their common part and its complement in the vertex. The vertex group
    // is commensurable to (quotient part) x (common part).
    GeneratorSubset m_part;
    GeneratorSubset t_part;
    OrbifoldClass cls = OrbifoldClass::VirtuallyFree;
    OrbifoldShape shape;
    // For paths-and-points: the splitting of the quotient part as dihedral
    // pieces amalgamated over single generators, free between components.
    // Lives over the diagram induced on t_part.
    std::optional<GraphOfGroups> free_decomposition;
    // Nonempty when some other minimal-rank crossing pair disagrees on the
    // common part.
    std::vector<std::string> diagnostics;
};

struct VertexClassification {
    GeneratorSubset vertex;
    VertexKind kind = VertexKind::Rigid;
    std::optional<OrbifoldStructure> orbifold;
};

// Classifies a vertex of a finished decomposition: rigid when its minimal
// splitters pairwise do not cross, orbifold otherwise, in which case the
// structure is extracted from the first crossing pair and cross-validated
// against the other minimal-rank crossing pairs.
VertexClassification classify_vertex(const CoxeterDiagram& d, const GeneratorSubset& vertex,
                                     const std::vector<GeneratorSubset>& edge_sets = {});

std::vector<VertexClassification> classify_final_vertices(const GraphOfGroups& g);

// Builds a diagram whose maximal decomposition has exactly one non-rigid
// vertex whose quotient part is the given diagram. The input must be a
// disjoint union of paths and points; a connected input must be a path on at
// least three generators. Each pair of consecutive components (cyclically)
// gets a fresh commuting pair {x_i, y_i} spanning a rigid block.
CoxeterDiagram realize_orbifold(const CoxeterDiagram& t_diagram);

}  // namespace coxjsj
