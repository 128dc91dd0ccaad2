#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "coxjsj/diagram.hpp"
#include "coxjsj/subset.hpp"

namespace coxjsj {

// Undirected edge of a decomposition. `u`, `v` index into the vertex list;
// `set` generates the edge group and is contained in both endpoint subsets.
struct GogEdge {
    int u = 0;
    int v = 0;
    GeneratorSubset set;

    friend bool operator==(const GogEdge&, const GogEdge&) = default;
};

// Canonical structural form of a decomposition: vertex subsets sorted, edges
// rewritten against the sorted positions and sorted themselves. Two
// decompositions describe the same splitting exactly when their families
// compare equal, which is how stage fixed points and order independence are
// detected.
struct VertexFamily {
    std::vector<GeneratorSubset> vertices;
    std::vector<std::tuple<int, int, GeneratorSubset>> edges;

    friend auto operator<=>(const VertexFamily&, const VertexFamily&) = default;

    std::string to_string(const CoxeterDiagram& d) const;
};

// A decomposition of the Coxeter group as a tree of standard subgroups:
// every vertex and edge set is a subset of the diagram's generators. The
// visibility conditions (every diagram edge inside some vertex, every
// generator spanning a connected subtree) are checked by validate().
class GraphOfGroups {
public:
    GraphOfGroups() = default;
    GraphOfGroups(std::shared_ptr<const CoxeterDiagram> diagram,
                  std::vector<GeneratorSubset> vertices, std::vector<GogEdge> edges);

    // One vertex carrying every generator, no edges.
    static GraphOfGroups trivial(std::shared_ptr<const CoxeterDiagram> diagram);

    const CoxeterDiagram& diagram() const { return *diagram_; }
    const std::shared_ptr<const CoxeterDiagram>& diagram_ptr() const { return diagram_; }

    const std::vector<GeneratorSubset>& vertices() const { return vertices_; }
    const std::vector<GogEdge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edge sets incident to one vertex, with multiplicity, sorted.
    std::vector<GeneratorSubset> incident_edge_sets(int vertex) const;

    VertexFamily family() const;

    // Violated decomposition invariants, as human-readable findings. Empty
    // means the object is a tree of groups covering the diagram visibly.
    std::vector<std::string> validate() const;

    // No edge whose set equals an endpoint subset (no collapsible edge).
    bool is_reduced() const;

    // Same decomposition with vertices sorted and edges remapped and sorted.
    GraphOfGroups normalized() const;

    std::string describe() const;

private:
    std::shared_ptr<const CoxeterDiagram> diagram_;
    std::vector<GeneratorSubset> vertices_;
    std::vector<GogEdge> edges_;
};

}  // namespace coxjsj
