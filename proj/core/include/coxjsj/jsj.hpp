#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxjsj/graph_of_groups.hpp"
#include "coxjsj/splitters.hpp"

namespace coxjsj {

// Replaces one vertex with the star decomposition induced by a splitter: one
// new vertex per component of the diagram minus the splitter that meets the
// vertex (splitter plus the component's share of the vertex), star edges
// carrying the splitter, and each former incident edge reattached to the
// first new vertex containing its set. The result is reduced. Throws
// ContractViolation unless the splitter is a virtually abelian subset of the
// vertex that separates it and every former edge fits one new vertex.
GraphOfGroups split_vertex(const GraphOfGroups& g, int vertex, const GeneratorSubset& splitter);

// Collapses edges whose set equals an endpoint subset, smallest first, until
// none remains. Trees stay trees; vertex subsets never grow.
GraphOfGroups reduce(const GraphOfGroups& g);

struct AmenabilityViolation {
    GeneratorSubset vertex;
    GeneratorSubset edge_set;
    GeneratorSubset splitter;
};

// Every (vertex, incident edge set, virtually abelian subset of the vertex)
// triple where the subset separates the edge set in the diagram. An empty
// result means every edge group stays elliptic under any further refinement
// of the neighboring vertices, so the next stage is well defined.
std::vector<AmenabilityViolation> check_amenable(const GraphOfGroups& g);

struct SplitEvent {
    int stage = 0;
    GeneratorSubset vertex;
    GeneratorSubset splitter;
};

struct JsjOptions {
    // When set, ties between simultaneously eligible splits are broken
    // uniformly at random instead of by the deterministic order. The final
    // decomposition must not depend on this.
    std::optional<std::uint64_t> seed;
};

// Fully refines one vertex group against the given incident edge sets:
// repeatedly splits a piece along a minimal splitter that crosses no other
// minimal splitter of that piece, reducing internal edges as it goes, until
// no piece admits an eligible splitter. Returns the local decomposition;
// the boundary edges themselves are not part of it. Throws ContractViolation
// when some virtually abelian subset of the vertex separates an edge set.
GraphOfGroups m_jsj_decomposition(std::shared_ptr<const CoxeterDiagram> diagram,
                                  const GeneratorSubset& vertex,
                                  const std::vector<GeneratorSubset>& edge_sets = {});

// One refinement pass: refines every vertex against its incident edge sets,
// merges the local decompositions along the original edges, reduces globally
// and normalizes. Throws ContractViolation when check_amenable is nonempty.
GraphOfGroups next_stage(const GraphOfGroups& g);

struct StageTrace {
    std::vector<GraphOfGroups> stages;
    std::vector<SplitEvent> splits;
    std::vector<std::string> diagnostics;

    const GraphOfGroups& final_stage() const { return stages.back(); }
};

// Iterates refinement passes from the trivial decomposition until the vertex
// family stops changing; the last two stages of the trace coincide. The
// result is the unique maximal visible decomposition over virtually abelian
// splitting subgroups, independent of tie-breaking order.
StageTrace jsj(std::shared_ptr<const CoxeterDiagram> diagram, const JsjOptions& opts = {});

}  // namespace coxjsj
