#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "coxjsj/classify.hpp"
#include "coxjsj/diagram.hpp"
#include "coxjsj/subset.hpp"

namespace coxjsj {

// Every virtually abelian subset of `within`, the empty set included,
// ordered by subset. Assembled as unions of pairwise-commuting components;
// connected seeds that already generate an indefinite form are pruned, which
// is sound because indefiniteness persists under connected extension.
std::vector<VirtAbelianStructure> virtually_abelian_subsets(const CoxeterDiagram& d,
                                                            const GeneratorSubset& within);

// A subset is compatible with a collection of edge sets when each edge set
// either sits inside it or survives whole into a single component of the
// diagram minus the subset. Splitting along a compatible subset keeps every
// edge group attached to one side.
bool is_compatible_with_edges(const CoxeterDiagram& d, const GeneratorSubset& a,
                              const std::vector<GeneratorSubset>& edge_sets);

// Mutual separation in the full diagram. The empty set never gets separated,
// so nothing crosses it.
bool crosses(const CoxeterDiagram& d, const GeneratorSubset& a, const GeneratorSubset& b);

struct SplitterRecord {
    GeneratorSubset vertex;
    GeneratorSubset subset;
    VirtAbelianStructure structure;
    // Components of the diagram minus `subset` that meet the vertex, ordered
    // by smallest member. Splitting distributes the vertex over these.
    std::vector<GeneratorSubset> parts;
    bool minimal = false;
    // Subsets of the other minimal splitters of the same vertex that cross
    // this one, in (rank, subset) order. Filled by minimal_splitters.
    std::vector<GeneratorSubset> crossing_partners;
};

// Candidate splitters of the vertex: virtually abelian subsets that separate
// it in the full diagram and are compatible with the given incident edge
// sets. Ordered by (rank, subset).
std::vector<SplitterRecord> splitter_candidates(const CoxeterDiagram& d,
                                                const GeneratorSubset& vertex,
                                                const std::vector<GeneratorSubset>& edge_sets = {});

// Whether the candidate `a` has minimal Euclidean part: no candidate of the
// same vertex has a strictly smaller one. False when `a` is not a candidate.
bool is_minimal(const CoxeterDiagram& d, const GeneratorSubset& a, const GeneratorSubset& vertex,
                const std::vector<GeneratorSubset>& edge_sets = {});

// The minimal candidates, with one representative per Euclidean part: a
// candidate is dropped when a strictly smaller candidate has the same
// Euclidean part. Crossing partners are filled against the returned list.
std::vector<SplitterRecord> minimal_splitters(const CoxeterDiagram& d,
                                              const GeneratorSubset& vertex,
                                              const std::vector<GeneratorSubset>& edge_sets = {});

// Memoizing front end over minimal_splitters for one diagram. The refinement
// loops query the same (vertex, edge sets) pairs many times.
class SplitterEngine {
public:
    explicit SplitterEngine(std::shared_ptr<const CoxeterDiagram> diagram);

    const std::vector<SplitterRecord>& minimal(const GeneratorSubset& vertex,
                                               const std::vector<GeneratorSubset>& edge_sets);

    const CoxeterDiagram& diagram() const { return *diagram_; }
    const std::shared_ptr<const CoxeterDiagram>& diagram_ptr() const { return diagram_; }

private:
    using Key = std::pair<GeneratorSubset, std::vector<GeneratorSubset>>;
    std::shared_ptr<const CoxeterDiagram> diagram_;
    std::map<Key, std::vector<SplitterRecord>> cache_;
};

}  // namespace coxjsj
