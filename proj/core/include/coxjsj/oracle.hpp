#pragma once

#include <memory>
#include <vector>

#include "coxjsj/diagram.hpp"
#include "coxjsj/graph_of_groups.hpp"
#include "coxjsj/splitters.hpp"
#include "coxjsj/subset.hpp"

namespace coxjsj {

enum class SpectrumClass { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite };

// Classifies the bilinear form of the subset (entries -cos(pi/m), with -1
// for unrelated pairs) by its eigenvalue spectrum. On a component of the
// non-commuting relation this is an independent check of the shape tables:
// positive definite means finite type, semidefinite with a kernel means
// affine type. The empty subset counts as positive definite.
SpectrumClass gram_spectrum_classify(const CoxeterDiagram& d, const GeneratorSubset& subset,
                                     double tol = 1e-9);

// Spectral counterpart of the table-driven test: the standard subgroup is
// virtually abelian exactly when the whole form is positive semidefinite.
bool spectral_virtually_abelian(const CoxeterDiagram& d, const GeneratorSubset& subset,
                                double tol = 1e-9);

// Brute-force reimplementation of minimal splitter enumeration: sweeps all
// 2^|vertex| subsets, testing each with the spectral form classifier and its
// own breadth-first searches. Refuses vertices above 16 generators.
std::vector<SplitterRecord> exhaustive_splitters(const CoxeterDiagram& d,
                                                 const GeneratorSubset& vertex,
                                                 const std::vector<GeneratorSubset>& edge_sets = {});

// All terminal decompositions reachable by applying eligible splits in every
// possible order, memoized on the canonical decomposition form. A singleton
// result certifies order independence. Refuses diagrams above 9 generators.
std::vector<VertexFamily> exhaustive_jsj(std::shared_ptr<const CoxeterDiagram> diagram);

// Whether the group has exactly one end: the diagram is connected, the group
// is infinite, and no finite-type subset disconnects the diagram. Refuses
// diagrams above 16 generators.
bool is_one_ended(const CoxeterDiagram& d);

}  // namespace coxjsj
