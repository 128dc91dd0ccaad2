#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxjsj/diagram.hpp"
#include "coxjsj/subset.hpp"

namespace coxjsj {

enum class TypeClass { Finite, Affine, Indefinite };

enum class TypeFamily { A, B, C, D, E, F, G, H, I };

// Type of an irreducible Coxeter system. `param` is the subscript (rank for
// the lettered families, the edge label m for I2(m)).
struct IrreducibleType {
    TypeClass cls = TypeClass::Indefinite;
    TypeFamily family = TypeFamily::A;
    int param = 0;

    // "A3", "I2(5)", "~C2", "~F4", "indefinite", ...
    std::string name() const;

    friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
};

// Components of the subset under the relation m(s,t) != 2: two generators are
// adjacent when they do not commute, counting absent edges (infinite order)
// as adjacent. Ordered by smallest member. These are the direct factors of
// the standard subgroup generated by the subset.
std::vector<GeneratorSubset> coxeter_graph_components(const CoxeterDiagram& d,
                                                      const GeneratorSubset& subset);

// Classifies one such component as finite, affine, or indefinite by matching
// its labeled shape against the classification tables. Precondition: `comp`
// is nonempty and connected under the m != 2 relation.
IrreducibleType classify_irreducible(const CoxeterDiagram& d, const GeneratorSubset& comp);

struct ComponentType {
    GeneratorSubset component;
    IrreducibleType type;
};

// All components of `subset` with their types, ordered by smallest member.
std::vector<ComponentType> classify_components(const CoxeterDiagram& d,
                                               const GeneratorSubset& subset);

// Witness that the standard subgroup generated by `subset` is virtually
// abelian: every component is finite or affine. The affine components are the
// Euclidean components; their union E carries the free abelian part, of rank
// sum(|component| - 1).
struct VirtAbelianStructure {
    GeneratorSubset subset;
    GeneratorSubset finite_part;
    std::vector<GeneratorSubset> euclidean_components;
    GeneratorSubset e_of_a;
    int rank = 0;
};

// The structure above when the subgroup is virtually abelian, nullopt
// otherwise. The empty subset is virtually abelian of rank 0.
std::optional<VirtAbelianStructure> virtually_abelian_structure(const CoxeterDiagram& d,
                                                                const GeneratorSubset& subset);

}  // namespace coxjsj
