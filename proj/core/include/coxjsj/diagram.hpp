#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coxjsj/subset.hpp"

namespace coxjsj {

// Presentation diagram of a Coxeter system. Vertices are the generators; an
// edge carries the finite order m(s,t) >= 2 of the product st. Pairs without
// an edge have infinite order. Generator order is fixed at construction and
// is the order used for all deterministic tie-breaking and output.
class CoxeterDiagram {
public:
    CoxeterDiagram() = default;
    explicit CoxeterDiagram(std::vector<std::string> generator_names);

    // Sets m(s,t) = m. Throws InputError if s == t, m < 2, or an edge with a
    // different label is already present. Setting the same label twice is ok.
    void add_edge(int s, int t, int m);
    void add_edge(const std::string& s, const std::string& t, int m);

    int generator_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& generator_names() const { return names_; }
    const std::string& name(int g) const { return names_.at(static_cast<std::size_t>(g)); }

    // Index of a generator name; throws InputError for unknown names.
    int index_of(const std::string& name) const;
    bool has_generator(const std::string& name) const;

    // m(s,t) if the pair spans an edge, nullopt when the order is infinite.
    std::optional<int> label(int s, int t) const;

    // Neighbors of g in the presentation diagram, ascending.
    const std::vector<int>& neighbors(int g) const;

    // All edges as (s, t, m) with s < t, ordered lexicographically.
    std::vector<std::tuple<int, int, int>> edges() const;

    GeneratorSubset all_generators() const;
    GeneratorSubset subset_of_names(const std::vector<std::string>& names) const;

    std::vector<std::string> names_of(const GeneratorSubset& subset) const;
    // "{a, b, c}" in index order; "{}" for the empty subset.
    std::string format_subset(const GeneratorSubset& subset) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_by_name_;
    std::map<std::pair<int, int>, int> labels_;  // keys have first < second
    std::vector<std::vector<int>> adjacency_;
};

// Diagram induced on a subset, generators renamed by restriction (original
// names kept, original relative order kept).
CoxeterDiagram induced_subdiagram(const CoxeterDiagram& d, const GeneratorSubset& subset);

// Connected components of the presentation diagram induced on `subset`,
// ordered by smallest member.
std::vector<GeneratorSubset> components(const CoxeterDiagram& d, const GeneratorSubset& subset);

// Components of the full diagram with `removed` deleted.
std::vector<GeneratorSubset> components_minus(const CoxeterDiagram& d,
                                              const GeneratorSubset& removed);

// Whether `a` separates `b` in the full presentation diagram: at least two
// elements of b - a lie in distinct components of the diagram minus a.
bool separates(const CoxeterDiagram& d, const GeneratorSubset& a, const GeneratorSubset& b);

}  // namespace coxjsj
