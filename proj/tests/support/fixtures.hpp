#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coxjsj/classify.hpp"
#include "coxjsj/diagram.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/splitters.hpp"

namespace fixtures {

using coxjsj::CoxeterDiagram;
using coxjsj::GeneratorSubset;

// Right-angled K_{2,4}: removing the hub pair {a, c} isolates the four
// leaves, giving a fourfold star splitting with no crossings.
inline std::shared_ptr<const CoxeterDiagram> star() {
    CoxeterDiagram d({"a", "b", "c", "d", "e", "f"});
    for (const char* hub : {"a", "c"}) {
        for (const char* leaf : {"b", "d", "e", "f"}) d.add_edge(hub, leaf, 2);
    }
    return std::make_shared<const CoxeterDiagram>(std::move(d));
}

// Two near-complete blocks {a, b, x, y} and {u, v, c, d} bridged by the
// edges x-u and y-v, all labels 3. The bridge pairs {x, v} and {u, y} are
// the unique crossing splitters; {x, y} and {u, v} split off the blocks.
inline std::shared_ptr<const CoxeterDiagram> cycle8() {
    CoxeterDiagram d({"a", "x", "u", "c", "d", "v", "y", "b"});
    auto e = [&d](const char* s, const char* t) { d.add_edge(s, t, 3); };
    e("a", "x");
    e("x", "u");
    e("u", "c");
    e("c", "d");
    e("d", "v");
    e("v", "y");
    e("y", "b");
    e("b", "a");
    e("a", "y");
    e("b", "x");
    e("u", "d");
    e("v", "c");
    return std::make_shared<const CoxeterDiagram>(std::move(d));
}

// A four-cycle of unrelated-diagonal generators 1..4 (a hyperbolic surface
// style block), commuting with the unrelated pair {7, 8}, plus a tail
// {5, 6} attached to {7, 8} only. The decomposition splits over {7, 8} and
// leaves an orbifold vertex with quotient loop 1-3-2-4.
inline std::shared_ptr<const CoxeterDiagram> e5() {
    CoxeterDiagram d({"1", "2", "3", "4", "5", "6", "7", "8"});
    d.add_edge("1", "3", 3);
    d.add_edge("3", "2", 3);
    d.add_edge("2", "4", 3);
    d.add_edge("4", "1", 3);
    for (const char* m : {"7", "8"}) {
        for (const char* t : {"1", "2", "3", "4"}) d.add_edge(m, t, 2);
    }
    d.add_edge("5", "7", 2);
    d.add_edge("5", "8", 2);
    d.add_edge("6", "7", 2);
    d.add_edge("6", "8", 2);
    d.add_edge("5", "6", 3);
    return std::make_shared<const CoxeterDiagram>(std::move(d));
}

inline GeneratorSubset names(const CoxeterDiagram& d, std::initializer_list<const char*> ns) {
    std::vector<std::string> v;
    v.reserve(ns.size());
    for (const char* n : ns) v.emplace_back(n);
    return d.subset_of_names(v);
}

// Random diagram: 2..max_generators generators, each pair related with
// probability ~0.6, labels weighted toward 2 and 3 so finite, affine and
// indefinite pieces all occur.
inline CoxeterDiagram random_diagram(std::mt19937_64& rng, int max_generators) {
    std::uniform_int_distribution<int> size_dist(2, max_generators);
    int n = size_dist(rng);
    std::vector<std::string> generator_names;
    generator_names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) generator_names.push_back("g" + std::to_string(i));
    CoxeterDiagram d(std::move(generator_names));
    static constexpr int kLabels[] = {2, 2, 2, 3, 3, 3, 3, 4, 5, 6};
    std::uniform_int_distribution<int> label_dist(0, 9);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng) < 0.6) d.add_edge(i, j, kLabels[label_dist(rng)]);
        }
    }
    return d;
}

// Random disjoint union of 1..3 paths/points with 4..8 generators in total;
// a single component is always a path of length >= 4.
inline CoxeterDiagram random_path_union(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> comp_dist(1, 3);
    int comps = comp_dist(rng);
    std::uniform_int_distribution<int> total_dist(std::max(4, comps), 8);
    int total = total_dist(rng);
    std::vector<int> sizes(static_cast<std::size_t>(comps), 1);
    for (int extra = total - comps; extra > 0; --extra) {
        std::uniform_int_distribution<int> pick(0, comps - 1);
        ++sizes[static_cast<std::size_t>(pick(rng))];
    }
    std::vector<std::string> generator_names;
    for (int i = 0; i < total; ++i) generator_names.push_back("t" + std::to_string(i));
    CoxeterDiagram d(std::move(generator_names));
    static constexpr int kLabels[] = {3, 3, 3, 2, 4, 5, 7};
    std::uniform_int_distribution<int> label_dist(0, 6);
    int at = 0;
    for (int size : sizes) {
        for (int i = 0; i + 1 < size; ++i) {
            d.add_edge(at + i, at + i + 1, kLabels[label_dist(rng)]);
        }
        at += size;
    }
    return d;
}

struct CrossingCheckResult {
    bool ok = true;
    std::string detail;
};

// The structural facts every crossing pair of minimal splitters of a vertex
// must satisfy: mutual separation; each difference is an unrelated pair
// separated by the other splitter; equal free abelian rank; and each
// splitter distributes the vertex over exactly two components.
inline CrossingCheckResult check_crossing_pair(const CoxeterDiagram& d,
                                               const GeneratorSubset& vertex,
                                               const GeneratorSubset& a,
                                               const GeneratorSubset& b) {
    using coxjsj::components_minus;
    using coxjsj::separates;
    using coxjsj::virtually_abelian_structure;

    auto fail = [&](const std::string& what) {
        return CrossingCheckResult{false, what + " for pair " + d.format_subset(a) + " / " +
                                              d.format_subset(b) + " at vertex " +
                                              d.format_subset(vertex)};
    };
    if (!separates(d, a, b) || !separates(d, b, a)) return fail("pair does not mutually separate");

    for (const auto& [first, second] : {std::pair{a, b}, std::pair{b, a}}) {
        GeneratorSubset diff = first.minus(second);
        if (diff.size() != 2) return fail("difference is not a pair");
        int g1 = diff.indices()[0];
        int g2 = diff.indices()[1];
        if (d.label(g1, g2)) return fail("difference pair is related");
        for (const auto& comp : components_minus(d, second)) {
            if (comp.contains(g1) && comp.contains(g2)) {
                return fail("difference pair is not separated");
            }
        }
    }

    auto sa = virtually_abelian_structure(d, a);
    auto sb = virtually_abelian_structure(d, b);
    if (!sa || !sb) return fail("splitter is not virtually abelian");
    if (sa->rank != sb->rank) return fail("ranks differ");

    for (const auto& splitter : {a, b}) {
        int meeting = 0;
        for (const auto& comp : components_minus(d, splitter)) {
            if (!comp.intersected(vertex).empty()) ++meeting;
        }
        if (meeting != 2) {
            return fail("vertex meets " + std::to_string(meeting) +
                        " components instead of two");
        }
    }
    return {};
}

// Every component of the non-commuting relation of every subset must get the
// same verdict from the shape tables and from the spectral form. Returns a
// description of the first mismatch, empty when all agree.
inline std::string tables_vs_spectrum_mismatch(const CoxeterDiagram& d, double tol = 1e-9) {
    int n = d.generator_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> chosen;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) chosen.push_back(i);
        }
        GeneratorSubset subset = GeneratorSubset::of(std::move(chosen));
        for (const auto& comp : coxjsj::coxeter_graph_components(d, subset)) {
            coxjsj::IrreducibleType type = coxjsj::classify_irreducible(d, comp);
            coxjsj::SpectrumClass spectrum = coxjsj::gram_spectrum_classify(d, comp, tol);
            bool match =
                (type.cls == coxjsj::TypeClass::Finite &&
                 spectrum == coxjsj::SpectrumClass::PositiveDefinite) ||
                (type.cls == coxjsj::TypeClass::Affine &&
                 spectrum == coxjsj::SpectrumClass::PositiveSemidefiniteSingular) ||
                (type.cls == coxjsj::TypeClass::Indefinite &&
                 spectrum == coxjsj::SpectrumClass::Indefinite);
            if (!match) {
                return "component " + d.format_subset(comp) + " is " + type.name() +
                       " by table but spectrum class " +
                       std::to_string(static_cast<int>(spectrum));
            }
        }
    }
    return {};
}

}  // namespace fixtures
