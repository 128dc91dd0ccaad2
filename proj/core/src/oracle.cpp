#include "coxjsj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numbers>
#include <set>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "coxjsj/classify.hpp"
#include "coxjsj/errors.hpp"
#include "coxjsj/jsj.hpp"

namespace coxjsj {
namespace {

Eigen::MatrixXd gram_matrix(const CoxeterDiagram& d, const GeneratorSubset& subset) {
    const auto& idx = subset.indices();
    Eigen::MatrixXd m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            auto label = d.label(idx[i], idx[j]);
            double entry = label ? -std::cos(std::numbers::pi / *label) : -1.0;
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry;
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = entry;
        }
    }
    return m;
}

// Independent connectivity workhorse for the brute-force sweep, driven by a
// pair predicate instead of the diagram's adjacency lists.
template <typename Related>
std::vector<std::vector<int>> predicate_components(const std::vector<int>& elements,
                                                   Related related) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(elements.size(), 0);
    for (std::size_t start = 0; start < elements.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::deque<std::size_t> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            comp.push_back(elements[i]);
            for (std::size_t j = 0; j < elements.size(); ++j) {
                if (!seen[j] && related(elements[i], elements[j])) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> diagram_components_without(const CoxeterDiagram& d,
                                                         const GeneratorSubset& removed) {
    std::vector<int> elements;
    for (int g = 0; g < d.generator_count(); ++g) {
        if (!removed.contains(g)) elements.push_back(g);
    }
    return predicate_components(elements, [&](int s, int t) { return d.label(s, t).has_value(); });
}

bool brute_separates(const CoxeterDiagram& d, const GeneratorSubset& a,
                     const GeneratorSubset& b) {
    GeneratorSubset rest = b.minus(a);
    if (rest.size() < 2) return false;
    int touched = 0;
    for (const auto& comp : diagram_components_without(d, a)) {
        if (std::any_of(comp.begin(), comp.end(), [&](int g) { return rest.contains(g); })) {
            ++touched;
        }
    }
    return touched >= 2;
}

struct BruteCandidate {
    GeneratorSubset subset;
    VirtAbelianStructure structure;
};

// Spectral virtually-abelian analysis of one subset, component by component.
std::optional<VirtAbelianStructure> brute_structure(const CoxeterDiagram& d,
                                                    const GeneratorSubset& subset) {
    VirtAbelianStructure s;
    s.subset = subset;
    auto comps = predicate_components(subset.indices(), [&](int x, int y) {
        auto m = d.label(x, y);
        return !m || *m != 2;
    });
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (auto& comp : comps) {
        GeneratorSubset cs = GeneratorSubset::of(comp);
        switch (gram_spectrum_classify(d, cs)) {
            case SpectrumClass::PositiveDefinite:
                s.finite_part = s.finite_part.united(cs);
                break;
            case SpectrumClass::PositiveSemidefiniteSingular:
                s.rank += static_cast<int>(cs.size()) - 1;
                s.e_of_a = s.e_of_a.united(cs);
                s.euclidean_components.push_back(std::move(cs));
                break;
            case SpectrumClass::Indefinite:
                return std::nullopt;
        }
    }
    return s;
}

}  // namespace

SpectrumClass gram_spectrum_classify(const CoxeterDiagram& d, const GeneratorSubset& subset,
                                     double tol) {
    if (subset.empty()) return SpectrumClass::PositiveDefinite;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram_matrix(d, subset),
                                                          Eigen::EigenvaluesOnly);
    double smallest = solver.eigenvalues()(0);
    if (smallest < -tol) return SpectrumClass::Indefinite;
    if (smallest <= tol) return SpectrumClass::PositiveSemidefiniteSingular;
    return SpectrumClass::PositiveDefinite;
}

bool spectral_virtually_abelian(const CoxeterDiagram& d, const GeneratorSubset& subset,
                                double tol) {
    return gram_spectrum_classify(d, subset, tol) != SpectrumClass::Indefinite;
}

std::vector<SplitterRecord> exhaustive_splitters(const CoxeterDiagram& d,
                                                 const GeneratorSubset& vertex,
                                                 const std::vector<GeneratorSubset>& edge_sets) {
    if (vertex.size() > 16) {
        throw OracleRefusal("exhaustive splitter sweep refuses vertices above 16 generators, got " +
                            std::to_string(vertex.size()));
    }
    const auto& idx = vertex.indices();
    std::vector<BruteCandidate> candidates;
    for (std::uint32_t mask = 0; mask < (1u << idx.size()); ++mask) {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (mask & (1u << i)) chosen.push_back(idx[i]);
        }
        GeneratorSubset a = GeneratorSubset::of(std::move(chosen));
        auto structure = brute_structure(d, a);
        if (!structure) continue;
        if (!brute_separates(d, a, vertex)) continue;
        bool compatible = true;
        for (const auto& e : edge_sets) {
            GeneratorSubset rest = e.minus(a);
            if (rest.empty()) continue;
            auto comps = diagram_components_without(d, a);
            bool in_one = std::any_of(comps.begin(), comps.end(), [&](const auto& comp) {
                return std::all_of(rest.begin(), rest.end(), [&](int g) {
                    return std::find(comp.begin(), comp.end(), g) != comp.end();
                });
            });
            if (!in_one) {
                compatible = false;
                break;
            }
        }
        if (!compatible) continue;
        candidates.push_back({std::move(a), std::move(*structure)});
    }

    std::vector<SplitterRecord> survivors;
    for (const auto& c : candidates) {
        bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const auto& b) {
            return b.structure.e_of_a != c.structure.e_of_a &&
                   b.structure.e_of_a.is_subset_of(c.structure.e_of_a);
        });
        if (!minimal) continue;
        bool shadowed = std::any_of(candidates.begin(), candidates.end(), [&](const auto& b) {
            return b.subset != c.subset && b.subset.is_subset_of(c.subset) &&
                   b.structure.e_of_a == c.structure.e_of_a;
        });
        if (shadowed) continue;
        SplitterRecord r;
        r.vertex = vertex;
        r.subset = c.subset;
        r.structure = c.structure;
        r.minimal = true;
        for (auto& comp : diagram_components_without(d, c.subset)) {
            GeneratorSubset k = GeneratorSubset::of(comp);
            if (!k.intersected(vertex).empty()) r.parts.push_back(std::move(k));
        }
        std::sort(r.parts.begin(), r.parts.end());
        survivors.push_back(std::move(r));
    }
    std::sort(survivors.begin(), survivors.end(), [](const auto& a, const auto& b) {
        return a.structure.rank != b.structure.rank ? a.structure.rank < b.structure.rank
                                                    : a.subset < b.subset;
    });
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        for (std::size_t j = 0; j < survivors.size(); ++j) {
            if (i == j) continue;
            if (brute_separates(d, survivors[i].subset, survivors[j].subset) &&
                brute_separates(d, survivors[j].subset, survivors[i].subset)) {
                survivors[i].crossing_partners.push_back(survivors[j].subset);
            }
        }
    }
    return survivors;
}

std::vector<VertexFamily> exhaustive_jsj(std::shared_ptr<const CoxeterDiagram> diagram) {
    if (diagram->generator_count() > 9) {
        throw OracleRefusal("exhaustive split-order sweep refuses diagrams above 9 generators, "
                            "got " +
                            std::to_string(diagram->generator_count()));
    }
    SplitterEngine engine(diagram);
    std::set<VertexFamily> seen;
    std::set<VertexFamily> terminals;
    std::vector<GraphOfGroups> work;

    GraphOfGroups start = GraphOfGroups::trivial(diagram).normalized();
    seen.insert(start.family());
    work.push_back(std::move(start));

    while (!work.empty()) {
        GraphOfGroups g = std::move(work.back());
        work.pop_back();
        bool terminal = true;
        for (int vi = 0; vi < g.vertex_count(); ++vi) {
            const auto& records = engine.minimal(g.vertices()[static_cast<std::size_t>(vi)],
                                                 g.incident_edge_sets(vi));
            for (const auto& r : records) {
                if (!r.crossing_partners.empty()) continue;
                terminal = false;
                GraphOfGroups next = split_vertex(g, vi, r.subset).normalized();
                VertexFamily fam = next.family();
                if (seen.insert(std::move(fam)).second) {
                    work.push_back(std::move(next));
                }
            }
        }
        if (terminal) terminals.insert(g.family());
    }
    return {terminals.begin(), terminals.end()};
}

bool is_one_ended(const CoxeterDiagram& d) {
    int n = d.generator_count();
    if (n == 0) return false;
    if (n > 16) {
        throw OracleRefusal("end count sweep refuses diagrams above 16 generators, got " +
                            std::to_string(n));
    }
    if (diagram_components_without(d, GeneratorSubset{}).size() != 1) return false;
    std::vector<GeneratorSubset> factors = coxeter_graph_components(d, d.all_generators());
    bool infinite = std::any_of(factors.begin(), factors.end(), [&](const GeneratorSubset& comp) {
        return gram_spectrum_classify(d, comp) != SpectrumClass::PositiveDefinite;
    });
    if (!infinite) return false;

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> chosen;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) chosen.push_back(i);
        }
        if (static_cast<int>(chosen.size()) == n) continue;
        // Finite-type subsets contain no unrelated pair; skip the eigensolve
        // for the (typically many) masks that do.
        bool has_unrelated_pair = false;
        for (std::size_t i = 0; i < chosen.size() && !has_unrelated_pair; ++i) {
            for (std::size_t j = i + 1; j < chosen.size(); ++j) {
                if (!d.label(chosen[i], chosen[j])) {
                    has_unrelated_pair = true;
                    break;
                }
            }
        }
        if (has_unrelated_pair) continue;
        GeneratorSubset a = GeneratorSubset::of(std::move(chosen));
        if (gram_spectrum_classify(d, a) != SpectrumClass::PositiveDefinite) continue;
        if (diagram_components_without(d, a).size() >= 2) return false;
    }
    return true;
}

}  // namespace coxjsj
