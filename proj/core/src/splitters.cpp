#include "coxjsj/splitters.hpp"

#include <algorithm>

#include "coxjsj/errors.hpp"

namespace coxjsj {
namespace {

struct Fragment {
    GeneratorSubset set;
    IrreducibleType type;
};

bool coxeter_related(const CoxeterDiagram& d, int s, int t) {
    auto m = d.label(s, t);
    return !m || *m != 2;
}

// Enumerates the connected subsets of the non-commuting relation restricted
// to `within`, each exactly once, skipping every extension of a subset whose
// form is already indefinite. Each emitted subset is finite or affine, so
// the emitted list is exactly the possible components of virtually abelian
// subsets.
std::vector<Fragment> enumerate_fragments(const CoxeterDiagram& d, const GeneratorSubset& within) {
    std::vector<Fragment> fragments;
    const auto& idx = within.indices();

    std::vector<std::vector<int>> related(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (i != j && coxeter_related(d, idx[i], idx[j])) {
                related[i].push_back(static_cast<int>(j));
            }
        }
    }

    // Positions are into idx; `root` bounds the positions a branch may use.
    struct Frame {
        std::vector<int> subset;
        std::vector<int> ext;
    };
    auto extend = [&](auto&& self, int root, std::vector<int> subset,
                      std::vector<int> ext) -> void {
        GeneratorSubset as_set = GeneratorSubset::of([&] {
            std::vector<int> generators;
            generators.reserve(subset.size());
            for (int p : subset) generators.push_back(idx[static_cast<std::size_t>(p)]);
            return generators;
        }());
        IrreducibleType type = classify_irreducible(d, as_set);
        if (type.cls == TypeClass::Indefinite) return;
        fragments.push_back({std::move(as_set), type});

        std::vector<char> in_subset(idx.size(), 0);
        std::vector<char> touches_subset(idx.size(), 0);
        for (int p : subset) {
            in_subset[static_cast<std::size_t>(p)] = 1;
            for (int q : related[static_cast<std::size_t>(p)]) {
                touches_subset[static_cast<std::size_t>(q)] = 1;
            }
        }
        while (!ext.empty()) {
            int w = ext.front();
            ext.erase(ext.begin());
            std::vector<int> next_ext = ext;
            for (int q : related[static_cast<std::size_t>(w)]) {
                if (q > root && !in_subset[static_cast<std::size_t>(q)] &&
                    !touches_subset[static_cast<std::size_t>(q)]) {
                    next_ext.push_back(q);
                }
            }
            std::vector<int> next_subset = subset;
            next_subset.push_back(w);
            self(self, root, std::move(next_subset), std::move(next_ext));
        }
    };

    for (int root = 0; root < static_cast<int>(idx.size()); ++root) {
        std::vector<int> ext;
        for (int q : related[static_cast<std::size_t>(root)]) {
            if (q > root) ext.push_back(q);
        }
        extend(extend, root, {root}, std::move(ext));
    }
    return fragments;
}

VirtAbelianStructure structure_of_fragments(const std::vector<const Fragment*>& chosen) {
    VirtAbelianStructure s;
    for (const Fragment* f : chosen) {
        s.subset = s.subset.united(f->set);
        if (f->type.cls == TypeClass::Finite) {
            s.finite_part = s.finite_part.united(f->set);
        } else {
            s.rank += static_cast<int>(f->set.size()) - 1;
            s.e_of_a = s.e_of_a.united(f->set);
            s.euclidean_components.push_back(f->set);
        }
    }
    return s;
}

}  // namespace

std::vector<VirtAbelianStructure> virtually_abelian_subsets(const CoxeterDiagram& d,
                                                            const GeneratorSubset& within) {
    std::vector<Fragment> fragments = enumerate_fragments(d, within);
    std::sort(fragments.begin(), fragments.end(),
              [](const Fragment& a, const Fragment& b) { return a.set < b.set; });

    // Two fragments can coexist only when every pair across them commutes;
    // a non-commuting pair would merge them into one component.
    std::size_t n = fragments.size();
    std::vector<std::vector<char>> compatible(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool ok = fragments[i].set.intersected(fragments[j].set).empty();
            for (int s : fragments[i].set) {
                if (!ok) break;
                for (int t : fragments[j].set) {
                    auto m = d.label(s, t);
                    if (!m || *m != 2) {
                        ok = false;
                        break;
                    }
                }
            }
            compatible[i][j] = compatible[j][i] = ok ? 1 : 0;
        }
    }

    std::vector<VirtAbelianStructure> out;
    std::vector<const Fragment*> chosen;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        out.push_back(structure_of_fragments(chosen));
        for (std::size_t j = from; j < n; ++j) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Fragment* f) {
                return compatible[static_cast<std::size_t>(f - fragments.data())][j] != 0;
            });
            if (!ok) continue;
            chosen.push_back(&fragments[j]);
            self(self, j + 1);
            chosen.pop_back();
        }
    };
    grow(grow, 0);

    std::sort(out.begin(), out.end(),
              [](const VirtAbelianStructure& a, const VirtAbelianStructure& b) {
                  return a.subset < b.subset;
              });
    return out;
}

bool is_compatible_with_edges(const CoxeterDiagram& d, const GeneratorSubset& a,
                              const std::vector<GeneratorSubset>& edge_sets) {
    std::vector<GeneratorSubset> comps;
    bool comps_ready = false;
    for (const auto& e : edge_sets) {
        GeneratorSubset rest = e.minus(a);
        if (rest.empty()) continue;
        if (!comps_ready) {
            comps = components_minus(d, a);
            comps_ready = true;
        }
        bool in_one = std::any_of(comps.begin(), comps.end(), [&](const GeneratorSubset& k) {
            return rest.is_subset_of(k);
        });
        if (!in_one) return false;
    }
    return true;
}

bool crosses(const CoxeterDiagram& d, const GeneratorSubset& a, const GeneratorSubset& b) {
    return separates(d, a, b) && separates(d, b, a);
}

std::vector<SplitterRecord> splitter_candidates(const CoxeterDiagram& d,
                                                const GeneratorSubset& vertex,
                                                const std::vector<GeneratorSubset>& edge_sets) {
    std::vector<SplitterRecord> out;
    for (auto& s : virtually_abelian_subsets(d, vertex)) {
        if (!separates(d, s.subset, vertex)) continue;
        if (!is_compatible_with_edges(d, s.subset, edge_sets)) continue;
        SplitterRecord r;
        r.vertex = vertex;
        r.subset = s.subset;
        for (auto& k : components_minus(d, s.subset)) {
            if (!k.intersected(vertex).empty()) r.parts.push_back(std::move(k));
        }
        r.structure = std::move(s);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const SplitterRecord& a, const SplitterRecord& b) {
        return a.structure.rank != b.structure.rank ? a.structure.rank < b.structure.rank
                                                    : a.subset < b.subset;
    });
    return out;
}

namespace {

bool proper_subset(const GeneratorSubset& a, const GeneratorSubset& b) {
    return a != b && a.is_subset_of(b);
}

bool euclidean_part_minimal(const std::vector<SplitterRecord>& candidates,
                            const SplitterRecord& r) {
    return std::none_of(candidates.begin(), candidates.end(), [&](const SplitterRecord& b) {
        return proper_subset(b.structure.e_of_a, r.structure.e_of_a);
    });
}

}  // namespace

bool is_minimal(const CoxeterDiagram& d, const GeneratorSubset& a, const GeneratorSubset& vertex,
                const std::vector<GeneratorSubset>& edge_sets) {
    std::vector<SplitterRecord> candidates = splitter_candidates(d, vertex, edge_sets);
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](const SplitterRecord& r) { return r.subset == a; });
    if (it == candidates.end()) return false;
    return euclidean_part_minimal(candidates, *it);
}

std::vector<SplitterRecord> minimal_splitters(const CoxeterDiagram& d,
                                              const GeneratorSubset& vertex,
                                              const std::vector<GeneratorSubset>& edge_sets) {
    std::vector<SplitterRecord> candidates = splitter_candidates(d, vertex, edge_sets);
    std::vector<SplitterRecord> survivors;
    for (const SplitterRecord& r : candidates) {
        if (!euclidean_part_minimal(candidates, r)) continue;
        // One representative per Euclidean part: a strictly smaller candidate
        // with the same part generates a commensurable splitting subgroup.
        bool shadowed = std::any_of(candidates.begin(), candidates.end(),
                                    [&](const SplitterRecord& b) {
                                        return proper_subset(b.subset, r.subset) &&
                                               b.structure.e_of_a == r.structure.e_of_a;
                                    });
        if (shadowed) continue;
        survivors.push_back(r);
        survivors.back().minimal = true;
    }
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        for (std::size_t j = 0; j < survivors.size(); ++j) {
            if (i != j && crosses(d, survivors[i].subset, survivors[j].subset)) {
                survivors[i].crossing_partners.push_back(survivors[j].subset);
            }
        }
    }
    return survivors;
}

SplitterEngine::SplitterEngine(std::shared_ptr<const CoxeterDiagram> diagram)
    : diagram_(std::move(diagram)) {
    if (!diagram_) {
        throw ContractViolation("SplitterEngine requires a diagram");
    }
}

const std::vector<SplitterRecord>& SplitterEngine::minimal(
    const GeneratorSubset& vertex, const std::vector<GeneratorSubset>& edge_sets) {
    std::vector<GeneratorSubset> sorted_sets = edge_sets;
    std::sort(sorted_sets.begin(), sorted_sets.end());
    sorted_sets.erase(std::unique(sorted_sets.begin(), sorted_sets.end()), sorted_sets.end());
    Key key{vertex, sorted_sets};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(std::move(key), minimal_splitters(*diagram_, vertex, sorted_sets))
                 .first;
    }
    return it->second;
}

}  // namespace coxjsj
