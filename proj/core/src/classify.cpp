#include "coxjsj/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "coxjsj/errors.hpp"

namespace coxjsj {
namespace {

constexpr int kInfinity = -1;

IrreducibleType finite_type(TypeFamily family, int param) {
    return {TypeClass::Finite, family, param};
}

IrreducibleType affine_type(TypeFamily family, int param) {
    return {TypeClass::Affine, family, param};
}

IrreducibleType indefinite() { return {TypeClass::Indefinite, TypeFamily::A, 0}; }

// Labeled graph of the non-commuting relation on one component: vertices are
// positions 0..n-1, edges carry the label m >= 3 or kInfinity.
struct ComponentGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::map<std::pair<int, int>, int> label;  // keys first < second

    int edge_count() const { return static_cast<int>(label.size()); }
    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

    bool all_labels_are(int m) const {
        return std::all_of(label.begin(), label.end(),
                           [m](const auto& kv) { return kv.second == m; });
    }

    bool has_label(int m) const {
        return std::any_of(label.begin(), label.end(),
                           [m](const auto& kv) { return kv.second == m; });
    }
};

ComponentGraph build_component_graph(const CoxeterDiagram& d, const GeneratorSubset& comp) {
    ComponentGraph g;
    g.n = static_cast<int>(comp.size());
    g.adj.resize(static_cast<std::size_t>(g.n));
    const auto& idx = comp.indices();
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            auto m = d.label(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
            int value = m ? *m : kInfinity;
            if (value == 2) continue;
            g.adj[static_cast<std::size_t>(i)].push_back(j);
            g.adj[static_cast<std::size_t>(j)].push_back(i);
            g.label.emplace(std::make_pair(i, j), value);
        }
    }
    return g;
}

int edge_label(const ComponentGraph& g, int u, int v) {
    return g.label.at(std::minmax(u, v));
}

// Edge labels read along a path graph, from the lexicographically smaller of
// the two traversal directions.
std::vector<int> canonical_path_labels(const ComponentGraph& g) {
    int start = -1;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 1) {
            start = v;
            break;
        }
    }
    std::vector<int> seq;
    int prev = -1;
    int cur = start;
    while (true) {
        int next = -1;
        for (int w : g.adj[static_cast<std::size_t>(cur)]) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        if (next < 0) break;
        seq.push_back(edge_label(g, cur, next));
        prev = cur;
        cur = next;
    }
    std::vector<int> rev(seq.rbegin(), seq.rend());
    return std::min(seq, rev);
}

IrreducibleType classify_path(const ComponentGraph& g) {
    std::vector<int> c = canonical_path_labels(g);
    int k = static_cast<int>(c.size());
    int n = g.n;
    auto all_threes = [&](int from, int to) {
        for (int i = from; i < to; ++i) {
            if (c[static_cast<std::size_t>(i)] != 3) return false;
        }
        return true;
    };
    if (all_threes(0, k)) return finite_type(TypeFamily::A, n);
    if (c[static_cast<std::size_t>(k - 1)] == 4 && all_threes(0, k - 1)) {
        return finite_type(TypeFamily::B, n);
    }
    if (c == std::vector<int>{3, 4, 3}) return finite_type(TypeFamily::F, 4);
    if (c == std::vector<int>{3, 5}) return finite_type(TypeFamily::H, 3);
    if (c == std::vector<int>{3, 3, 5}) return finite_type(TypeFamily::H, 4);
    if (c[0] == 4 && c[static_cast<std::size_t>(k - 1)] == 4 && all_threes(1, k - 1)) {
        return affine_type(TypeFamily::C, n - 1);
    }
    if (c == std::vector<int>{3, 3, 4, 3}) return affine_type(TypeFamily::F, 4);
    if (c == std::vector<int>{3, 6}) return affine_type(TypeFamily::G, 2);
    return indefinite();
}

IrreducibleType classify_single_branch(const ComponentGraph& g, int center) {
    // Arms: edge labels read from the center outward.
    std::vector<std::vector<int>> arms;
    for (int first : g.adj[static_cast<std::size_t>(center)]) {
        std::vector<int> arm{edge_label(g, center, first)};
        int prev = center;
        int cur = first;
        while (g.degree(cur) == 2) {
            int next = g.adj[static_cast<std::size_t>(cur)][0] == prev
                           ? g.adj[static_cast<std::size_t>(cur)][1]
                           : g.adj[static_cast<std::size_t>(cur)][0];
            arm.push_back(edge_label(g, cur, next));
            prev = cur;
            cur = next;
        }
        arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    auto arm_all_threes = [](const std::vector<int>& arm, std::size_t upto) {
        return std::all_of(arm.begin(), arm.begin() + static_cast<std::ptrdiff_t>(upto),
                           [](int m) { return m == 3; });
    };
    if (g.all_labels_are(3)) {
        int l1 = static_cast<int>(arms[0].size());
        int l2 = static_cast<int>(arms[1].size());
        int l3 = static_cast<int>(arms[2].size());
        if (l1 == 1 && l2 == 1) return finite_type(TypeFamily::D, l3 + 3);
        if (l1 == 1 && l2 == 2 && l3 == 2) return finite_type(TypeFamily::E, 6);
        if (l1 == 1 && l2 == 2 && l3 == 3) return finite_type(TypeFamily::E, 7);
        if (l1 == 1 && l2 == 2 && l3 == 4) return finite_type(TypeFamily::E, 8);
        if (l1 == 2 && l2 == 2 && l3 == 2) return affine_type(TypeFamily::E, 6);
        if (l1 == 1 && l2 == 3 && l3 == 3) return affine_type(TypeFamily::E, 7);
        if (l1 == 1 && l2 == 2 && l3 == 5) return affine_type(TypeFamily::E, 8);
        return indefinite();
    }
    // One label 4 at the far end of the long arm, everything else 3: the two
    // short arms are single 3-edges.
    if (arms[0] == std::vector<int>{3} && arms[1] == std::vector<int>{3} &&
        arms[2].back() == 4 && arm_all_threes(arms[2], arms[2].size() - 1)) {
        return affine_type(TypeFamily::B, g.n - 1);
    }
    return indefinite();
}

IrreducibleType classify_double_branch(const ComponentGraph& g, int b1, int b2) {
    if (!g.all_labels_are(3)) return indefinite();
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 1) continue;
        int attach = g.adj[static_cast<std::size_t>(v)][0];
        if (attach != b1 && attach != b2) return indefinite();
    }
    return affine_type(TypeFamily::D, g.n - 1);
}

}  // namespace

std::string IrreducibleType::name() const {
    if (cls == TypeClass::Indefinite) return "indefinite";
    std::string out = cls == TypeClass::Affine ? "~" : "";
    switch (family) {
        case TypeFamily::A: return out + "A" + std::to_string(param);
        case TypeFamily::B: return out + "B" + std::to_string(param);
        case TypeFamily::C: return out + "C" + std::to_string(param);
        case TypeFamily::D: return out + "D" + std::to_string(param);
        case TypeFamily::E: return out + "E" + std::to_string(param);
        case TypeFamily::F: return out + "F" + std::to_string(param);
        case TypeFamily::G: return out + "G" + std::to_string(param);
        case TypeFamily::H: return out + "H" + std::to_string(param);
        case TypeFamily::I: return out + "I2(" + std::to_string(param) + ")";
    }
    return "indefinite";
}

std::vector<GeneratorSubset> coxeter_graph_components(const CoxeterDiagram& d,
                                                      const GeneratorSubset& subset) {
    std::vector<GeneratorSubset> out;
    const auto& idx = subset.indices();
    std::vector<char> seen(idx.size(), 0);
    auto related = [&](int s, int t) {
        auto m = d.label(s, t);
        return !m || *m != 2;
    };
    for (std::size_t start = 0; start < idx.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::deque<std::size_t> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            comp.push_back(idx[i]);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                if (!seen[j] && related(idx[i], idx[j])) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        out.push_back(GeneratorSubset::of(std::move(comp)));
    }
    return out;
}

IrreducibleType classify_irreducible(const CoxeterDiagram& d, const GeneratorSubset& comp) {
    if (comp.empty()) {
        throw ContractViolation("classify_irreducible requires a nonempty component");
    }
    ComponentGraph g = build_component_graph(d, comp);
    if (g.n == 1) return finite_type(TypeFamily::A, 1);
    if (g.has_label(kInfinity)) {
        return g.n == 2 ? affine_type(TypeFamily::A, 1) : indefinite();
    }
    if (g.n == 2) return finite_type(TypeFamily::I, edge_label(g, 0, 1));

    int e = g.edge_count();
    if (e > g.n) return indefinite();
    if (e == g.n) {
        bool pure_cycle = g.all_labels_are(3);
        for (int v = 0; v < g.n && pure_cycle; ++v) pure_cycle = g.degree(v) == 2;
        return pure_cycle ? affine_type(TypeFamily::A, g.n - 1) : indefinite();
    }

    // Tree. Shapes with a vertex of degree >= 4 reduce to the 4-leaf star.
    int max_degree = 0;
    std::vector<int> branch_vertices;
    for (int v = 0; v < g.n; ++v) {
        max_degree = std::max(max_degree, g.degree(v));
        if (g.degree(v) >= 3) branch_vertices.push_back(v);
    }
    if (max_degree >= 4) {
        bool star = g.n == 5 && max_degree == 4 && branch_vertices.size() == 1 &&
                    g.all_labels_are(3);
        return star ? affine_type(TypeFamily::D, 4) : indefinite();
    }
    switch (branch_vertices.size()) {
        case 0: return classify_path(g);
        case 1: return classify_single_branch(g, branch_vertices[0]);
        case 2: return classify_double_branch(g, branch_vertices[0], branch_vertices[1]);
        default: return indefinite();
    }
}

std::vector<ComponentType> classify_components(const CoxeterDiagram& d,
                                               const GeneratorSubset& subset) {
    std::vector<ComponentType> out;
    for (auto& comp : coxeter_graph_components(d, subset)) {
        IrreducibleType type = classify_irreducible(d, comp);
        out.push_back({std::move(comp), type});
    }
    return out;
}

std::optional<VirtAbelianStructure> virtually_abelian_structure(const CoxeterDiagram& d,
                                                                const GeneratorSubset& subset) {
    VirtAbelianStructure s;
    s.subset = subset;
    for (auto& [comp, type] : classify_components(d, subset)) {
        switch (type.cls) {
            case TypeClass::Finite:
                s.finite_part = s.finite_part.united(comp);
                break;
            case TypeClass::Affine:
                s.rank += static_cast<int>(comp.size()) - 1;
                s.e_of_a = s.e_of_a.united(comp);
                s.euclidean_components.push_back(std::move(comp));
                break;
            case TypeClass::Indefinite:
                return std::nullopt;
        }
    }
    return s;
}

}  // namespace coxjsj
