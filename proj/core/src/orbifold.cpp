#include "coxjsj/orbifold.hpp"

#include <algorithm>

#include "coxjsj/classify.hpp"
#include "coxjsj/errors.hpp"
#include "coxjsj/splitters.hpp"

namespace coxjsj {
namespace {

int degree_within(const CoxeterDiagram& d, int g, const GeneratorSubset& subset) {
    int deg = 0;
    for (int h : d.neighbors(g)) {
        if (subset.contains(h)) ++deg;
    }
    return deg;
}

int edge_count_within(const CoxeterDiagram& d, const GeneratorSubset& subset) {
    int count = 0;
    const auto& idx = subset.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (d.label(idx[i], idx[j])) ++count;
        }
    }
    return count;
}

// The two elements each side of a crossing pair keeps to itself must be an
// unrelated pair separated by the other side.
void verify_crossing_shape(const CoxeterDiagram& d, const GeneratorSubset& a,
                           const GeneratorSubset& b) {
    GeneratorSubset diff = a.minus(b);
    if (diff.size() != 2) {
        throw ContractViolation("crossing splitter " + d.format_subset(a) + " differs from " +
                                d.format_subset(b) + " in " + std::to_string(diff.size()) +
                                " generators, expected 2");
    }
    int a1 = diff.indices()[0];
    int a2 = diff.indices()[1];
    if (d.label(a1, a2)) {
        throw ContractViolation("generators " + d.name(a1) + " and " + d.name(a2) +
                                " of a crossing difference are related");
    }
    for (const auto& comp : components_minus(d, b)) {
        if (comp.contains(a1) && comp.contains(a2)) {
            throw ContractViolation("crossing difference {" + d.name(a1) + ", " + d.name(a2) +
                                    "} is not separated by " + d.format_subset(b));
        }
    }
}

OrbifoldShape analyze_quotient_shape(const CoxeterDiagram& d, const GeneratorSubset& t_part) {
    OrbifoldShape shape;
    std::vector<GeneratorSubset> comps = components(d, t_part);
    int edges = edge_count_within(d, t_part);
    int max_degree = 0;
    for (int g : t_part) max_degree = std::max(max_degree, degree_within(d, g, t_part));

    bool single_cycle = comps.size() == 1 && max_degree == 2 &&
                        edges == static_cast<int>(t_part.size()) && t_part.size() >= 4;
    if (single_cycle) {
        bool all_degree_two = std::all_of(t_part.begin(), t_part.end(), [&](int g) {
            return degree_within(d, g, t_part) == 2;
        });
        if (all_degree_two) {
            shape.kind = OrbifoldShape::Kind::Loop;
            shape.loop_length = static_cast<int>(t_part.size());
            return shape;
        }
    }

    bool paths_and_points = max_degree <= 2;
    for (const auto& comp : comps) {
        if (edge_count_within(d, comp) != static_cast<int>(comp.size()) - 1) {
            paths_and_points = false;
        }
    }
    if (!paths_and_points) {
        throw ContractViolation("quotient part " + d.format_subset(t_part) +
                                " is neither a single cycle nor a union of paths and points");
    }
    shape.kind = OrbifoldShape::Kind::PathsAndPoints;
    for (const auto& comp : comps) {
        const auto& idx = comp.indices();
        if (idx.size() == 1) {
            shape.paths.push_back({idx[0]});
            continue;
        }
        int start = -1;
        for (int g : comp) {
            if (degree_within(d, g, comp) == 1) {
                start = g;
                break;
            }
        }
        std::vector<int> path{start};
        int prev = -1;
        int cur = start;
        while (static_cast<int>(path.size()) < static_cast<int>(idx.size())) {
            for (int h : d.neighbors(cur)) {
                if (h != prev && comp.contains(h)) {
                    path.push_back(h);
                    prev = cur;
                    cur = h;
                    break;
                }
            }
        }
        shape.paths.push_back(std::move(path));
    }
    return shape;
}

// The amalgam of dihedral pieces along a path s1..sk: vertices {s_i, s_i+1}
// joined over {s_i+1}, with the path components of the quotient part chained
// by empty edges. Indices refer to the diagram induced on the quotient part.
GraphOfGroups build_free_decomposition(const CoxeterDiagram& d, const GeneratorSubset& t_part,
                                       const OrbifoldShape& shape) {
    auto induced = std::make_shared<const CoxeterDiagram>(induced_subdiagram(d, t_part));
    const auto& idx = t_part.indices();
    auto local_index = [&](int g) {
        return static_cast<int>(std::lower_bound(idx.begin(), idx.end(), g) - idx.begin());
    };
    std::vector<GeneratorSubset> vertices;
    std::vector<GogEdge> edges;
    std::vector<int> component_heads;
    for (const auto& path : shape.paths) {
        component_heads.push_back(static_cast<int>(vertices.size()));
        if (path.size() == 1) {
            vertices.push_back(GeneratorSubset::of({local_index(path[0])}));
            continue;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            vertices.push_back(
                GeneratorSubset::of({local_index(path[i]), local_index(path[i + 1])}));
            if (i > 0) {
                edges.push_back({static_cast<int>(vertices.size()) - 2,
                                 static_cast<int>(vertices.size()) - 1,
                                 GeneratorSubset::of({local_index(path[i])})});
            }
        }
    }
    for (std::size_t c = 1; c < component_heads.size(); ++c) {
        edges.push_back({component_heads[c - 1], component_heads[c], GeneratorSubset{}});
    }
    return GraphOfGroups(std::move(induced), std::move(vertices), std::move(edges));
}

}  // namespace

std::string OrbifoldShape::to_string() const {
    if (kind == Kind::Loop) return "loop(" + std::to_string(loop_length) + ")";
    return "paths-and-points";
}

VertexClassification classify_vertex(const CoxeterDiagram& d, const GeneratorSubset& vertex,
                                     const std::vector<GeneratorSubset>& edge_sets) {
    VertexClassification out;
    out.vertex = vertex;
    std::vector<SplitterRecord> records = minimal_splitters(d, vertex, edge_sets);
    const SplitterRecord* first_crossing = nullptr;
    for (const auto& r : records) {
        if (!r.crossing_partners.empty()) {
            first_crossing = &r;
            break;
        }
    }
    if (!first_crossing) {
        out.kind = VertexKind::Rigid;
        return out;
    }
    out.kind = VertexKind::Orbifold;

    OrbifoldStructure s;
    s.splitter_a = first_crossing->subset;
    s.splitter_b = first_crossing->crossing_partners.front();
    verify_crossing_shape(d, s.splitter_a, s.splitter_b);
    verify_crossing_shape(d, s.splitter_b, s.splitter_a);
    s.m_part = s.splitter_a.intersected(s.splitter_b);
    s.t_part = vertex.minus(s.m_part);

    for (int t : s.t_part) {
        for (int m : s.m_part) {
            auto label = d.label(t, m);
            if (!label || *label != 2) {
                throw ContractViolation("generators " + d.name(t) + " and " + d.name(m) +
                                        " do not commute across the quotient/common split");
            }
        }
    }
    if (!virtually_abelian_structure(d, s.m_part)) {
        throw ContractViolation("common part " + d.format_subset(s.m_part) +
                                " is not virtually abelian");
    }

    s.shape = analyze_quotient_shape(d, s.t_part);
    if (s.shape.kind == OrbifoldShape::Kind::Loop) {
        s.cls = OrbifoldClass::VirtuallySurface;
    } else {
        s.cls = OrbifoldClass::VirtuallyFree;
        s.free_decomposition = build_free_decomposition(d, s.t_part, s.shape);
    }

    // Every minimal-rank crossing pair must agree on the common part.
    int base_rank = first_crossing->structure.rank;
    for (const auto& r : records) {
        if (r.crossing_partners.empty() || r.structure.rank != base_rank) continue;
        for (const auto& partner : r.crossing_partners) {
            if (!(r.subset < partner)) continue;
            auto partner_record = std::find_if(
                records.begin(), records.end(),
                [&](const SplitterRecord& q) { return q.subset == partner; });
            if (partner_record == records.end() || partner_record->structure.rank != base_rank) {
                continue;
            }
            GeneratorSubset common = r.subset.intersected(partner);
            if (common != s.m_part) {
                s.diagnostics.push_back(
                    "crossing pair " + d.format_subset(r.subset) + " / " +
                    d.format_subset(partner) + " has common part " + d.format_subset(common) +
                    ", which differs from " + d.format_subset(s.m_part));
            }
        }
    }

    out.orbifold = std::move(s);
    return out;
}

std::vector<VertexClassification> classify_final_vertices(const GraphOfGroups& g) {
    std::vector<VertexClassification> out;
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        out.push_back(classify_vertex(g.diagram(), g.vertices()[static_cast<std::size_t>(vi)],
                                      g.incident_edge_sets(vi)));
    }
    return out;
}

CoxeterDiagram realize_orbifold(const CoxeterDiagram& t_diagram) {
    std::vector<GeneratorSubset> comps = components(t_diagram, t_diagram.all_generators());
    if (comps.empty()) {
        throw InputError("realize_orbifold requires a nonempty diagram");
    }
    for (const auto& comp : comps) {
        int edges = edge_count_within(t_diagram, comp);
        int max_degree = 0;
        for (int g : comp) max_degree = std::max(max_degree, degree_within(t_diagram, g, comp));
        if (max_degree > 2 || edges != static_cast<int>(comp.size()) - 1) {
            throw InputError("component " + t_diagram.format_subset(comp) +
                             " is not a path or a point");
        }
    }
    if (comps.size() == 1 && comps[0].size() < 3) {
        throw InputError(
            "a connected quotient diagram must be a path on at least three generators; the "
            "attaching pair of a shorter path cannot be unrelated");
    }

    std::size_t n = comps.size();
    std::vector<int> a_end(n);
    std::vector<int> b_end(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& comp = comps[i];
        if (comp.size() == 1) {
            a_end[i] = b_end[i] = comp.indices()[0];
            continue;
        }
        std::vector<int> leaves;
        for (int g : comp) {
            if (degree_within(t_diagram, g, comp) == 1) leaves.push_back(g);
        }
        a_end[i] = leaves[0];
        b_end[i] = leaves[1];
    }

    std::vector<std::string> names = t_diagram.generator_names();
    std::vector<int> x_gen(n);
    std::vector<int> y_gen(n);
    auto fresh = [&](std::string base) {
        while (std::find(names.begin(), names.end(), base) != names.end()) base += "_";
        names.push_back(base);
        return static_cast<int>(names.size()) - 1;
    };
    for (std::size_t i = 0; i < n; ++i) {
        x_gen[i] = fresh("x" + std::to_string(i));
        y_gen[i] = fresh("y" + std::to_string(i));
    }

    CoxeterDiagram out(names);
    for (const auto& [s, t, m] : t_diagram.edges()) out.add_edge(s, t, m);
    for (std::size_t i = 0; i < n; ++i) {
        int b = b_end[i];
        int a_next = a_end[(i + 1) % n];
        out.add_edge(x_gen[i], y_gen[i], 2);
        out.add_edge(x_gen[i], b, 2);
        out.add_edge(y_gen[i], b, 2);
        if (a_next != b) {
            out.add_edge(x_gen[i], a_next, 2);
            out.add_edge(y_gen[i], a_next, 2);
        }
    }
    return out;
}

}  // namespace coxjsj
