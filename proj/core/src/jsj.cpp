#include "coxjsj/jsj.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <tuple>

#include "coxjsj/errors.hpp"

namespace coxjsj {
namespace {

struct Collapse {
    int edge = 0;
    int survivor = 0;
    int absorbed = 0;
};

// The collapsible edge to contract next: set equal to an endpoint subset,
// ties broken by (absorbed subset, surviving subset, edge index).
std::optional<Collapse> pick_collapse(const std::vector<GeneratorSubset>& vertices,
                                      const std::vector<GogEdge>& edges) {
    std::optional<Collapse> best;
    const GeneratorSubset* best_absorbed = nullptr;
    const GeneratorSubset* best_survivor = nullptr;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const GogEdge& e = edges[static_cast<std::size_t>(i)];
        const GeneratorSubset& su = vertices[static_cast<std::size_t>(e.u)];
        const GeneratorSubset& sv = vertices[static_cast<std::size_t>(e.v)];
        int absorbed;
        int survivor;
        if (e.set == su && e.set == sv) {
            survivor = std::min(e.u, e.v);
            absorbed = std::max(e.u, e.v);
        } else if (e.set == su) {
            absorbed = e.u;
            survivor = e.v;
        } else if (e.set == sv) {
            absorbed = e.v;
            survivor = e.u;
        } else {
            continue;
        }
        const GeneratorSubset& sa = vertices[static_cast<std::size_t>(absorbed)];
        const GeneratorSubset& ss = vertices[static_cast<std::size_t>(survivor)];
        if (!best || std::tie(sa, ss) < std::tie(*best_absorbed, *best_survivor)) {
            best = Collapse{i, survivor, absorbed};
            best_absorbed = &vertices[static_cast<std::size_t>(absorbed)];
            best_survivor = &vertices[static_cast<std::size_t>(survivor)];
        }
    }
    return best;
}

// Contracts the edge, folding `absorbed` into `survivor` (its subset is
// contained in the survivor's). Returns the old-to-new vertex index map.
std::vector<int> absorb_vertex(std::vector<GeneratorSubset>& vertices, std::vector<GogEdge>& edges,
                               const Collapse& c) {
    edges.erase(edges.begin() + c.edge);
    std::vector<int> remap(vertices.size(), -1);
    int next = 0;
    for (int o = 0; o < static_cast<int>(vertices.size()); ++o) {
        if (o != c.absorbed) remap[static_cast<std::size_t>(o)] = next++;
    }
    remap[static_cast<std::size_t>(c.absorbed)] = remap[static_cast<std::size_t>(c.survivor)];
    for (auto& e : edges) {
        e.u = remap[static_cast<std::size_t>(e.u)];
        e.v = remap[static_cast<std::size_t>(e.v)];
    }
    vertices.erase(vertices.begin() + c.absorbed);
    return remap;
}

struct LocalDecomposition {
    std::vector<GeneratorSubset> pieces;
    std::vector<GogEdge> internal_edges;
    // One entry per incident ambient edge instance, in input order: which
    // piece the edge is currently attached to.
    std::vector<std::pair<int, GeneratorSubset>> boundary;
};

// The core refinement loop. Deterministic mode picks the lexicographically
// smallest piece that has an eligible record, then that piece's first
// eligible record; randomized mode picks uniformly over all eligible
// (piece, record) pairs.
LocalDecomposition refine_vertex(SplitterEngine& engine, const GeneratorSubset& vertex,
                                 const std::vector<GeneratorSubset>& boundary_sets,
                                 std::mt19937_64* rng, int stage,
                                 std::vector<SplitEvent>* events) {
    const CoxeterDiagram& d = engine.diagram();
    LocalDecomposition local;
    local.pieces.push_back(vertex);
    for (const auto& set : boundary_sets) local.boundary.emplace_back(0, set);

    while (true) {
        struct Choice {
            int piece;
            const SplitterRecord* record;
        };
        std::vector<Choice> eligible;
        std::vector<int> order(local.pieces.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto& pa = local.pieces[static_cast<std::size_t>(a)];
            const auto& pb = local.pieces[static_cast<std::size_t>(b)];
            return pa != pb ? pa < pb : a < b;
        });
        for (int pi : order) {
            std::vector<GeneratorSubset> constraints;
            for (const auto& e : local.internal_edges) {
                if (e.u == pi || e.v == pi) constraints.push_back(e.set);
            }
            for (const auto& [p, set] : local.boundary) {
                if (p == pi) constraints.push_back(set);
            }
            for (const auto& r : engine.minimal(local.pieces[static_cast<std::size_t>(pi)],
                                                constraints)) {
                if (r.crossing_partners.empty()) eligible.push_back({pi, &r});
            }
        }
        if (eligible.empty()) break;
        const Choice& choice =
            rng ? eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(
                      *rng)]
                : eligible.front();

        const GeneratorSubset splitter = choice.record->subset;
        const GeneratorSubset old_piece = local.pieces[static_cast<std::size_t>(choice.piece)];
        if (events) events->push_back({stage, old_piece, splitter});

        std::vector<GeneratorSubset> new_subsets;
        for (const auto& k : choice.record->parts) {
            new_subsets.push_back(splitter.united(k.intersected(old_piece)));
        }
        if (new_subsets.size() < 2) {
            throw ContractViolation("eligible splitter fails to separate its piece");
        }
        std::vector<int> new_index(new_subsets.size());
        new_index[0] = choice.piece;
        for (std::size_t k = 1; k < new_subsets.size(); ++k) {
            new_index[k] = static_cast<int>(local.pieces.size() + k - 1);
        }
        auto reattach = [&](const GeneratorSubset& set) {
            for (std::size_t k = 0; k < new_subsets.size(); ++k) {
                if (set.is_subset_of(new_subsets[k])) return new_index[k];
            }
            throw ContractViolation("edge set " + d.format_subset(set) +
                                    " fits no piece after splitting along " +
                                    d.format_subset(splitter));
        };
        for (auto& e : local.internal_edges) {
            if (e.u == choice.piece) e.u = reattach(e.set);
            if (e.v == choice.piece) e.v = reattach(e.set);
        }
        for (auto& [p, set] : local.boundary) {
            if (p == choice.piece) p = reattach(set);
        }
        for (std::size_t k = 1; k < new_subsets.size(); ++k) {
            local.internal_edges.push_back({choice.piece, new_index[k], splitter});
        }
        local.pieces[static_cast<std::size_t>(choice.piece)] = new_subsets[0];
        local.pieces.insert(local.pieces.end(), new_subsets.begin() + 1, new_subsets.end());

        while (auto c = pick_collapse(local.pieces, local.internal_edges)) {
            std::vector<int> remap = absorb_vertex(local.pieces, local.internal_edges, *c);
            for (auto& [p, set] : local.boundary) p = remap[static_cast<std::size_t>(p)];
        }
    }
    return local;
}

void require_vertex_amenable(const CoxeterDiagram& d, const GeneratorSubset& vertex,
                             const std::vector<GeneratorSubset>& edge_sets) {
    for (const auto& a : virtually_abelian_subsets(d, vertex)) {
        for (const auto& e : edge_sets) {
            if (separates(d, a.subset, e)) {
                throw ContractViolation("vertex " + d.format_subset(vertex) +
                                        " is not amenable to refinement: " +
                                        d.format_subset(a.subset) + " separates edge set " +
                                        d.format_subset(e));
            }
        }
    }
}

GraphOfGroups next_stage_impl(const GraphOfGroups& g, SplitterEngine& engine,
                              std::mt19937_64* rng, int stage, std::vector<SplitEvent>* events) {
    int nv = g.vertex_count();
    std::vector<std::vector<GeneratorSubset>> boundary_sets(static_cast<std::size_t>(nv));
    std::vector<std::array<int, 2>> instance_pos(static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
        const GogEdge& e = g.edges()[static_cast<std::size_t>(i)];
        auto& at_u = boundary_sets[static_cast<std::size_t>(e.u)];
        auto& at_v = boundary_sets[static_cast<std::size_t>(e.v)];
        instance_pos[static_cast<std::size_t>(i)] = {static_cast<int>(at_u.size()),
                                                     static_cast<int>(at_v.size())};
        at_u.push_back(e.set);
        at_v.push_back(e.set);
    }

    std::vector<int> order(static_cast<std::size_t>(nv));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& va = g.vertices()[static_cast<std::size_t>(a)];
        const auto& vb = g.vertices()[static_cast<std::size_t>(b)];
        return va != vb ? va < vb : a < b;
    });
    std::vector<LocalDecomposition> locals(static_cast<std::size_t>(nv));
    for (int vi : order) {
        locals[static_cast<std::size_t>(vi)] =
            refine_vertex(engine, g.vertices()[static_cast<std::size_t>(vi)],
                          boundary_sets[static_cast<std::size_t>(vi)], rng, stage, events);
    }

    std::vector<int> offset(static_cast<std::size_t>(nv), 0);
    std::vector<GeneratorSubset> vertices;
    std::vector<GogEdge> edges;
    for (int vi = 0; vi < nv; ++vi) {
        const auto& local = locals[static_cast<std::size_t>(vi)];
        offset[static_cast<std::size_t>(vi)] = static_cast<int>(vertices.size());
        vertices.insert(vertices.end(), local.pieces.begin(), local.pieces.end());
        for (const auto& e : local.internal_edges) {
            edges.push_back({e.u + offset[static_cast<std::size_t>(vi)],
                             e.v + offset[static_cast<std::size_t>(vi)], e.set});
        }
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        const GogEdge& e = g.edges()[static_cast<std::size_t>(i)];
        const auto& pos = instance_pos[static_cast<std::size_t>(i)];
        int pu = locals[static_cast<std::size_t>(e.u)]
                     .boundary[static_cast<std::size_t>(pos[0])]
                     .first;
        int pv = locals[static_cast<std::size_t>(e.v)]
                     .boundary[static_cast<std::size_t>(pos[1])]
                     .first;
        edges.push_back({offset[static_cast<std::size_t>(e.u)] + pu,
                         offset[static_cast<std::size_t>(e.v)] + pv, e.set});
    }
    return reduce(GraphOfGroups(g.diagram_ptr(), std::move(vertices), std::move(edges)))
        .normalized();
}

}  // namespace

GraphOfGroups split_vertex(const GraphOfGroups& g, int vertex, const GeneratorSubset& splitter) {
    const CoxeterDiagram& d = g.diagram();
    if (vertex < 0 || vertex >= g.vertex_count()) {
        throw ContractViolation("split_vertex: vertex index out of range");
    }
    const GeneratorSubset& v = g.vertices()[static_cast<std::size_t>(vertex)];
    if (!splitter.is_subset_of(v)) {
        throw ContractViolation("splitter " + d.format_subset(splitter) +
                                " is not contained in the vertex " + d.format_subset(v));
    }
    if (!virtually_abelian_structure(d, splitter)) {
        throw ContractViolation("splitter " + d.format_subset(splitter) +
                                " is not virtually abelian");
    }
    std::vector<GeneratorSubset> parts;
    for (auto& k : components_minus(d, splitter)) {
        if (!k.intersected(v).empty()) parts.push_back(std::move(k));
    }
    if (parts.size() < 2) {
        throw ContractViolation("splitter " + d.format_subset(splitter) +
                                " does not separate the vertex " + d.format_subset(v));
    }
    std::vector<GeneratorSubset> new_subsets;
    for (const auto& k : parts) new_subsets.push_back(splitter.united(k.intersected(v)));
    std::vector<int> new_index(new_subsets.size());
    new_index[0] = vertex;
    for (std::size_t k = 1; k < new_subsets.size(); ++k) {
        new_index[k] = g.vertex_count() + static_cast<int>(k) - 1;
    }
    std::vector<GeneratorSubset> vertices = g.vertices();
    std::vector<GogEdge> edges = g.edges();
    for (auto& e : edges) {
        for (int* end : {&e.u, &e.v}) {
            if (*end != vertex) continue;
            bool placed = false;
            for (std::size_t k = 0; k < new_subsets.size(); ++k) {
                if (e.set.is_subset_of(new_subsets[k])) {
                    *end = new_index[k];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                throw ContractViolation("edge set " + d.format_subset(e.set) +
                                        " is not compatible with splitting along " +
                                        d.format_subset(splitter));
            }
        }
    }
    for (std::size_t k = 1; k < new_subsets.size(); ++k) {
        edges.push_back({vertex, new_index[k], splitter});
    }
    vertices[static_cast<std::size_t>(vertex)] = new_subsets[0];
    vertices.insert(vertices.end(), new_subsets.begin() + 1, new_subsets.end());
    return reduce(GraphOfGroups(g.diagram_ptr(), std::move(vertices), std::move(edges)));
}

GraphOfGroups reduce(const GraphOfGroups& g) {
    std::vector<GeneratorSubset> vertices = g.vertices();
    std::vector<GogEdge> edges = g.edges();
    while (auto c = pick_collapse(vertices, edges)) {
        absorb_vertex(vertices, edges, *c);
    }
    return GraphOfGroups(g.diagram_ptr(), std::move(vertices), std::move(edges));
}

std::vector<AmenabilityViolation> check_amenable(const GraphOfGroups& g) {
    const CoxeterDiagram& d = g.diagram();
    std::vector<AmenabilityViolation> violations;
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        const GeneratorSubset& v = g.vertices()[static_cast<std::size_t>(vi)];
        std::vector<GeneratorSubset> incident = g.incident_edge_sets(vi);
        incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
        if (incident.empty()) continue;
        for (const auto& a : virtually_abelian_subsets(d, v)) {
            for (const auto& e : incident) {
                if (separates(d, a.subset, e)) violations.push_back({v, e, a.subset});
            }
        }
    }
    return violations;
}

GraphOfGroups m_jsj_decomposition(std::shared_ptr<const CoxeterDiagram> diagram,
                                  const GeneratorSubset& vertex,
                                  const std::vector<GeneratorSubset>& edge_sets) {
    require_vertex_amenable(*diagram, vertex, edge_sets);
    SplitterEngine engine(diagram);
    LocalDecomposition local = refine_vertex(engine, vertex, edge_sets, nullptr, 0, nullptr);
    return GraphOfGroups(std::move(diagram), std::move(local.pieces),
                         std::move(local.internal_edges));
}

GraphOfGroups next_stage(const GraphOfGroups& g) {
    std::vector<AmenabilityViolation> violations = check_amenable(g);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw ContractViolation(
            "decomposition is not amenable to refinement: " + g.diagram().format_subset(v.splitter) +
            " inside vertex " + g.diagram().format_subset(v.vertex) + " separates edge set " +
            g.diagram().format_subset(v.edge_set));
    }
    SplitterEngine engine(g.diagram_ptr());
    return next_stage_impl(g, engine, nullptr, 0, nullptr);
}

StageTrace jsj(std::shared_ptr<const CoxeterDiagram> diagram, const JsjOptions& opts) {
    SplitterEngine engine(diagram);
    std::optional<std::mt19937_64> rng;
    if (opts.seed) rng.emplace(*opts.seed);

    StageTrace trace;
    trace.stages.push_back(GraphOfGroups::trivial(diagram).normalized());
    int cap = diagram->generator_count() + 2;
    for (int stage = 1; stage <= cap; ++stage) {
        GraphOfGroups next = next_stage_impl(trace.stages.back(), engine,
                                             rng ? &*rng : nullptr, stage, &trace.splits);
        bool stable = next.family() == trace.stages.back().family();
        trace.diagnostics.push_back("stage " + std::to_string(stage) + ": " +
                                    std::to_string(next.vertex_count()) + " vertices, " +
                                    std::to_string(next.edge_count()) + " edges");
        trace.stages.push_back(std::move(next));
        if (stable) return trace;
    }
    throw ContractViolation("refinement failed to stabilize within " + std::to_string(cap) +
                            " stages");
}

}  // namespace coxjsj
