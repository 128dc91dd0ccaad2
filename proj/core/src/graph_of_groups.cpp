#include "coxjsj/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "coxjsj/errors.hpp"

namespace coxjsj {

GraphOfGroups::GraphOfGroups(std::shared_ptr<const CoxeterDiagram> diagram,
                             std::vector<GeneratorSubset> vertices, std::vector<GogEdge> edges)
    : diagram_(std::move(diagram)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (!diagram_) {
        throw ContractViolation("GraphOfGroups requires a diagram");
    }
    for (const auto& e : edges_) {
        if (e.u < 0 || e.u >= vertex_count() || e.v < 0 || e.v >= vertex_count() || e.u == e.v) {
            throw ContractViolation("decomposition edge endpoints out of range");
        }
    }
}

GraphOfGroups GraphOfGroups::trivial(std::shared_ptr<const CoxeterDiagram> diagram) {
    GeneratorSubset all = diagram->all_generators();
    return GraphOfGroups(std::move(diagram), {all}, {});
}

std::vector<GeneratorSubset> GraphOfGroups::incident_edge_sets(int vertex) const {
    std::vector<GeneratorSubset> out;
    for (const auto& e : edges_) {
        if (e.u == vertex || e.v == vertex) out.push_back(e.set);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexFamily GraphOfGroups::family() const {
    GraphOfGroups n = normalized();
    VertexFamily f;
    f.vertices = n.vertices_;
    f.edges.reserve(n.edges_.size());
    for (const auto& e : n.edges_) f.edges.emplace_back(e.u, e.v, e.set);
    return f;
}

std::vector<std::string> GraphOfGroups::validate() const {
    std::vector<std::string> findings;
    const CoxeterDiagram& d = *diagram_;

    for (const auto& e : edges_) {
        if (!e.set.is_subset_of(vertices_[static_cast<std::size_t>(e.u)]) ||
            !e.set.is_subset_of(vertices_[static_cast<std::size_t>(e.v)])) {
            findings.push_back("edge set " + d.format_subset(e.set) +
                               " not contained in both endpoints");
        }
    }

    if (vertex_count() > 0) {
        if (edge_count() != vertex_count() - 1) {
            findings.push_back("not a tree: " + std::to_string(vertex_count()) + " vertices, " +
                               std::to_string(edge_count()) + " edges");
        }
        std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        int reached = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            ++reached;
            for (const auto& e : edges_) {
                int other = e.u == v ? e.v : e.v == v ? e.u : -1;
                if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
                    seen[static_cast<std::size_t>(other)] = 1;
                    queue.push_back(other);
                }
            }
        }
        if (reached != vertex_count()) {
            findings.push_back("decomposition graph is disconnected");
        }
    }

    for (const auto& [s, t, m] : d.edges()) {
        bool covered = std::any_of(vertices_.begin(), vertices_.end(), [&](const auto& v) {
            return v.contains(s) && v.contains(t);
        });
        if (!covered) {
            findings.push_back("diagram edge {" + d.name(s) + ", " + d.name(t) +
                               "} not inside any vertex");
        }
    }

    for (int s = 0; s < d.generator_count(); ++s) {
        std::vector<int> holders;
        for (int v = 0; v < vertex_count(); ++v) {
            if (vertices_[static_cast<std::size_t>(v)].contains(s)) holders.push_back(v);
        }
        if (holders.empty()) {
            findings.push_back("generator " + d.name(s) + " not carried by any vertex");
            continue;
        }
        std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
        std::deque<int> queue{holders.front()};
        seen[static_cast<std::size_t>(holders.front())] = 1;
        std::size_t reached = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            ++reached;
            for (const auto& e : edges_) {
                if (!e.set.contains(s)) continue;
                int other = e.u == v ? e.v : e.v == v ? e.u : -1;
                if (other >= 0 && !seen[static_cast<std::size_t>(other)] &&
                    vertices_[static_cast<std::size_t>(other)].contains(s)) {
                    seen[static_cast<std::size_t>(other)] = 1;
                    queue.push_back(other);
                }
            }
        }
        if (reached != holders.size()) {
            findings.push_back("vertices carrying generator " + d.name(s) +
                               " do not span a connected subtree");
        }
    }

    return findings;
}

bool GraphOfGroups::is_reduced() const {
    return std::none_of(edges_.begin(), edges_.end(), [this](const GogEdge& e) {
        return e.set == vertices_[static_cast<std::size_t>(e.u)] ||
               e.set == vertices_[static_cast<std::size_t>(e.v)];
    });
}

GraphOfGroups GraphOfGroups::normalized() const {
    std::vector<int> order(static_cast<std::size_t>(vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [this](int a, int b) {
        const auto& va = vertices_[static_cast<std::size_t>(a)];
        const auto& vb = vertices_[static_cast<std::size_t>(b)];
        return va != vb ? va < vb : a < b;
    });
    std::vector<int> position(static_cast<std::size_t>(vertex_count()));
    for (int p = 0; p < vertex_count(); ++p) {
        position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    }
    std::vector<GeneratorSubset> vertices;
    vertices.reserve(vertices_.size());
    for (int p = 0; p < vertex_count(); ++p) {
        vertices.push_back(vertices_[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])]);
    }
    std::vector<GogEdge> edges = edges_;
    for (auto& e : edges) {
        int u = position[static_cast<std::size_t>(e.u)];
        int v = position[static_cast<std::size_t>(e.v)];
        e.u = std::min(u, v);
        e.v = std::max(u, v);
    }
    std::sort(edges.begin(), edges.end(), [](const GogEdge& a, const GogEdge& b) {
        return std::tie(a.u, a.v, a.set) < std::tie(b.u, b.v, b.set);
    });
    return GraphOfGroups(diagram_, std::move(vertices), std::move(edges));
}

std::string GraphOfGroups::describe() const {
    std::ostringstream os;
    os << "vertices:\n";
    for (int v = 0; v < vertex_count(); ++v) {
        os << "  " << v << ": " << diagram_->format_subset(vertices_[static_cast<std::size_t>(v)])
           << "\n";
    }
    if (!edges_.empty()) {
        os << "edges:\n";
        for (const auto& e : edges_) {
            os << "  " << e.u << " -- " << e.v << "  " << diagram_->format_subset(e.set) << "\n";
        }
    }
    return os.str();
}

std::string VertexFamily::to_string(const CoxeterDiagram& d) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << " ";
        os << d.format_subset(vertices[i]);
    }
    os << " |";
    for (const auto& [u, v, set] : edges) {
        os << " " << u << "-" << v << ":" << d.format_subset(set);
    }
    return os.str();
}

}  // namespace coxjsj
