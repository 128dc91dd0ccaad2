#include "coxjsj/render.hpp"

#include <sstream>

#include <json.hpp>

namespace coxjsj {
namespace {

using nlohmann::json;

json subset_names(const CoxeterDiagram& d, const GeneratorSubset& subset) {
    json out = json::array();
    for (int g : subset) out.push_back(d.name(g));
    return out;
}

json stage_json(const GraphOfGroups& g) {
    const CoxeterDiagram& d = g.diagram();
    json vertices = json::array();
    for (const auto& v : g.vertices()) vertices.push_back(subset_names(d, v));
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"between", {e.u, e.v}}, {"set", subset_names(d, e.set)}});
    }
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

}  // namespace

std::string trace_to_json(const StageTrace& trace,
                          const std::vector<VertexClassification>& classifications) {
    const GraphOfGroups& final_stage = trace.final_stage();
    const CoxeterDiagram& d = final_stage.diagram();

    json doc;
    doc["generators"] = json::array();
    for (const auto& name : d.generator_names()) doc["generators"].push_back(name);
    doc["edges"] = json::array();
    for (const auto& [s, t, m] : d.edges()) {
        doc["edges"].push_back({{"s", d.name(s)}, {"t", d.name(t)}, {"m", m}});
    }
    doc["stages"] = json::array();
    for (const auto& stage : trace.stages) doc["stages"].push_back(stage_json(stage));

    json final_json = stage_json(final_stage);
    json classes = json::array();
    for (const auto& c : classifications) {
        json entry;
        entry["vertex"] = subset_names(d, c.vertex);
        if (c.kind == VertexKind::Rigid) {
            entry["kind"] = "rigid";
        } else {
            entry["kind"] = "orbifold";
            entry["t"] = subset_names(d, c.orbifold->t_part);
            entry["m"] = subset_names(d, c.orbifold->m_part);
            entry["shape"] = c.orbifold->shape.to_string();
        }
        classes.push_back(std::move(entry));
    }
    final_json["vertex_classifications"] = std::move(classes);
    doc["final"] = std::move(final_json);
    return doc.dump(2);
}

std::string stage_to_dot(const GraphOfGroups& g, int stage_index) {
    const CoxeterDiagram& d = g.diagram();
    auto label = [&](const GeneratorSubset& subset) {
        std::string out;
        for (int gen : subset) {
            if (!out.empty()) out += ",";
            out += d.name(gen);
        }
        return out;
    };
    std::ostringstream os;
    os << "graph stage" << stage_index << " {\n";
    os << "  node [shape=box];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"" << label(g.vertices()[static_cast<std::size_t>(v)])
           << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << label(e.set) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace coxjsj
