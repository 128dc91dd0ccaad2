#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxjsj/classify.hpp"
#include "coxjsj/diagram.hpp"
#include "coxjsj/errors.hpp"
#include "coxjsj/io.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/orbifold.hpp"
#include "coxjsj/render.hpp"
#include "coxjsj/splitters.hpp"

namespace {

using namespace coxjsj;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

std::string describe_record(const CoxeterDiagram& d, const SplitterRecord& r) {
    std::string out = d.format_subset(r.subset) + " rank " + std::to_string(r.structure.rank) +
                      " E = " + d.format_subset(r.structure.e_of_a);
    if (!r.crossing_partners.empty()) {
        out += " crosses";
        for (const auto& p : r.crossing_partners) out += " " + d.format_subset(p);
    }
    return out;
}

int run_classify(const std::string& file, const std::vector<std::string>& subset_names) {
    auto d = load_diagram_file(file);
    GeneratorSubset subset =
        subset_names.empty() ? d.all_generators() : d.subset_of_names(subset_names);
    auto structure = virtually_abelian_structure(d, subset);
    if (structure) {
        std::cout << "virtually abelian, rank " << structure->rank << ", E = "
                  << d.format_subset(structure->e_of_a) << "\n";
    } else {
        std::cout << "not virtually abelian\n";
    }
    auto typed = classify_components(d, subset);
    if (!typed.empty()) {
        std::cout << "components:\n";
        for (const auto& [comp, type] : typed) {
            std::cout << "  " << d.format_subset(comp) << ": " << type.name() << "\n";
        }
    }
    return kExitOk;
}

int run_splitters(const std::string& file, int stage) {
    auto d = std::make_shared<const CoxeterDiagram>(load_diagram_file(file));
    StageTrace trace = jsj(d);
    if (stage < 0 || stage >= static_cast<int>(trace.stages.size())) {
        std::cerr << "stage " << stage << " out of range; the run has stages 0.."
                  << trace.stages.size() - 1 << "\n";
        return kExitInput;
    }
    const GraphOfGroups& g = trace.stages[static_cast<std::size_t>(stage)];
    std::cout << "stage " << stage << ": " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges\n";
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        const auto& v = g.vertices()[static_cast<std::size_t>(vi)];
        std::cout << "vertex " << d->format_subset(v) << ":\n";
        auto records = minimal_splitters(*d, v, g.incident_edge_sets(vi));
        if (records.empty()) {
            std::cout << "  (none)\n";
            continue;
        }
        for (const auto& r : records) std::cout << "  " << describe_record(*d, r) << "\n";
    }
    return kExitOk;
}

// Invariants every finished run must satisfy; violations are internal errors.
std::vector<std::string> runtime_findings(const StageTrace& trace) {
    std::vector<std::string> findings;
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
        const GraphOfGroups& g = trace.stages[i];
        for (const auto& f : g.validate()) {
            findings.push_back("stage " + std::to_string(i) + ": " + f);
        }
        if (!g.is_reduced()) {
            findings.push_back("stage " + std::to_string(i) + ": decomposition is not reduced");
        }
        for (const auto& v : check_amenable(g)) {
            findings.push_back("stage " + std::to_string(i) + ": " +
                               g.diagram().format_subset(v.splitter) + " inside vertex " +
                               g.diagram().format_subset(v.vertex) + " separates edge set " +
                               g.diagram().format_subset(v.edge_set));
        }
    }
    return findings;
}

void print_final(const StageTrace& trace, const std::vector<VertexClassification>& classes) {
    const GraphOfGroups& g = trace.final_stage();
    const CoxeterDiagram& d = g.diagram();
    std::cout << "final decomposition (" << trace.stages.size() << " stages):\n";
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        const auto& c = classes[static_cast<std::size_t>(vi)];
        std::cout << "  vertex " << vi << ": " << d.format_subset(c.vertex);
        if (c.kind == VertexKind::Rigid) {
            std::cout << "  [rigid]";
        } else {
            std::cout << "  [orbifold: t = " << d.format_subset(c.orbifold->t_part)
                      << ", m = " << d.format_subset(c.orbifold->m_part) << ", "
                      << c.orbifold->shape.to_string() << "]";
        }
        std::cout << "\n";
    }
    for (const auto& e : g.edges()) {
        std::cout << "  edge " << e.u << " -- " << e.v << "  " << d.format_subset(e.set) << "\n";
    }
}

int run_jsj(const std::string& file, bool with_trace, bool as_json,
            const std::string& dot_dir, std::optional<std::uint64_t> seed) {
    auto d = std::make_shared<const CoxeterDiagram>(load_diagram_file(file));
    JsjOptions opts;
    opts.seed = seed;
    StageTrace trace = jsj(d, opts);

    std::vector<std::string> findings = runtime_findings(trace);
    if (!findings.empty()) {
        for (const auto& f : findings) std::cerr << "invariant violation: " << f << "\n";
        return kExitInvariant;
    }
    auto classes = classify_final_vertices(trace.final_stage());

    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (std::size_t i = 0; i < trace.stages.size(); ++i) {
            std::filesystem::path path =
                std::filesystem::path(dot_dir) / ("stage" + std::to_string(i) + ".dot");
            std::ofstream out(path);
            out << stage_to_dot(trace.stages[i], static_cast<int>(i));
        }
    }
    if (as_json) {
        std::cout << trace_to_json(trace, classes) << "\n";
        return kExitOk;
    }
    if (with_trace) {
        for (std::size_t i = 0; i < trace.stages.size(); ++i) {
            std::cout << "stage " << i << ":\n" << trace.stages[i].describe();
        }
        for (const auto& s : trace.splits) {
            std::cout << "split (stage " << s.stage << "): "
                      << d->format_subset(s.vertex) << " along " << d->format_subset(s.splitter)
                      << "\n";
        }
    }
    print_final(trace, classes);
    for (const auto& c : classes) {
        if (c.orbifold) {
            for (const auto& diag : c.orbifold->diagnostics) {
                std::cout << "note: " << diag << "\n";
            }
        }
    }
    return kExitOk;
}

bool same_records(const std::vector<SplitterRecord>& a, const std::vector<SplitterRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].subset != b[i].subset || a[i].structure.rank != b[i].structure.rank ||
            a[i].structure.e_of_a != b[i].structure.e_of_a ||
            a[i].crossing_partners != b[i].crossing_partners) {
            return false;
        }
    }
    return true;
}

int run_oracle(const std::string& file) {
    auto d = std::make_shared<const CoxeterDiagram>(load_diagram_file(file));
    bool disagreement = false;
    auto report = [&](const std::string& name, const std::string& status) {
        std::cout << "check " << name << ": " << status << "\n";
    };

    StageTrace trace = jsj(d);
    const GraphOfGroups& final_stage = trace.final_stage();

    // Shape tables against the spectral form, on every subset of every final
    // vertex.
    for (int vi = 0; vi < final_stage.vertex_count(); ++vi) {
        const auto& v = final_stage.vertices()[static_cast<std::size_t>(vi)];
        std::string name = "tables-vs-spectrum " + d->format_subset(v);
        if (v.size() > 16) {
            report(name, "skipped (vertex above 16 generators)");
            continue;
        }
        bool ok = true;
        const auto& idx = v.indices();
        for (std::uint32_t mask = 0; mask < (1u << idx.size()); ++mask) {
            std::vector<int> chosen;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (mask & (1u << i)) chosen.push_back(idx[i]);
            }
            GeneratorSubset a = GeneratorSubset::of(std::move(chosen));
            if (virtually_abelian_structure(*d, a).has_value() !=
                spectral_virtually_abelian(*d, a)) {
                report(name, "DISAGREEMENT on subset " + d->format_subset(a));
                ok = false;
                disagreement = true;
                break;
            }
        }
        if (ok) report(name, "ok");
    }

    // Splitter enumeration against the brute-force sweep.
    auto check_splitters = [&](const GeneratorSubset& v,
                               const std::vector<GeneratorSubset>& edge_sets,
                               const std::string& name) {
        if (v.size() > 16) {
            report(name, "skipped (vertex above 16 generators)");
            return;
        }
        auto fast = minimal_splitters(*d, v, edge_sets);
        auto brute = exhaustive_splitters(*d, v, edge_sets);
        if (same_records(fast, brute)) {
            report(name, "ok");
        } else {
            report(name, "DISAGREEMENT");
            disagreement = true;
        }
    };
    check_splitters(d->all_generators(), {}, "splitters-vs-sweep (whole group)");
    for (int vi = 0; vi < final_stage.vertex_count(); ++vi) {
        const auto& v = final_stage.vertices()[static_cast<std::size_t>(vi)];
        check_splitters(v, final_stage.incident_edge_sets(vi),
                        "splitters-vs-sweep " + d->format_subset(v));
    }

    // Order independence of the full run.
    if (d->generator_count() > 9) {
        report("order-independence", "skipped (diagram above 9 generators)");
    } else {
        auto terminals = exhaustive_jsj(d);
        if (terminals.size() == 1 && terminals.front() == final_stage.family()) {
            report("order-independence", "ok");
        } else {
            report("order-independence",
                   "DISAGREEMENT (" + std::to_string(terminals.size()) + " terminal forms)");
            disagreement = true;
        }
    }

    return disagreement ? kExitInvariant : kExitOk;
}

int run_generate(const std::string& file) {
    CoxeterDiagram t = load_diagram_file(file);
    std::cout << serialize_diagram(realize_orbifold(t));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal visible decompositions of Coxeter groups over virtually abelian "
                 "subgroups"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> subset_names;
    auto* classify_cmd =
        app.add_subcommand("classify", "Classify a standard subgroup from the diagram");
    classify_cmd->add_option("file", file, "diagram file")->required();
    classify_cmd->add_option("--subset", subset_names, "generator names (default: all)")
        ->delimiter(',');

    int stage = 0;
    auto* splitters_cmd =
        app.add_subcommand("splitters", "List minimal splitters of each vertex of a stage");
    splitters_cmd->add_option("file", file, "diagram file")->required();
    splitters_cmd->add_option("--stage", stage, "stage index (default 0)");

    bool with_trace = false;
    bool as_json = false;
    std::string dot_dir;
    std::optional<std::uint64_t> seed;
    auto* jsj_cmd = app.add_subcommand("jsj", "Compute the maximal decomposition");
    jsj_cmd->add_option("file", file, "diagram file")->required();
    jsj_cmd->add_flag("--trace", with_trace, "print every stage and split");
    jsj_cmd->add_flag("--json", as_json, "print the run as JSON");
    jsj_cmd->add_option("--dot", dot_dir, "write one Graphviz file per stage into this directory");
    jsj_cmd->add_option("--seed", seed, "randomize tie-breaking with this seed");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "Cross-check the run against brute-force reimplementations");
    oracle_cmd->add_option("file", file, "diagram file")->required();

    std::string orbifold_file;
    auto* generate_cmd = app.add_subcommand("generate", "Construct example diagrams");
    generate_cmd->add_option("--orbifold", orbifold_file,
                             "build a diagram realizing this quotient diagram")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return run_classify(file, subset_names);
        if (splitters_cmd->parsed()) return run_splitters(file, stage);
        if (jsj_cmd->parsed()) return run_jsj(file, with_trace, as_json, dot_dir, seed);
        if (oracle_cmd->parsed()) return run_oracle(file);
        if (generate_cmd->parsed()) return run_generate(orbifold_file);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const OracleRefusal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ContractViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
