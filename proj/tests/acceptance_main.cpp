// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Time limits and tolerances are pinned here.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxjsj/classify.hpp"
#include "coxjsj/diagram.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/orbifold.hpp"
#include "coxjsj/splitters.hpp"
#include "support/fixtures.hpp"

using coxjsj::CoxeterDiagram;
using coxjsj::GeneratorSubset;
using coxjsj::GogEdge;
using coxjsj::GraphOfGroups;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& what, bool ok, const std::string& detail = {}) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

template <typename Body>
void criterion(int number, const std::string& what, Body&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(number, what, false, std::string("exception: ") + e.what());
    }
}

std::string timing(double elapsed) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << elapsed << "s";
    return out.str();
}

void criterion_1() {
    const std::string what = "fourfold star splitting of the right-angled K_{2,4}";
    criterion(1, what, [&] {
        auto start = Clock::now();
        auto d = fixtures::star();
        auto family = coxjsj::jsj(d).final_stage().family();
        GeneratorSubset hub = fixtures::names(*d, {"a", "c"});
        GraphOfGroups expected(
            d,
            {fixtures::names(*d, {"a", "b", "c"}), fixtures::names(*d, {"a", "c", "d"}),
             fixtures::names(*d, {"a", "c", "e"}), fixtures::names(*d, {"a", "c", "f"})},
            {GogEdge{0, 1, hub}, GogEdge{0, 2, hub}, GogEdge{0, 3, hub}});
        double elapsed = seconds_since(start);
        bool ok = family == expected.family() && elapsed < 1.0;
        report(1, what, ok, timing(elapsed));
    });
}

void criterion_2() {
    const std::string what = "bridged blocks: decomposition, minimal splitters, crossing pair";
    criterion(2, what, [&] {
        auto start = Clock::now();
        auto d = fixtures::cycle8();

        auto family = coxjsj::jsj(d).final_stage().family();
        GraphOfGroups expected(
            d,
            {fixtures::names(*d, {"a", "x", "y", "b"}), fixtures::names(*d, {"x", "u", "v", "y"}),
             fixtures::names(*d, {"u", "c", "d", "v"})},
            {GogEdge{0, 1, fixtures::names(*d, {"x", "y"})},
             GogEdge{1, 2, fixtures::names(*d, {"u", "v"})}});
        bool ok = family == expected.family();

        auto records = coxjsj::minimal_splitters(*d, d->all_generators());
        GeneratorSubset xv = fixtures::names(*d, {"x", "v"});
        GeneratorSubset xy = fixtures::names(*d, {"x", "y"});
        GeneratorSubset uv = fixtures::names(*d, {"u", "v"});
        GeneratorSubset uy = fixtures::names(*d, {"u", "y"});
        ok = ok && records.size() == 4 && records[0].subset == xv && records[1].subset == xy &&
             records[2].subset == uv && records[3].subset == uy;
        ok = ok && records[0].crossing_partners == std::vector<GeneratorSubset>{uy} &&
             records[1].crossing_partners.empty() && records[2].crossing_partners.empty() &&
             records[3].crossing_partners == std::vector<GeneratorSubset>{xv};

        double elapsed = seconds_since(start);
        ok = ok && elapsed < 1.0;
        report(2, what, ok, timing(elapsed));
    });
}

void criterion_3() {
    const std::string what = "orbifold structure of the bridged block middle vertex";
    criterion(3, what, [&] {
        auto d = fixtures::cycle8();
        GeneratorSubset vertex = fixtures::names(*d, {"x", "u", "v", "y"});
        auto c = coxjsj::classify_vertex(
            *d, vertex, {fixtures::names(*d, {"x", "y"}), fixtures::names(*d, {"u", "v"})});
        bool ok = c.kind == coxjsj::VertexKind::Orbifold && c.orbifold.has_value();
        if (ok) {
            const auto& o = *c.orbifold;
            ok = o.m_part.empty() && o.t_part == vertex &&
                 o.shape.kind == coxjsj::OrbifoldShape::Kind::PathsAndPoints &&
                 o.cls == coxjsj::OrbifoldClass::VirtuallyFree &&
                 o.shape.paths.size() == 2 &&
                 o.shape.paths[0] ==
                     std::vector<int>{d->index_of("x"), d->index_of("u")} &&
                 o.shape.paths[1] ==
                     std::vector<int>{d->index_of("v"), d->index_of("y")} &&
                 o.free_decomposition.has_value();
            if (ok) {
                const auto& f = *o.free_decomposition;
                ok = f.vertex_count() == 2 && f.vertices()[0] == GeneratorSubset::of({0, 1}) &&
                     f.vertices()[1] == GeneratorSubset::of({2, 3}) && f.edge_count() == 1 &&
                     f.edges()[0].set.empty();
            }
        }
        report(3, what, ok);
    });
}

void criterion_4() {
    const std::string what = "loop orbifold over the commuting pair";
    criterion(4, what, [&] {
        auto d = fixtures::e5();
        GraphOfGroups g = coxjsj::jsj(d).final_stage();
        GraphOfGroups expected(
            d,
            {fixtures::names(*d, {"1", "2", "3", "4", "7", "8"}),
             fixtures::names(*d, {"5", "6", "7", "8"})},
            {GogEdge{0, 1, fixtures::names(*d, {"7", "8"})}});
        bool ok = g.family() == expected.family();

        auto classifications = coxjsj::classify_final_vertices(g);
        ok = ok && classifications.size() == 2 &&
             classifications[0].kind == coxjsj::VertexKind::Orbifold &&
             classifications[1].kind == coxjsj::VertexKind::Rigid;
        if (ok) {
            const auto& o = *classifications[0].orbifold;
            ok = o.m_part == fixtures::names(*d, {"7", "8"}) &&
                 o.t_part == fixtures::names(*d, {"1", "2", "3", "4"}) &&
                 o.cls == coxjsj::OrbifoldClass::VirtuallySurface &&
                 o.shape.kind == coxjsj::OrbifoldShape::Kind::Loop && o.shape.loop_length == 4;
        }
        report(4, what, ok);
    });
}

void criterion_5() {
    const std::string what = "order independence across seeds and exhaustive search";
    criterion(5, what, [&] {
        auto start = Clock::now();
        bool ok = true;
        std::string detail;

        auto examine = [&](std::shared_ptr<const CoxeterDiagram> d, const std::string& label) {
            if (!ok) return;
            auto base = coxjsj::jsj(d).final_stage().family();
            for (std::uint64_t seed = 1; seed <= 10 && ok; ++seed) {
                coxjsj::JsjOptions opts;
                opts.seed = seed;
                if (coxjsj::jsj(d, opts).final_stage().family() != base) {
                    ok = false;
                    detail = label + ": seed " + std::to_string(seed) + " differs";
                }
            }
            if (ok) {
                auto terminals = coxjsj::exhaustive_jsj(d);
                if (terminals.size() != 1 || terminals[0] != base) {
                    ok = false;
                    detail = label + ": exhaustive search disagrees";
                }
            }
        };

        examine(fixtures::star(), "star");
        examine(fixtures::cycle8(), "cycle8");
        examine(fixtures::e5(), "e5");

        std::mt19937_64 rng(0xC0FFEEULL);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            auto d = std::make_shared<const CoxeterDiagram>(fixtures::random_diagram(rng, 8));
            examine(d, "random " + std::to_string(trial));
        }

        double elapsed = seconds_since(start);
        ok = ok && elapsed < 60.0;
        report(5, what, ok, detail.empty() ? timing(elapsed) : detail);
    });
}

void criterion_6() {
    const std::string what = "amenability of every stage and of the final edge sets";
    criterion(6, what, [&] {
        bool ok = true;
        std::string detail;
        for (auto d : {fixtures::star(), fixtures::cycle8(), fixtures::e5()}) {
            coxjsj::StageTrace trace = coxjsj::jsj(d);
            for (const auto& stage : trace.stages) {
                if (!coxjsj::check_amenable(stage).empty()) {
                    ok = false;
                    detail = "a stage has a separated edge set";
                }
            }
            auto ambient = coxjsj::virtually_abelian_subsets(*d, d->all_generators());
            for (const auto& e : trace.final_stage().edges()) {
                for (const auto& a : ambient) {
                    if (coxjsj::separates(*d, a.subset, e.set)) {
                        ok = false;
                        detail = "ambient splitter separates final edge set " +
                                 d->format_subset(e.set);
                    }
                }
            }
        }
        report(6, what, ok, detail);
    });
}

void criterion_7() {
    const std::string what = "shape tables vs spectral form; minimal vs exhaustive splitters";
    criterion(7, what, [&] {
        auto start = Clock::now();
        bool ok = true;
        std::string detail;

        for (const auto& d : {*fixtures::star(), *fixtures::cycle8(), *fixtures::e5()}) {
            std::string mismatch = fixtures::tables_vs_spectrum_mismatch(d, 1e-9);
            if (!mismatch.empty()) {
                ok = false;
                detail = mismatch;
            }
        }
        std::mt19937_64 spectrum_rng(777);
        for (int trial = 0; trial < 500 && ok; ++trial) {
            CoxeterDiagram d = fixtures::random_diagram(spectrum_rng, 7);
            std::string mismatch = fixtures::tables_vs_spectrum_mismatch(d, 1e-9);
            if (!mismatch.empty()) {
                ok = false;
                detail = "random " + std::to_string(trial) + ": " + mismatch;
            }
        }

        auto compare = [&](const CoxeterDiagram& d, const GeneratorSubset& vertex,
                           const std::vector<GeneratorSubset>& edges, const std::string& label) {
            if (!ok) return;
            auto fast = coxjsj::minimal_splitters(d, vertex, edges);
            auto brute = coxjsj::exhaustive_splitters(d, vertex, edges);
            bool same = fast.size() == brute.size();
            for (std::size_t i = 0; same && i < fast.size(); ++i) {
                same = fast[i].subset == brute[i].subset &&
                       fast[i].crossing_partners == brute[i].crossing_partners;
            }
            if (!same) {
                ok = false;
                detail = label + ": splitter lists differ at vertex " + d.format_subset(vertex);
            }
        };

        auto sweep = [&](std::shared_ptr<const CoxeterDiagram> d, const std::string& label) {
            if (!ok) return;
            compare(*d, d->all_generators(), {}, label);
            GraphOfGroups g = coxjsj::jsj(d).final_stage();
            for (int v = 0; v < g.vertex_count() && ok; ++v) {
                compare(*d, g.vertices()[v], g.incident_edge_sets(v), label);
            }
        };

        sweep(fixtures::star(), "star");
        sweep(fixtures::cycle8(), "cycle8");
        sweep(fixtures::e5(), "e5");
        std::mt19937_64 splitter_rng(778);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            auto d = std::make_shared<const CoxeterDiagram>(fixtures::random_diagram(splitter_rng, 8));
            sweep(d, "random " + std::to_string(trial));
        }

        double elapsed = seconds_since(start);
        ok = ok && elapsed < 120.0;
        report(7, what, ok, detail.empty() ? timing(elapsed) : detail);
    });
}

void criterion_8() {
    const std::string what = "decompositions of realized quotient diagrams";
    criterion(8, what, [&] {
        bool ok = true;
        std::string detail;
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            CoxeterDiagram t = fixtures::random_path_union(rng);
            int nt = t.generator_count();

            std::vector<std::pair<int, int>> ends;  // (a, b) per component
            for (const auto& comp : coxjsj::components(t, t.all_generators())) {
                std::vector<int> leaves;
                for (int v : comp) {
                    if (t.neighbors(v).size() <= 1) leaves.push_back(v);
                }
                if (comp.size() == 1) {
                    ends.emplace_back(comp.indices()[0], comp.indices()[0]);
                } else {
                    ends.emplace_back(leaves.front(), leaves.back());
                }
            }
            int blocks = static_cast<int>(ends.size());

            auto d = std::make_shared<const CoxeterDiagram>(coxjsj::realize_orbifold(t));

            std::vector<GeneratorSubset> expected_vertices;
            std::vector<GogEdge> expected_edges;
            std::vector<int> t_indices;
            for (int i = 0; i < nt; ++i) t_indices.push_back(i);
            GeneratorSubset t_vertex = GeneratorSubset::of(t_indices);
            expected_vertices.push_back(t_vertex);
            for (int i = 0; i < blocks; ++i) {
                int b = ends[static_cast<std::size_t>(i)].second;
                int a_next = ends[static_cast<std::size_t>((i + 1) % blocks)].first;
                GeneratorSubset cut = GeneratorSubset::of({b, a_next});
                expected_vertices.push_back(cut.with(nt + 2 * i).with(nt + 2 * i + 1));
                expected_edges.push_back(GogEdge{0, i + 1, cut});
            }
            GraphOfGroups expected(d, expected_vertices, expected_edges);

            GraphOfGroups g = coxjsj::jsj(d).final_stage();
            if (g.family() != expected.family()) {
                ok = false;
                detail = "trial " + std::to_string(trial) + ": decomposition differs";
                break;
            }

            auto classifications = coxjsj::classify_final_vertices(g);
            int orbifold_count = 0;
            for (const auto& c : classifications) {
                if (c.kind == coxjsj::VertexKind::Orbifold) {
                    ++orbifold_count;
                    if (c.orbifold->t_part != t_vertex || !c.orbifold->m_part.empty()) {
                        ok = false;
                        detail = "trial " + std::to_string(trial) + ": orbifold parts differ";
                    }
                }
            }
            if (orbifold_count != 1) {
                ok = false;
                detail = "trial " + std::to_string(trial) + ": expected one orbifold vertex, got " +
                         std::to_string(orbifold_count);
            }
            if (ok && !coxjsj::is_one_ended(*d)) {
                ok = false;
                detail = "trial " + std::to_string(trial) + ": realized group is not one ended";
            }
        }
        report(8, what, ok, detail);
    });
}

void criterion_9() {
    const std::string what = "crossing pair shape facts";
    criterion(9, what, [&] {
        bool ok = true;
        std::string detail;
        int pairs_checked = 0;

        auto inspect = [&](const CoxeterDiagram& d, const GeneratorSubset& vertex,
                           const std::vector<GeneratorSubset>& edges) {
            if (!ok) return;
            for (const auto& r : coxjsj::minimal_splitters(d, vertex, edges)) {
                for (const auto& partner : r.crossing_partners) {
                    ++pairs_checked;
                    auto result = fixtures::check_crossing_pair(d, vertex, r.subset, partner);
                    if (!result.ok) {
                        ok = false;
                        detail = result.detail;
                        return;
                    }
                }
            }
        };

        auto sweep = [&](std::shared_ptr<const CoxeterDiagram> d) {
            if (!ok) return;
            inspect(*d, d->all_generators(), {});
            GraphOfGroups g = coxjsj::jsj(d).final_stage();
            for (int v = 0; v < g.vertex_count() && ok; ++v) {
                inspect(*d, g.vertices()[v], g.incident_edge_sets(v));
            }
        };

        sweep(fixtures::star());
        sweep(fixtures::cycle8());
        sweep(fixtures::e5());
        std::mt19937_64 rng(555);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            sweep(std::make_shared<const CoxeterDiagram>(fixtures::random_diagram(rng, 8)));
        }

        if (ok && pairs_checked < 2) {
            ok = false;
            detail = "too few crossing pairs encountered";
        }
        report(9, what, ok,
               detail.empty() ? std::to_string(pairs_checked) + " pairs checked" : detail);
    });
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures > 0) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
