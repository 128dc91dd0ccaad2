#include <doctest.h>

#include <random>
#include <vector>

#include "coxjsj/oracle.hpp"
#include "coxjsj/splitters.hpp"
#include "support/fixtures.hpp"

using coxjsj::GeneratorSubset;
using coxjsj::SplitterRecord;

TEST_CASE("virtually abelian subsets match the spectral predicate") {
    auto diagrams = {*fixtures::star(), *fixtures::cycle8(), *fixtures::e5()};
    for (const auto& d : diagrams) {
        auto listed = coxjsj::virtually_abelian_subsets(d, d.all_generators());
        int n = d.generator_count();
        std::size_t listed_at = 0;
        int found = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> chosen;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) chosen.push_back(i);
            }
            GeneratorSubset subset = GeneratorSubset::of(std::move(chosen));
            bool spectral = coxjsj::spectral_virtually_abelian(d, subset);
            bool in_list =
                std::find_if(listed.begin(), listed.end(), [&](const auto& st) {
                    return st.subset == subset;
                }) != listed.end();
            CHECK(spectral == in_list);
            if (in_list) ++found;
            (void)listed_at;
        }
        CHECK(found == static_cast<int>(listed.size()));
    }
}

TEST_CASE("hub pair is the only minimal splitter of the right-angled star") {
    auto star = fixtures::star();
    auto records = coxjsj::minimal_splitters(*star, star->all_generators());
    REQUIRE(records.size() == 1);
    CHECK(records[0].subset == fixtures::names(*star, {"a", "c"}));
    CHECK(records[0].structure.rank == 1);
    CHECK(records[0].crossing_partners.empty());
    CHECK(records[0].parts.size() == 4);
    CHECK(coxjsj::is_minimal(*star, records[0].subset, star->all_generators()));
    CHECK_FALSE(
        coxjsj::is_minimal(*star, fixtures::names(*star, {"a", "b"}), star->all_generators()));
}

TEST_CASE("bridged blocks expose one crossing pair") {
    auto d = fixtures::cycle8();
    auto records = coxjsj::minimal_splitters(*d, d->all_generators());
    REQUIRE(records.size() == 4);

    GeneratorSubset xv = fixtures::names(*d, {"x", "v"});
    GeneratorSubset xy = fixtures::names(*d, {"x", "y"});
    GeneratorSubset uv = fixtures::names(*d, {"u", "v"});
    GeneratorSubset uy = fixtures::names(*d, {"u", "y"});
    CHECK(records[0].subset == xv);
    CHECK(records[1].subset == xy);
    CHECK(records[2].subset == uv);
    CHECK(records[3].subset == uy);

    CHECK(records[0].crossing_partners == std::vector<GeneratorSubset>{uy});
    CHECK(records[1].crossing_partners.empty());
    CHECK(records[2].crossing_partners.empty());
    CHECK(records[3].crossing_partners == std::vector<GeneratorSubset>{xv});

    CHECK(coxjsj::crosses(*d, xv, uy));
    CHECK(coxjsj::crosses(*d, uy, xv));
    CHECK_FALSE(coxjsj::crosses(*d, xy, uv));
    CHECK_FALSE(coxjsj::crosses(*d, GeneratorSubset{}, xy));
}

TEST_CASE("edge sets restrict the candidates") {
    auto d = fixtures::cycle8();
    GeneratorSubset vertex = fixtures::names(*d, {"x", "u", "c", "d", "v", "y"});
    GeneratorSubset uy = fixtures::names(*d, {"u", "y"});
    GeneratorSubset xv = fixtures::names(*d, {"x", "v"});

    // {x, v} separates the edge set {u, y}, so it is incompatible
    CHECK_FALSE(coxjsj::is_compatible_with_edges(*d, xv, {uy}));
    auto records = coxjsj::minimal_splitters(*d, vertex, {uy});
    for (const auto& r : records) CHECK(r.subset != xv);

    // with the boundary {x, y} instead, three splitters survive
    GeneratorSubset xy = fixtures::names(*d, {"x", "y"});
    auto open_records = coxjsj::minimal_splitters(*d, vertex, {xy});
    REQUIRE(open_records.size() == 3);
    CHECK(open_records[0].subset == xv);
    CHECK(open_records[1].subset == fixtures::names(*d, {"u", "v"}));
    CHECK(open_records[2].subset == uy);
}

TEST_CASE("final vertex of the surface example has two crossing splitters") {
    auto d = fixtures::e5();
    auto whole = coxjsj::minimal_splitters(*d, d->all_generators());
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].subset == fixtures::names(*d, {"7", "8"}));

    GeneratorSubset vertex = fixtures::names(*d, {"1", "2", "3", "4", "7", "8"});
    GeneratorSubset boundary = fixtures::names(*d, {"7", "8"});
    auto records = coxjsj::minimal_splitters(*d, vertex, {boundary});
    REQUIRE(records.size() == 2);
    CHECK(records[0].subset == fixtures::names(*d, {"1", "2", "7", "8"}));
    CHECK(records[1].subset == fixtures::names(*d, {"3", "4", "7", "8"}));
    CHECK(records[0].structure.rank == 2);
    CHECK(records[0].crossing_partners == std::vector<GeneratorSubset>{records[1].subset});
    CHECK(records[1].crossing_partners == std::vector<GeneratorSubset>{records[0].subset});
}

TEST_CASE("disconnected diagrams split over the empty subset") {
    coxjsj::CoxeterDiagram d({"p", "q", "r"});
    d.add_edge("p", "q", 3);
    auto records = coxjsj::minimal_splitters(d, d.all_generators());
    REQUIRE(records.size() == 1);
    CHECK(records[0].subset.empty());
    CHECK(records[0].structure.rank == 0);
    CHECK(records[0].parts.size() == 2);
}

TEST_CASE("splitter engine caches per vertex and edge sets") {
    auto d = fixtures::cycle8();
    coxjsj::SplitterEngine engine(d);
    const auto& first = engine.minimal(d->all_generators(), {});
    const auto& second = engine.minimal(d->all_generators(), {});
    CHECK(&first == &second);
    CHECK(first.size() == 4);
}

namespace {

void check_structural_facts(const coxjsj::CoxeterDiagram& d, const GeneratorSubset& vertex,
                            const std::vector<SplitterRecord>& records) {
    for (const auto& r : records) {
        // a finite splitter shadows every infinite one
        if (r.structure.rank > 0) {
            for (const auto& other : records) CHECK(other.structure.rank > 0);
        }
        // every part keeps a relation to every free abelian direction
        for (const auto& part : r.parts) {
            for (int a : r.structure.e_of_a) {
                bool related = false;
                for (int k : part.intersected(vertex)) {
                    if (d.label(k, a)) related = true;
                }
                CHECK(related);
            }
        }
        // witnesses in distinct parts have all common neighbors inside the splitter
        for (std::size_t i = 0; i < r.parts.size(); ++i) {
            for (std::size_t j = i + 1; j < r.parts.size(); ++j) {
                for (int k1 : r.parts[i].intersected(vertex)) {
                    for (int k2 : r.parts[j].intersected(vertex)) {
                        for (int c = 0; c < d.generator_count(); ++c) {
                            if (d.label(c, k1) && d.label(c, k2)) CHECK(r.subset.contains(c));
                        }
                    }
                }
            }
        }
        for (const auto& partner : r.crossing_partners) {
            auto result = fixtures::check_crossing_pair(d, vertex, r.subset, partner);
            CHECK_MESSAGE(result.ok, result.detail);
        }
    }
}

}  // namespace

TEST_CASE("structural facts about minimal splitters hold on random diagrams") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        coxjsj::CoxeterDiagram d = fixtures::random_diagram(rng, 7);
        auto records = coxjsj::minimal_splitters(d, d.all_generators());
        check_structural_facts(d, d.all_generators(), records);

        auto brute = coxjsj::exhaustive_splitters(d, d.all_generators());
        REQUIRE(records.size() == brute.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            CHECK(records[i].subset == brute[i].subset);
            CHECK(records[i].crossing_partners == brute[i].crossing_partners);
        }
    }
}
