#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "esg/error.hpp"
#include "esg/generators.hpp"
#include "esg/io.hpp"
#include "esg/labeling.hpp"

using namespace esg;

namespace {

Labeling cyclic_labels(Order n, std::vector<Order> vals) {
    auto g = AbelianGroup::cyclic(n);
    std::vector<GroupElement> v;
    for (auto x : vals) v.push_back(g.element({x}));
    return Labeling(g, v);
}

bool pairwise_distinct(const std::vector<GroupElement>& ws) {
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            if (ws[i] == ws[j]) return false;
    return true;
}

}  // namespace

TEST_CASE("edge weights of small examples") {
    auto t = edge_weights(gen::path(3), cyclic_labels(2, {0, 0, 1}));
    REQUIRE(t.weights.size() == 2);
    CHECK(t.weights[0].residues()[0] == 0);
    CHECK(t.weights[1].residues()[0] == 1);
    CHECK(t.distinct);

    auto c3 = gen::cycle(3);
    auto flat = cyclic_labels(3, {0, 0, 0});
    auto tt = edge_weights(c3, flat);
    CHECK_FALSE(tt.distinct);
    REQUIRE(tt.duplicate);
    CHECK(tt.duplicate->first == 0);
    CHECK(tt.duplicate->second == 1);
    auto verdict = is_edge_irregular(c3, flat);
    CHECK_FALSE(verdict);
    REQUIRE(verdict.witness);
    CHECK(verdict.witness->first == std::pair<Vertex, Vertex>{0, 1});
}

TEST_CASE("arc weights use tail minus head") {
    Digraph one(2, {{0, 1}});
    auto t = arc_weights(one, cyclic_labels(5, {1, 1}));
    CHECK(t.weights[0].is_zero());

    Digraph two(3, {{0, 1}, {0, 2}});
    auto u = arc_weights(two, cyclic_labels(5, {0, 1, 2}));
    CHECK(u.weights[0].residues()[0] == 4);
    CHECK(u.weights[1].residues()[0] == 3);
    CHECK(u.distinct);
    CHECK(is_arc_irregular(two, cyclic_labels(5, {0, 1, 2})));
}

TEST_CASE("injectivity") {
    CHECK(is_injective(cyclic_labels(7, {0, 1, 3, 6})));
    auto v = is_injective(cyclic_labels(7, {2, 2}));
    CHECK_FALSE(v);
    REQUIRE(v.witness);
    CHECK(*v.witness == std::pair<Vertex, Vertex>{0, 1});
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(edge_weights(gen::path(4), cyclic_labels(5, {0, 1})), StructuralError);
    auto z5 = AbelianGroup::cyclic(5);
    auto z7 = AbelianGroup::cyclic(7);
    CHECK_THROWS_AS(Labeling(z5, {z7.element({1})}), StructuralError);
}

TEST_CASE("pigeonhole and single edges") {
    auto k4 = gen::complete(4);
    auto z5 = AbelianGroup::cyclic(5);
    for (Order idx = 0; idx < 625; ++idx) {
        std::vector<std::uint32_t> labels{std::uint32_t(idx % 5), std::uint32_t(idx / 5 % 5),
                                          std::uint32_t(idx / 25 % 5), std::uint32_t(idx / 125)};
        CHECK_FALSE(is_edge_irregular(k4, Labeling::from_indices(z5, labels)));
    }
    auto p2 = gen::path(2);
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) {
            std::vector<std::uint32_t> l{a, b};
            CHECK(is_edge_irregular(p2, Labeling::from_indices(AbelianGroup::cyclic(3), l)));
        }
}

TEST_CASE("verdict agrees with pairwise comparison and is translation invariant") {
    auto grp = AbelianGroup({2, 4});
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = gen::random_graph(6, 0.5, trial);
        std::vector<std::uint32_t> idx(6);
        for (auto& x : idx) x = static_cast<std::uint32_t>(uniform_below(rng, grp.order()));
        auto L = Labeling::from_indices(grp, idx);
        auto t = edge_weights(g, L);
        CHECK(t.distinct == pairwise_distinct(t.weights));
        CHECK(static_cast<bool>(is_edge_irregular(g, L)) == t.distinct);

        auto c = grp.element_at(uniform_below(rng, grp.order()));
        std::vector<GroupElement> shifted;
        for (const auto& v : L.values()) shifted.push_back(add(grp, v, c));
        CHECK(edge_weights(g, Labeling(grp, shifted)).distinct == t.distinct);

        std::vector<std::pair<Vertex, Vertex>> arcs;
        for (const auto& e : g.edges()) arcs.emplace_back(e.u, e.v);
        Digraph dg(6, arcs);
        CHECK(arc_weights(dg, Labeling(grp, shifted)).weights == arc_weights(dg, L).weights);
    }
}

TEST_CASE("labeling JSON round trip") {
    auto grp = AbelianGroup::parse("Z4xZ3");
    auto L = Labeling::from_indices(grp, std::vector<std::uint32_t>{0, 5, 11, 7});
    auto back = io::labeling_from_json(io::to_json(L));
    CHECK(back.values() == L.values());
    CHECK(back.group().factors() == grp.factors());
    io::json bad = {{"group", "Z4"}, {"values", {{5}}}};
    CHECK_THROWS_AS(io::labeling_from_json(bad), ParseError);
}
