#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "esg/error.hpp"
#include "esg/generators.hpp"
#include "esg/graphs.hpp"
#include "esg/io.hpp"

#include <algorithm>
#include <sstream>

using namespace esg;

namespace {

// 1 + max over vertex subsets of the minimum degree of the induced subgraph.
std::size_t brute_col(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::size_t mindeg = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            std::size_t d = 0;
            for (Vertex w : g.neighbors(v)) d += mask >> w & 1;
            mindeg = std::min(mindeg, d);
        }
        best = std::max(best, mindeg);
    }
    return best + 1;
}

bool colorable(const Graph& g, std::vector<int>& c, Vertex v, int k) {
    if (v == g.vertex_count()) return true;
    for (int x = 0; x < k; ++x) {
        bool ok = true;
        for (Vertex w : g.neighbors(v)) ok = ok && !(w < v && c[w] == x);
        if (!ok) continue;
        c[v] = x;
        if (colorable(g, c, v + 1, k)) return true;
    }
    return false;
}

std::size_t brute_chromatic(const Graph& g) {
    std::vector<int> c(g.vertex_count(), -1);
    for (int k = 1;; ++k)
        if (colorable(g, c, 0, k)) return static_cast<std::size_t>(k);
}

}  // namespace

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), DomainError);
    CHECK_NOTHROW(Digraph(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(Digraph(3, {{0, 1}, {1, 0}}).underlying(), DomainError);

    Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{0, 3});
    CHECK(g.edges()[2] == Edge{1, 2});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.edge_index(3, 0) == 1u);
    CHECK(g.degree(0) == 2);
    CHECK(g.max_degree() == 2);
}

TEST_CASE("generators") {
    CHECK(gen::path(4).edge_count() == 3);
    CHECK(gen::cycle(6).edge_count() == 6);
    CHECK(gen::star(5).degree(0) == 4);
    CHECK(gen::complete(5).edge_count() == 10);
    CHECK(gen::complete(5).is_complete());
    auto k23 = gen::complete_bipartite(2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.has_edge(1, 4));
    CHECK_FALSE(k23.has_edge(2, 3));
    for (std::uint64_t s = 0; s < 50; ++s) CHECK(gen::random_forest(12, s).is_forest());
    CHECK(gen::random_forest(12, 5).edges() == gen::random_forest(12, 5).edges());
    CHECK(gen::random_graph(10, 0.4, 9).edges() == gen::random_graph(10, 0.4, 9).edges());
    CHECK(gen::parse_spec("kmn:2,3").edges() == k23.edges());
    auto u = gen::parse_spec("path:3+cycle:3");
    CHECK(u.vertex_count() == 6);
    CHECK(u.components().size() == 2);
    CHECK_THROWS_AS(gen::parse_spec("cycle:2"), std::exception);
    CHECK_THROWS_AS(gen::parse_spec("wheel:5"), ParseError);
    CHECK_THROWS_AS(gen::parse_spec("path:x"), ParseError);
    CHECK(gen::parse_digraph_spec("dpath:4").arc_count() == 3);
}

TEST_CASE("components and structure") {
    auto g = gen::parse_spec("path:3+star:4+complete:1");
    auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[2] == std::vector<Vertex>{7});
    auto ids = g.component_ids();
    CHECK(ids[4] == 1);
    CHECK(g.is_forest());
    CHECK_FALSE(gen::cycle(5).is_forest());
    CHECK(gen::cycle(6).bipartition().has_value());
    CHECK_FALSE(gen::cycle(5).bipartition().has_value());
    auto side = gen::complete_bipartite(2, 3).bipartition();
    REQUIRE(side);
    CHECK(*side == std::vector<int>{0, 0, 1, 1, 1});
}

TEST_CASE("coloring number matches brute force and brackets chromatic number") {
    std::vector<Graph> gs{gen::path(5), gen::cycle(7), gen::complete(6), gen::star(6),
                          gen::complete_bipartite(3, 4), Graph(3, {})};
    for (std::uint64_t s = 0; s < 60; ++s) gs.push_back(gen::random_graph(3 + s % 8, 0.2 + 0.01 * s, s));
    for (const auto& g : gs) {
        auto c = coloring_number(g);
        CHECK(c.col == brute_col(g));
        CHECK(brute_chromatic(g) <= c.col);
        CHECK(c.col <= g.max_degree() + 1);
        REQUIRE(c.ordering.size() == g.vertex_count());
        std::vector<std::size_t> pos(g.vertex_count());
        for (std::size_t i = 0; i < c.ordering.size(); ++i) pos[c.ordering[i]] = i;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::size_t earlier = 0;
            for (Vertex w : g.neighbors(v)) earlier += pos[w] < pos[v];
            CHECK(earlier + 1 <= c.col);
        }
    }
    CHECK(coloring_number(gen::path(4)).col == 2);
    CHECK(coloring_number(gen::complete(5)).col == 5);
}

TEST_CASE("topological order") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto d = gen::random_dag(9, 0.35, s);
        auto t = topological_order(d);
        REQUIRE(t.acyclic());
        std::vector<std::size_t> pos(d.vertex_count());
        for (std::size_t i = 0; i < t.order->size(); ++i) pos[(*t.order)[i]] = i;
        for (const auto& a : d.arcs()) CHECK(pos[a.tail] < pos[a.head]);
    }
    Digraph cyc(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    auto t = topological_order(cyc);
    REQUIRE_FALSE(t.acyclic());
    REQUIRE(t.cycle.size() >= 2);
    for (std::size_t i = 0; i < t.cycle.size(); ++i) {
        Vertex a = t.cycle[i], b = t.cycle[(i + 1) % t.cycle.size()];
        auto outs = cyc.out_neighbors(a);
        CHECK(std::find(outs.begin(), outs.end(), b) != outs.end());
    }
}

TEST_CASE("four-set partition validation") {
    auto p = FourSetPartition::parse("11,12,21,22");
    CHECK(p.parts == std::vector<Part>{Part::V11, Part::V12, Part::V21, Part::V22});
    CHECK_THROWS_AS(FourSetPartition::parse("11,13"), ParseError);

    Graph ok(4, {{0, 1}, {0, 2}, {2, 3}});
    CHECK(validate_four_set_partition(ok, p).empty());

    Graph bad(4, {{1, 3}});
    auto v = validate_four_set_partition(bad, p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == PartitionViolation::Kind::ForbiddenEdge);
    CHECK(v[0].edge == Edge{1, 3});

    Graph e4(4, {});
    auto crowded = validate_four_set_partition(e4, FourSetPartition::parse("11,11,11,22"));
    CHECK(std::any_of(crowded.begin(), crowded.end(),
                      [](const auto& x) { return x.kind == PartitionViolation::Kind::SizeV11V12; }));
    auto short_p = validate_four_set_partition(e4, FourSetPartition::parse("11"));
    REQUIRE_FALSE(short_p.empty());
    CHECK(short_p[0].kind == PartitionViolation::Kind::Length);
}

TEST_CASE("edge-list and JSON round trips") {
    auto g = gen::random_graph(9, 0.4, 3);
    std::stringstream ss;
    io::write_edge_list(ss, g);
    CHECK(io::read_edge_list(ss).edges() == g.edges());
    CHECK(io::graph_from_json(io::to_json(g)).edges() == g.edges());

    std::istringstream commented("# triangle\n3 3\n\n0 1\n1 2\n# last\n0 2\n");
    CHECK(io::read_edge_list(commented).edge_count() == 3);
    std::istringstream short_list("3 2\n0 1\n");
    CHECK_THROWS_AS(io::read_edge_list(short_list), ParseError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(io::read_edge_list(loop), ParseError);

    auto d = gen::random_dag(7, 0.5, 2);
    std::stringstream ds;
    io::write_arc_list(ds, d);
    CHECK(io::read_arc_list(ds).arcs() == d.arcs());
    CHECK(io::to_dot(gen::path(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}
