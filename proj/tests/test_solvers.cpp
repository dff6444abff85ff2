#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "esg/primes.hpp"
#include "esg/solvers.hpp"

#include <functional>
#include <set>

using namespace esg;
using esg::testing::weights_pairwise_distinct;

namespace {

// Tries all |grp|^n labelings.
bool brute_exists(const Graph& g, const AbelianGroup& grp) {
    const auto els = grp.elements();
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<GroupElement> vals;
        for (auto i : idx) vals.push_back(els[i]);
        if (weights_pairwise_distinct(g, Labeling(grp, vals))) return true;
        std::size_t k = 0;
        while (k < n && ++idx[k] == els.size()) idx[k++] = 0;
        if (k == n) return false;
    }
}

Order brute_esg(const Graph& g) {
    for (Order s = std::max<Order>(g.edge_count(), 1);; ++s) {
        bool all = true;
        for (const auto& grp : enumerate_groups(s)) all = all && brute_exists(g, grp);
        if (all) return s;
    }
}

std::uint64_t brute_es(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::uint64_t k = 1;; ++k) {
        std::vector<std::uint64_t> l(n, 1);
        for (;;) {
            std::set<std::uint64_t> sums;
            for (const auto& e : g.edges()) sums.insert(l[e.u] + l[e.v]);
            if (sums.size() == g.edge_count()) return k;
            std::size_t i = 0;
            while (i < n && ++l[i] > k) l[i++] = 1;
            if (i == n) break;
        }
    }
}

std::uint64_t brute_har(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::uint64_t t = std::max<std::uint64_t>(g.edge_count(), 1);; ++t) {
        std::vector<std::uint64_t> l(n, 0);
        for (;;) {
            std::set<std::uint64_t> sums, used(l.begin(), l.end());
            for (const auto& e : g.edges()) sums.insert((l[e.u] + l[e.v]) % t);
            bool shape = t >= n ? used.size() == n : used.size() == t;
            if (shape && sums.size() == g.edge_count()) return t;
            std::size_t i = 0;
            while (i < n && ++l[i] == t) l[i++] = 0;
            if (i == n) break;
        }
    }
}

std::size_t brute_sidon(const AbelianGroup& g) {
    const auto els = g.elements();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << els.size()); ++mask) {
        std::vector<GroupElement> s;
        for (std::size_t i = 0; i < els.size(); ++i)
            if (mask >> i & 1) s.push_back(els[i]);
        if (s.size() <= best) continue;
        std::set<std::vector<Order>> sums;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = sums.insert(add(g, s[i], s[j]).residues()).second;
        if (ok) best = s.size();
    }
    return best;
}

}  // namespace

TEST_CASE("search_group agrees with brute force") {
    std::vector<Graph> gs{gen::path(3), gen::path(4), gen::cycle(3), gen::cycle(4), gen::cycle(5),
                          gen::star(4), gen::complete(4), gen::complete_bipartite(2, 2)};
    for (std::uint64_t s = 0; s < 8; ++s) gs.push_back(gen::random_graph(5, 0.5, s));
    for (const auto& g : gs) {
        for (Order n = std::max<Order>(g.edge_count(), 1); n <= g.edge_count() + 2 && n <= 9; ++n)
            for (const auto& grp : enumerate_groups(n)) {
                CAPTURE(grp.to_string());
                auto a = search_group(g, grp);
                CHECK((a.status == SearchStatus::Found) == brute_exists(g, grp));
                if (a.certificate) CHECK(weights_pairwise_distinct(g, *a.certificate));
            }
    }
}

TEST_CASE("exact_esg agrees with brute force on small graphs") {
    for (const auto& g : {gen::path(3), gen::path(5), gen::cycle(3), gen::cycle(4), gen::cycle(6), gen::star(5),
                          gen::complete(4), gen::complete_bipartite(2, 3), gen::parse_spec("path:2+path:2")}) {
        auto r = exact_esg(g, 40);
        REQUIRE(r.status == ExactStatus::Computed);
        CHECK(*r.value == brute_esg(g));
        for (const auto& a : r.levels.back().groups) CHECK(weights_pairwise_distinct(g, *a.certificate));
    }
}

TEST_CASE("exact_esg reference values") {
    CHECK(*exact_esg(gen::complete(5), 20).value == 11);
    CHECK(*exact_esg(gen::complete_bipartite(2, 3), 20).value == 6);
    CHECK(*exact_esg(gen::cycle(6), 20).value == 7);
    CHECK(*exact_esg(Graph(2, {}), 5).value == 1);

    auto capped = exact_esg(gen::complete(5), 10);
    CHECK(capped.status == ExactStatus::Exceeded);
    CHECK_FALSE(capped.value);

    ExactBudget tiny;
    tiny.node_limit = 3;
    CHECK(exact_esg(gen::complete(5), 20, tiny).status == ExactStatus::Unknown);
}

TEST_CASE("exact_esg is identical across worker counts") {
    ExactBudget par;
    par.workers = 4;
    auto a = exact_esg(gen::complete(6), 25);
    auto b = exact_esg(gen::complete(6), 25, par);
    REQUIRE(a.levels.size() == b.levels.size());
    CHECK(a.value == b.value);
    for (std::size_t i = 0; i < a.levels.size(); ++i)
        for (std::size_t j = 0; j < a.levels[i].groups.size(); ++j) {
            const auto& x = a.levels[i].groups[j];
            const auto& y = b.levels[i].groups[j];
            CHECK(x.status == y.status);
            CHECK(x.nodes == y.nodes);
            CHECK(x.certificate.has_value() == y.certificate.has_value());
            if (x.certificate) CHECK(x.certificate->values() == y.certificate->values());
        }
}

TEST_CASE("exact_es agrees with brute force") {
    auto p2 = exact_es(gen::path(2), 10);
    CHECK(*p2.value == 1);
    CHECK(*exact_es(gen::path(3), 10).value == 2);
    for (const auto& g : {gen::star(5), gen::cycle(5), gen::complete(4), gen::path(6), gen::complete_bipartite(2, 3)}) {
        auto r = exact_es(g, 20);
        REQUIRE(r.value);
        CHECK(*r.value == brute_es(g));
        std::set<std::uint64_t> sums;
        for (const auto& e : g.edges()) sums.insert(r.certificate[e.u] + r.certificate[e.v]);
        CHECK(sums.size() == g.edge_count());
    }
}

TEST_CASE("exact_har agrees with brute force") {
    auto k3 = exact_har(gen::complete(3), 10);
    CHECK(*k3.value == 3);
    for (const auto& g : {gen::path(3), gen::path(4), gen::star(4), gen::cycle(4), gen::cycle(5), gen::complete(4),
                          gen::complete_bipartite(2, 2)}) {
        auto r = exact_har(g, 30);
        REQUIRE(r.value);
        CHECK(*r.value == brute_har(g));
        REQUIRE(r.certificate);
        CHECK(weights_pairwise_distinct(g, *r.certificate));
    }
}

TEST_CASE("maximum Sidon sets") {
    CHECK(max_sidon(AbelianGroup::cyclic(2)).size() == 2);
    CHECK(max_sidon(AbelianGroup::cyclic(11)).size() == 5);
    auto z19 = max_sidon(AbelianGroup::cyclic(19));
    CHECK(z19.size() == 6);
    CHECK(is_sidon_set(z19.group, z19.elements));
    for (Order n = 1; n <= 16; ++n)
        for (const auto& g : enumerate_groups(n)) {
            CAPTURE(g.to_string());
            auto r = max_sidon(g);
            CHECK(r.optimal);
            CHECK(r.size() == brute_sidon(g));
            CHECK(is_sidon_set(g, r.elements));
        }
    auto z7 = AbelianGroup::cyclic(7);
    std::vector<GroupElement> bad{z7.element({0}), z7.element({1}), z7.element({2}), z7.element({3})};
    CHECK_FALSE(is_sidon_set(z7, bad));
}

TEST_CASE("parity obstruction") {
    CHECK(parity_obstruction(gen::cycle(6), AbelianGroup::cyclic(6)).has_value());
    CHECK_FALSE(parity_obstruction(gen::cycle(5), AbelianGroup::cyclic(5)).has_value());
    CHECK_FALSE(parity_obstruction(gen::cycle(8), AbelianGroup::cyclic(8)).has_value());
    CHECK_FALSE(parity_obstruction(gen::cycle(6), AbelianGroup::cyclic(7)).has_value());
    CHECK_FALSE(parity_obstruction(gen::path(7), AbelianGroup::cyclic(6)).has_value());

    // soundness: wherever it fires on a small instance, no labeling exists
    std::vector<Graph> gs{gen::cycle(6), gen::parse_spec("cycle:3+cycle:3"), gen::complete(5)};
    for (std::uint64_t s = 0; s < 400 && gs.size() < 12; ++s) {
        auto g = gen::random_graph(6, 0.6, s);
        bool even = g.edge_count() % 4 == 2 && g.edge_count() <= 10;
        for (Vertex v = 0; v < g.vertex_count(); ++v) even = even && g.degree(v) % 2 == 0;
        if (even) gs.push_back(g);
    }
    for (const auto& g : gs)
        for (const auto& grp : enumerate_groups(g.edge_count())) {
            auto ob = parity_obstruction(g, grp);
            if (!ob) continue;
            CHECK_FALSE(ob->sum_of_all_elements.is_zero());
            CHECK(search_group(g, grp).status == SearchStatus::Exhausted);
        }
}

TEST_CASE("bounds reports") {
    auto value = [](const std::vector<Bound>& bs, BoundSource s) -> std::optional<std::uint64_t> {
        for (const auto& b : bs)
            if (b.source == s) return b.value;
        return std::nullopt;
    };
    auto p4 = bounds_report(gen::path(4));
    CHECK(value(p4.lower, BoundSource::Pigeonhole) == 3u);
    CHECK(value(p4.upper, BoundSource::GreedyCol) == 3u);
    CHECK(*p4.es_g->value == 3);
    CHECK(p4.consistent());

    auto c6 = bounds_report(gen::cycle(6));
    CHECK(value(c6.lower, BoundSource::Pigeonhole) == 6u);
    CHECK(value(c6.lower, BoundSource::Parity) == 7u);
    CHECK(c6.max_lower() == 7u);
    CHECK(*c6.es_g->value == 7);

    auto k5 = bounds_report(gen::complete(5));
    CHECK(value(k5.lower, BoundSource::CompleteGraph) == 10u);
    CHECK(*k5.es_g->value == 11);
    CHECK(k5.consistent());

    BoundsOptions quick;
    quick.compute_exact = false;
    quick.planar = true;
    auto w = bounds_report(gen::complete(4), quick);
    CHECK(value(w.upper, BoundSource::Planar) == 26u);
    CHECK_FALSE(w.es_g);

    auto d = dag_bounds_report(gen::directed_path(5));
    CHECK(value(d.upper, BoundSource::Dag) == 4u);
}

TEST_CASE("sandwich chain on small graphs") {
    for (const auto& g : {gen::path(4), gen::cycle(5), gen::star(5), gen::complete(3), gen::complete(4),
                          gen::complete_bipartite(2, 2), gen::complete_bipartite(2, 3)}) {
        auto r = bounds_report(g);
        REQUIRE(r.es->value);
        REQUIRE(r.es_g->value);
        REQUIRE(r.har->value);
        auto es = *r.es->value, esg = *r.es_g->value, har = *r.har->value;
        CHECK(es <= esg);
        CHECK(esg <= next_prime(2 * es));
        CHECK(next_prime(2 * es) <= next_prime(2 * har));
    }
}

TEST_CASE("conjecture sweep margins") {
    std::vector<std::pair<std::string, Graph>> corpus{
        {"forest", gen::random_forest(7, 3)}, {"C6", gen::cycle(6)}, {"K5", gen::complete(5)}};
    std::vector<std::int64_t> grid{-10, 0};
    auto rows = conjecture_sweep(corpus, grid);
    REQUIRE(rows.size() == 3);
    CHECK(*rows[0].margin == -static_cast<std::int64_t>(rows[0].m));
    CHECK(*rows[1].margin == -5);
    CHECK(*rows[2].margin == -9);
    CHECK(rows[2].holds[0].second == false);
    CHECK(rows[2].holds[1].second == true);
}
