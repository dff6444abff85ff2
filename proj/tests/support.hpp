#pragma once

// Instance generators and reference checks shared by the test binaries.

#include "esg/constructors.hpp"
#include "esg/generators.hpp"
#include "esg/graphs.hpp"
#include "esg/labeling.hpp"

#include <algorithm>
#include <numeric>

namespace esg::testing {

/// Reference check: compares every pair of edge weights directly.
inline bool weights_pairwise_distinct(const Graph& g, const Labeling& L) {
    const auto& grp = L.group();
    std::vector<GroupElement> ws;
    for (const auto& e : g.edges()) ws.push_back(add(grp, L[e.u], L[e.v]));
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            if (ws[i] == ws[j]) return false;
    return true;
}

inline bool arc_weights_pairwise_distinct(const Digraph& d, const Labeling& L) {
    const auto& grp = L.group();
    std::vector<GroupElement> ws;
    for (const auto& a : d.arcs()) ws.push_back(sub(grp, L[a.tail], L[a.head]));
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            if (ws[i] == ws[j]) return false;
    return true;
}

/// Random group among the isomorphism classes of the given order.
inline AbelianGroup random_group_of_order(Order n, Rng& rng) {
    auto all = enumerate_groups(n);
    return all[uniform_below(rng, all.size())];
}

struct FourSetInstance {
    Graph graph;
    FourSetPartition partition;
};

/// Random graph on n vertices together with a valid four-set partition:
/// rows of sizes ceil(n/2) and floor(n/2), and edges only inside a row or
/// between V11 and V21.
inline FourSetInstance random_four_set(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    const std::size_t half = (n + 1) / 2;
    const std::size_t row1 = half, row2 = n - half;
    const std::size_t a = uniform_below(rng, row1 + 1);
    const std::size_t b = uniform_below(rng, std::min(row2, half - a) + 1);

    FourSetPartition part;
    part.parts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Part x;
        if (i < row1) x = i < a ? Part::V11 : Part::V12;
        else x = i - row1 < b ? Part::V21 : Part::V22;
        part.parts[perm[i]] = x;
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            Part pu = part.parts[u], pv = part.parts[v];
            bool allowed = part_row(pu) == part_row(pv) || (part_col(pu) == 1 && part_col(pv) == 1);
            if (allowed && bernoulli(rng, p)) edges.emplace_back(u, v);
        }
    return {Graph(n, edges), part};
}

/// Disjoint union of q random connected-ish pieces.
inline Graph random_components(std::size_t q, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Graph> parts;
    for (std::size_t i = 0; i < q; ++i) {
        std::size_t n = 2 + uniform_below(rng, 4);
        switch (uniform_below(rng, 4)) {
            case 0: parts.push_back(gen::path(n)); break;
            case 1: parts.push_back(n >= 3 ? gen::cycle(n) : gen::path(n)); break;
            case 2: parts.push_back(gen::star(n)); break;
            default: parts.push_back(gen::complete(std::min<std::size_t>(n, 4))); break;
        }
    }
    return gen::disjoint_union(parts);
}

}  // namespace esg::testing
