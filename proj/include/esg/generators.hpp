#pragma once

#include "esg/graphs.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace esg {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling on the raw engine
/// output so results do not depend on the standard library's distributions.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
/// Bernoulli trial with probability p, from 53 bits of the engine output.
bool bernoulli(Rng& rng, double p);

namespace gen {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// Star on n vertices: centre 0, leaves 1..n-1.
Graph star(std::size_t n);
Graph complete(std::size_t n);
/// Side V1 = 0..m-1, side V2 = m..m+n-1.
Graph complete_bipartite(std::size_t m, std::size_t n);
/// Random labelled forest: each vertex after the first joins a uniformly
/// chosen earlier vertex with probability 4/5, else starts a new tree.
Graph random_forest(std::size_t n, std::uint64_t seed);
/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
/// Vertices of the i-th graph are shifted by the sizes of its predecessors.
Graph disjoint_union(std::span<const Graph> parts);

/// 0 -> 1 -> ... -> n-1.
Digraph directed_path(std::size_t n);
/// Random DAG: each pair i < j becomes an arc with probability p, then
/// vertex names are shuffled.
Digraph random_dag(std::size_t n, double p, std::uint64_t seed);

/// Mini-grammar for undirected graphs: "path:4", "cycle:6", "star:5",
/// "complete:5" (or "k:5"), "kmn:2,3", "forest:8,7" (n,seed),
/// "random:8,0.3,1" (n,p,seed); join with '+' for a disjoint union.
Graph parse_spec(std::string_view spec);

/// Mini-grammar for digraphs: "dpath:4", "dag:8,0.3,1" (n,p,seed).
Digraph parse_digraph_spec(std::string_view spec);

}  // namespace gen
}  // namespace esg
