#pragma once

// Constructive labelings: forests, complete bipartite graphs, the greedy
// coloring-number procedure (plain, injective and DAG variants), and the
// two direct-product compositions.

#include "esg/abelian.hpp"
#include "esg/generators.hpp"
#include "esg/graphs.hpp"
#include "esg/labeling.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace esg {

/// Target weight for every edge (canonical edge order) plus one anchor
/// vertex and its label per connected component.
struct WeightPlan {
    std::vector<GroupElement> targets;
    std::vector<std::pair<Vertex, GroupElement>> anchors;
};

/// Random distinct targets and a random anchor (vertex and label) in every
/// component. Requires |g| >= m.
WeightPlan random_plan(const Graph& f, const AbelianGroup& g, Rng& rng);

/// Realizes plan exactly on a forest: from each anchor, breadth-first, a
/// new vertex gets (target - label of the known endpoint).
/// Throws DomainError on cycles, repeated targets, |g| < m, or a component
/// without exactly one anchor.
Labeling label_forest(const Graph& f, const AbelianGroup& g, const WeightPlan& plan);

/// K_{m,n} (side V1 = 0..m-1) over g with |g| = mn: V1 receives a subgroup
/// of order m, V2 a transversal of its cosets. Every edge weight is
/// distinct and the weights cover g.
Labeling label_complete_bipartite(std::size_t m, std::size_t n, const AbelianGroup& g);

/// Outcome of a constructor that may run out of labels below its
/// guarantee threshold.
struct ConstructionResult {
    std::optional<Labeling> labeling;
    /// Vertex for which no admissible label remained.
    std::optional<Vertex> stuck_vertex;

    bool ok() const noexcept { return labeling.has_value(); }
};

/// (col-1)(m-1)+1: every group of at least this order admits a labeling.
std::uint64_t greedy_col_bound(const Graph& g);
/// n + (col-1)(m-1): injective variant.
std::uint64_t greedy_injective_bound(const Graph& g);
/// (m-1)min(max indegree, max outdegree)+1 for a DAG.
std::uint64_t dag_bound(const Digraph& d);

/// Greedy labeling along the coloring-number witness ordering. The first
/// vertex gets first_label (zero by default); every later vertex gets the
/// first element, in element order, whose sums with its earlier neighbours
/// are new. A label is also rejected if it equals the label of an earlier
/// vertex that shares a later neighbour with it.
ConstructionResult label_greedy_col(const Graph& g, const AbelianGroup& grp,
                                    const std::optional<GroupElement>& first_label = std::nullopt);

/// As label_greedy_col, but labels are pairwise distinct.
ConstructionResult label_greedy_injective(const Graph& g, const AbelianGroup& grp,
                                          const std::optional<GroupElement>& first_label = std::nullopt);

/// Difference labeling of a DAG: vertices in topological order when the
/// maximum indegree is at most the maximum outdegree, reverse topological
/// order otherwise. Throws DomainError on a directed cycle.
ConstructionResult label_dag_greedy(const Digraph& d, const AbelianGroup& grp,
                                    const std::optional<GroupElement>& first_label = std::nullopt);

/// Combines a second-coordinate labeling over gp with first coordinate 0 on
/// V11 and V12 and 1 on V21 and V22, giving a labeling over Z_3 x gp.
/// Requires a valid partition, 3 not dividing |gp|, distinct second-
/// coordinate sums within each zone (V11+V12, V21+V22, V11-V21 edges), and
/// labels on V12 unused on V11 and on V22 unused on V21.
Labeling compose_four_set(const Graph& g, const FourSetPartition& p, const AbelianGroup& gp,
                          const Labeling& second);

/// Labels component i (in Graph::components() order) with first coordinate
/// i in Z_p and its sublabeling (indexed by position within the sorted
/// component) as second coordinate, giving a labeling over Z_p x gp.
/// Requires p an odd prime, p >= number of components, p not dividing
/// |gp|, and each sublabeling edge-irregular on its component.
Labeling compose_components(const Graph& g, std::uint64_t p, const AbelianGroup& gp,
                            std::span<const Labeling> sublabelings);

/// Second-coordinate labeling for compose_four_set found by search:
/// injective on V11+V12 and on V21+V22, sums distinct within each zone.
std::optional<Labeling> four_set_sublabeling(const Graph& g, const FourSetPartition& p,
                                             const AbelianGroup& gp, std::uint64_t node_limit = 0);

/// Edge-irregular labeling over gp of every component, by search.
std::optional<std::vector<Labeling>> component_sublabelings(const Graph& g, const AbelianGroup& gp,
                                                            std::uint64_t node_limit = 0);

/// Induced subgraph on the given sorted vertex list, renumbered 0..k-1.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace esg
