#pragma once

// Backtracking search for vertex labelings with pairwise distinct edge sums.
// All exact solvers reduce to this engine.

#include "esg/abelian.hpp"
#include "esg/graphs.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace esg {

struct SearchBudget {
    /// 0 means unlimited.
    std::uint64_t node_limit = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchProblem {
    const Graph* graph = nullptr;
    const IndexedGroup* group = nullptr;

    /// Per edge (canonical order). Weights only need to be distinct among
    /// edges of the same class. Empty: a single class.
    std::vector<std::uint32_t> edge_class;
    /// Per vertex; vertices sharing a non-negative class get distinct
    /// labels. Empty: no injectivity.
    std::vector<int> injective_class;
    /// Every group element must be used by some vertex.
    bool surjective = false;
    /// Allowed labels in trial order. Empty: all elements, ascending.
    std::vector<IndexedGroup::Index> candidates;
    /// Per vertex fixed label. Empty: none.
    std::vector<std::optional<IndexedGroup::Index>> pinned;
    /// Vertex assignment order. Empty: coloring-number witness ordering.
    std::vector<Vertex> order;

    SearchBudget budget;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    /// Label indices per vertex when Found.
    std::vector<IndexedGroup::Index> labels;
    std::uint64_t nodes = 0;
};

/// Depth-first search; labels are tried in candidate order so the first
/// labeling found is the least one in that order, hence deterministic.
SearchOutcome find_labeling(const SearchProblem& problem);

/// Pins the first vertex of the search order to zero. Translating every
/// label by c shifts every edge sum by 2c, so this loses no solutions. Only
/// one vertex may be pinned: translating components independently changes
/// the differences between weights of different components.
void pin_search_root(SearchProblem& problem);

}  // namespace esg
