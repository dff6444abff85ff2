#pragma once

// Exact values of es(G), es_g(G) and har(G), maximum S2-sets, the parity
// obstruction, and the combined bounds report.

#include "esg/abelian.hpp"
#include "esg/graphs.hpp"
#include "esg/labeling.hpp"
#include "esg/primes.hpp"
#include "esg/search.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace esg {

struct ExactBudget {
    /// Per individual search; 0 means unlimited.
    std::uint64_t node_limit = 0;
    /// Wall-clock limit for the whole computation; 0 means unlimited.
    double seconds = 0;
    /// Parallel workers for independent per-group searches.
    unsigned workers = 1;
};

enum class ExactStatus {
    Computed,
    /// Every value up to the supplied maximum was refuted.
    Exceeded,
    /// A search ran out of budget before the value was settled.
    Unknown,
};

std::string to_string(ExactStatus s);
std::string to_string(SearchStatus s);

// ------------------------------------------------------------------- es_g

struct GroupAttempt {
    AbelianGroup group;
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Labeling> certificate;
    std::uint64_t nodes = 0;
};

struct EsgLevel {
    Order s = 0;
    std::vector<GroupAttempt> groups;

    bool all_found() const noexcept;
    bool any_refuted() const noexcept;
};

struct EsgResult {
    ExactStatus status = ExactStatus::Unknown;
    std::optional<Order> value;
    /// One entry per order tried, ascending from max(m, 1).
    std::vector<EsgLevel> levels;
};

/// Smallest s such that every Abelian group of order s admits an
/// edge-irregular labeling. Every s from max(m,1) up is tried; no
/// monotonicity is assumed.
EsgResult exact_esg(const Graph& g, Order s_max, const ExactBudget& budget = {});

/// Exhaustive search for an edge-irregular labeling over one group.
GroupAttempt search_group(const Graph& g, const AbelianGroup& grp, const SearchBudget& budget = {});

// --------------------------------------------------------------------- es

struct EsResult {
    ExactStatus status = ExactStatus::Unknown;
    std::optional<std::uint64_t> value;
    /// Integer labels in 1..value.
    std::vector<std::uint64_t> certificate;
    std::uint64_t nodes = 0;
};

/// Smallest k admitting labels 1..k with pairwise distinct integer sums.
EsResult exact_es(const Graph& g, std::uint64_t k_max, const ExactBudget& budget = {});

// -------------------------------------------------------------------- har

struct HarResult {
    ExactStatus status = ExactStatus::Unknown;
    std::optional<std::uint64_t> value;
    /// Over Z_value: injective if value >= n, surjective otherwise.
    std::optional<Labeling> certificate;
    std::uint64_t nodes = 0;
};

/// Smallest t admitting f: V -> Z_t with distinct edge sums, f injective
/// when t >= n and surjective when t < n.
HarResult exact_har(const Graph& g, std::uint64_t t_max, const ExactBudget& budget = {});

// ------------------------------------------------------------------ Sidon

struct SidonRecord {
    AbelianGroup group;
    std::vector<GroupElement> elements;
    /// False when the node budget stopped the search early.
    bool optimal = true;

    std::size_t size() const noexcept { return elements.size(); }
};

/// True iff the sums of pairs of distinct members are pairwise distinct.
bool is_sidon_set(const AbelianGroup& g, std::span<const GroupElement> set);

/// Maximum S2-set by branch and bound (0 is assumed a member, which is
/// harmless since translates of S2-sets are S2-sets). The first maximum
/// found in ascending element order is returned.
SidonRecord max_sidon(const AbelianGroup& g, std::uint64_t node_limit = 0);

// ------------------------------------------------------------ obstruction

struct ParityObstruction {
    AbelianGroup group;
    GroupElement sum_of_all_elements;
    std::string certificate;
};

/// Fires iff every degree is even, m = |grp| and |grp| = 2 (mod 4). The
/// weights would then have to exhaust grp, summing to an element with
/// Z_2-coordinate 1, while the weight sum equals sum deg(v) w(v), which
/// lies in 2*grp.
std::optional<ParityObstruction> parity_obstruction(const Graph& g, const AbelianGroup& grp);

// ----------------------------------------------------------------- bounds

enum class BoundSource {
    Pigeonhole,
    Parity,
    CompleteGraph,
    GreedyCol,
    Planar,
    BipartiteEmbed,
    PrimeSandwichEs,
    PrimeSandwichHar,
    Dag,
};

std::string to_string(BoundSource s);

struct Bound {
    std::uint64_t value = 0;
    BoundSource source = BoundSource::Pigeonhole;
};

struct BoundsOptions {
    /// Caller's promise that the graph is planar (not checked).
    bool planar = false;
    bool compute_exact = true;
    ExactBudget budget;
};

struct BoundsReport {
    std::string graph_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t col = 1;
    std::vector<Bound> lower;
    std::vector<Bound> upper;
    std::optional<EsResult> es;
    std::optional<EsgResult> es_g;
    std::optional<HarResult> har;

    std::optional<std::uint64_t> max_lower() const;
    std::optional<std::uint64_t> min_upper() const;
    /// Every lower bound <= every upper bound, exact es_g within them, and
    /// es <= es_g <= p(2 es) <= p(2 har) when the values are known.
    bool consistent() const;
};

/// Every applicable bound on es_g for an undirected graph. Throws
/// std::logic_error if the report is internally inconsistent.
BoundsReport bounds_report(const Graph& g, const BoundsOptions& options = {}, std::string graph_id = {});

/// Pigeonhole and DAG bounds for the difference version on a DAG.
BoundsReport dag_bounds_report(const Digraph& d, std::string graph_id = {});

// ------------------------------------------------------------ conjecture

struct SweepRow {
    std::string graph_id;
    std::size_t m = 0;
    std::optional<std::uint64_t> es_g;
    /// es_g - 2m.
    std::optional<std::int64_t> margin;
    /// (c, es_g <= 2m + c) for every c in the grid.
    std::vector<std::pair<std::int64_t, bool>> holds;
};

std::vector<SweepRow> conjecture_sweep(std::span<const std::pair<std::string, Graph>> corpus,
                                       std::span<const std::int64_t> c_grid, const ExactBudget& budget = {});

}  // namespace esg
