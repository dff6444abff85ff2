#include "esg/solvers.hpp"

#include "esg/constructors.hpp"
#include "esg/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace esg {

namespace {

using Clock = std::chrono::steady_clock;
using Index = IndexedGroup::Index;

SearchBudget search_budget(const ExactBudget& b, const std::optional<Clock::time_point>& deadline) {
    SearchBudget sb;
    sb.node_limit = b.node_limit;
    sb.deadline = deadline;
    return sb;
}

std::optional<Clock::time_point> deadline_for(const ExactBudget& b) {
    if (b.seconds <= 0) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(b.seconds));
}

}  // namespace

std::string to_string(ExactStatus s) {
    switch (s) {
        case ExactStatus::Computed: return "computed";
        case ExactStatus::Exceeded: return "exceeded";
        case ExactStatus::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "refuted";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

// ------------------------------------------------------------------- es_g

bool EsgLevel::all_found() const noexcept {
    return std::all_of(groups.begin(), groups.end(),
                       [](const GroupAttempt& a) { return a.status == SearchStatus::Found; });
}

bool EsgLevel::any_refuted() const noexcept {
    return std::any_of(groups.begin(), groups.end(),
                       [](const GroupAttempt& a) { return a.status == SearchStatus::Exhausted; });
}

GroupAttempt search_group(const Graph& g, const AbelianGroup& grp, const SearchBudget& budget) {
    GroupAttempt out;
    out.group = grp;
    if (g.edge_count() > grp.order()) {
        // Pigeonhole: m distinct weights need m elements.
        out.status = SearchStatus::Exhausted;
        return out;
    }
    IndexedGroup ig(grp);
    SearchProblem prob;
    prob.graph = &g;
    prob.group = &ig;
    prob.budget = budget;
    pin_search_root(prob);
    auto res = find_labeling(prob);
    out.status = res.status;
    out.nodes = res.nodes;
    if (res.status == SearchStatus::Found) out.certificate = Labeling::from_indices(grp, res.labels);
    return out;
}

EsgResult exact_esg(const Graph& g, Order s_max, const ExactBudget& budget) {
    const auto deadline = deadline_for(budget);
    const SearchBudget sb = search_budget(budget, deadline);
    EsgResult result;
    const Order start = std::max<Order>(g.edge_count(), 1);

    for (Order s = start; s <= s_max; ++s) {
        EsgLevel level;
        level.s = s;
        auto groups = enumerate_groups(s);
        level.groups.resize(groups.size());

        const unsigned workers = std::max(1u, std::min<unsigned>(budget.workers, static_cast<unsigned>(groups.size())));
        if (workers == 1) {
            for (std::size_t i = 0; i < groups.size(); ++i) level.groups[i] = search_group(g, groups[i], sb);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < groups.size();) {
                        level.groups[i] = search_group(g, groups[i], sb);
                    }
                });
            }
            for (auto& t : pool) t.join();
        }

        const bool found = level.all_found();
        const bool refuted = level.any_refuted();
        result.levels.push_back(std::move(level));
        if (found) {
            result.status = ExactStatus::Computed;
            result.value = s;
            return result;
        }
        if (!refuted) {
            result.status = ExactStatus::Unknown;
            return result;
        }
    }
    result.status = ExactStatus::Exceeded;
    return result;
}

// --------------------------------------------------------------------- es

EsResult exact_es(const Graph& g, std::uint64_t k_max, const ExactBudget& budget) {
    const auto deadline = deadline_for(budget);
    const std::uint64_t m = g.edge_count();
    EsResult result;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        // Integer sums lie in 2..2k.
        if (m > 2 * k - 1) continue;
        // Labels 1..k inside Z_{2k+1}: sums never wrap, so distinctness
        // modulo 2k+1 is distinctness in the integers.
        AbelianGroup z = AbelianGroup::cyclic(2 * k + 1);
        IndexedGroup ig(z);
        SearchProblem prob;
        prob.graph = &g;
        prob.group = &ig;
        for (Index c = 1; c <= k; ++c) prob.candidates.push_back(c);
        prob.budget = search_budget(budget, deadline);
        auto res = find_labeling(prob);
        result.nodes += res.nodes;
        if (res.status == SearchStatus::Found) {
            result.status = ExactStatus::Computed;
            result.value = k;
            result.certificate.assign(res.labels.begin(), res.labels.end());
            return result;
        }
        if (res.status == SearchStatus::BudgetExceeded) {
            result.status = ExactStatus::Unknown;
            return result;
        }
    }
    result.status = ExactStatus::Exceeded;
    return result;
}

// -------------------------------------------------------------------- har

HarResult exact_har(const Graph& g, std::uint64_t t_max, const ExactBudget& budget) {
    const auto deadline = deadline_for(budget);
    const std::size_t n = g.vertex_count();
    HarResult result;
    for (std::uint64_t t = std::max<std::uint64_t>(g.edge_count(), 1); t <= t_max; ++t) {
        AbelianGroup z = AbelianGroup::cyclic(t);
        IndexedGroup ig(z);
        SearchProblem prob;
        prob.graph = &g;
        prob.group = &ig;
        if (t >= n) {
            prob.injective_class.assign(n, 0);
        } else {
            prob.surjective = true;
        }
        prob.budget = search_budget(budget, deadline);
        pin_search_root(prob);
        auto res = find_labeling(prob);
        result.nodes += res.nodes;
        if (res.status == SearchStatus::Found) {
            result.status = ExactStatus::Computed;
            result.value = t;
            result.certificate = Labeling::from_indices(z, res.labels);
            return result;
        }
        if (res.status == SearchStatus::BudgetExceeded) {
            result.status = ExactStatus::Unknown;
            return result;
        }
    }
    result.status = ExactStatus::Exceeded;
    return result;
}

// ------------------------------------------------------------------ Sidon

bool is_sidon_set(const AbelianGroup& g, std::span<const GroupElement> set) {
    std::vector<Order> sums;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (set[i] == set[j]) return false;
            sums.push_back(g.index_of(add(g, set[i], set[j])));
        }
    }
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

namespace {

class SidonSearch {
public:
    SidonSearch(const AbelianGroup& g, std::uint64_t node_limit)
        : ig_(g), node_limit_(node_limit), used_(ig_.order(), 0) {
        // C(k,2) distinct pair sums must fit in the group.
        while ((cap_ + 1) * cap_ / 2 <= ig_.order()) ++cap_;
    }

    std::vector<Index> run(bool& optimal) {
        cur_.push_back(0);
        best_ = cur_;
        dfs(1);
        optimal = !stopped_;
        return best_;
    }

private:
    void dfs(Index next) {
        if (cur_.size() > best_.size()) best_ = cur_;
        if (cur_.size() >= cap_) return;
        std::vector<Index> marked;
        for (Index x = next; x < ig_.order(); ++x) {
            if (cur_.size() + (ig_.order() - x) <= best_.size()) return;
            if (node_limit_ && ++nodes_ > node_limit_) {
                stopped_ = true;
                return;
            }
            marked.clear();
            bool ok = true;
            for (Index s : cur_) {
                Index w = ig_.add(x, s);
                if (used_[w]) {
                    ok = false;
                    break;
                }
                used_[w] = 1;
                marked.push_back(w);
            }
            if (ok) {
                cur_.push_back(x);
                dfs(x + 1);
                cur_.pop_back();
            }
            for (Index w : marked) used_[w] = 0;
            if (stopped_) return;
        }
    }

    IndexedGroup ig_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    std::size_t cap_ = 1;
    std::vector<std::uint8_t> used_;
    std::vector<Index> cur_, best_;
};

}  // namespace

SidonRecord max_sidon(const AbelianGroup& g, std::uint64_t node_limit) {
    SidonSearch search(g, node_limit);
    SidonRecord rec;
    rec.group = g;
    for (Index i : search.run(rec.optimal)) rec.elements.push_back(g.element_at(i));
    return rec;
}

// ------------------------------------------------------------ obstruction

std::optional<ParityObstruction> parity_obstruction(const Graph& g, const AbelianGroup& grp) {
    if (!sylow_two_is_z2(grp) || g.edge_count() != grp.order()) return std::nullopt;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != 0) return std::nullopt;
    }
    GroupElement total = element_sum(grp);
    std::string text =
        "m = |" + grp.to_string() + "| = " + std::to_string(grp.order()) +
        ", so distinct weights must use every element and sum to " + total.to_string() +
        ", whose Z_2-component is 1; but every degree is even, so the weight sum "
        "sum_v deg(v) w(v) lies in 2*" + grp.to_string() + ", whose Z_2-component is 0.";
    return ParityObstruction{grp, std::move(total), std::move(text)};
}

// ----------------------------------------------------------------- bounds

std::string to_string(BoundSource s) {
    switch (s) {
        case BoundSource::Pigeonhole: return "pigeonhole";
        case BoundSource::Parity: return "parity";
        case BoundSource::CompleteGraph: return "complete-graph";
        case BoundSource::GreedyCol: return "greedy-col";
        case BoundSource::Planar: return "planar";
        case BoundSource::BipartiteEmbed: return "bipartite-embed";
        case BoundSource::PrimeSandwichEs: return "prime-sandwich-es";
        case BoundSource::PrimeSandwichHar: return "prime-sandwich-har";
        case BoundSource::Dag: return "dag";
    }
    return "?";
}

std::optional<std::uint64_t> BoundsReport::max_lower() const {
    std::optional<std::uint64_t> v;
    for (const auto& b : lower) v = std::max(v.value_or(0), b.value);
    return v;
}

std::optional<std::uint64_t> BoundsReport::min_upper() const {
    std::optional<std::uint64_t> v;
    for (const auto& b : upper) v = v ? std::min(*v, b.value) : b.value;
    return v;
}

bool BoundsReport::consistent() const {
    auto lo = max_lower();
    auto hi = min_upper();
    if (lo && hi && *lo > *hi) return false;
    const bool has_esg = es_g && es_g->value, has_es = es && es->value, has_har = har && har->value;
    if (has_esg) {
        const auto v = *es_g->value;
        if (lo && v < *lo) return false;
        if (hi && v > *hi) return false;
    }
    if (has_es && has_esg) {
        const auto e = *es->value, v = *es_g->value;
        if (!(e <= v && v <= next_prime(2 * e))) return false;
    }
    if (has_es && has_har) {
        const auto e = *es->value, h = *har->value;
        if (!(e <= h && next_prime(2 * e) <= next_prime(2 * h))) return false;
    }
    return true;
}

BoundsReport bounds_report(const Graph& g, const BoundsOptions& options, std::string graph_id) {
    BoundsReport r;
    r.graph_id = std::move(graph_id);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.col = coloring_number(g).col;
    const std::uint64_t n = r.n, m = r.m;

    r.lower.push_back({m, BoundSource::Pigeonhole});
    if (m % 4 == 2) {
        bool all_even = true;
        for (Vertex v = 0; v < n; ++v) all_even = all_even && g.degree(v) % 2 == 0;
        // Every group of order m = 2 (mod 4) has Sylow 2-subgroup Z_2.
        if (all_even) r.lower.push_back({m + 1, BoundSource::Parity});
    }
    if (n >= 3 && g.is_complete()) r.lower.push_back({n * n - 3 * n, BoundSource::CompleteGraph});

    r.upper.push_back({greedy_col_bound(g), BoundSource::GreedyCol});
    if (options.planar && n >= 4 && m >= 1) r.upper.push_back({5 * m - 4, BoundSource::Planar});
    if (m >= 1 && g.bipartition()) r.upper.push_back({(n * n + 2) / 4, BoundSource::BipartiteEmbed});

    if (options.compute_exact) {
        r.es = exact_es(g, greedy_col_bound(g), options.budget);
        r.es_g = exact_esg(g, *r.min_upper(), options.budget);
        r.har = exact_har(g, greedy_injective_bound(g), options.budget);
        if (r.es->value) r.upper.push_back({next_prime(2 * *r.es->value), BoundSource::PrimeSandwichEs});
        if (r.har->value) r.upper.push_back({next_prime(2 * *r.har->value), BoundSource::PrimeSandwichHar});
    }
    if (!r.consistent()) throw std::logic_error("bounds report for " + r.graph_id + " is inconsistent");
    return r;
}

BoundsReport dag_bounds_report(const Digraph& d, std::string graph_id) {
    BoundsReport r;
    r.graph_id = std::move(graph_id);
    r.n = d.vertex_count();
    r.m = d.arc_count();
    r.col = coloring_number(d.underlying()).col;
    r.lower.push_back({r.m, BoundSource::Pigeonhole});
    if (topological_order(d).acyclic()) r.upper.push_back({dag_bound(d), BoundSource::Dag});
    if (!r.consistent()) throw std::logic_error("bounds report for " + r.graph_id + " is inconsistent");
    return r;
}

// ------------------------------------------------------------ conjecture

std::vector<SweepRow> conjecture_sweep(std::span<const std::pair<std::string, Graph>> corpus,
                                       std::span<const std::int64_t> c_grid, const ExactBudget& budget) {
    std::vector<SweepRow> rows;
    for (const auto& [id, g] : corpus) {
        SweepRow row;
        row.graph_id = id;
        row.m = g.edge_count();
        auto res = exact_esg(g, greedy_col_bound(g), budget);
        if (res.value) {
            row.es_g = *res.value;
            row.margin = static_cast<std::int64_t>(*res.value) - 2 * static_cast<std::int64_t>(row.m);
            for (auto c : c_grid) row.holds.emplace_back(c, *row.margin <= c);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace esg
