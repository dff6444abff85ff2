#include "esg/search.hpp"

#include "esg/error.hpp"

#include <algorithm>
#include <numeric>

namespace esg {

namespace {

using Index = IndexedGroup::Index;

class Searcher {
public:
    explicit Searcher(const SearchProblem& p) : p_(p), g_(*p.graph), grp_(*p.group) {
        const std::size_t n = g_.vertex_count();
        order_ = p.order.empty() ? coloring_number(g_).ordering : p.order;
        if (order_.size() != n) throw StructuralError("search order must list every vertex once");
        std::vector<std::size_t> pos(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (order_[i] >= n || pos[order_[i]] != n) throw StructuralError("search order must list every vertex once");
            pos[order_[i]] = i;
        }
        if (!p.edge_class.empty() && p.edge_class.size() != g_.edge_count()) {
            throw StructuralError("edge_class must have one entry per edge");
        }
        if (!p.injective_class.empty() && p.injective_class.size() != n) {
            throw StructuralError("injective_class must have one entry per vertex");
        }
        if (!p.pinned.empty() && p.pinned.size() != n) throw StructuralError("pinned must have one entry per vertex");

        std::uint32_t classes = 1;
        for (auto c : p.edge_class) classes = std::max(classes, c + 1);
        used_weight_.assign(static_cast<std::size_t>(classes) * grp_.order(), 0);

        int inj_classes = 0;
        for (int c : p.injective_class) inj_classes = std::max(inj_classes, c + 1);
        used_label_.assign(static_cast<std::size_t>(inj_classes) * grp_.order(), 0);

        back_.resize(n);
        for (std::size_t e = 0; e < g_.edge_count(); ++e) {
            const auto& ed = g_.edges()[e];
            std::uint32_t cls = p.edge_class.empty() ? 0 : p.edge_class[e];
            Vertex later = pos[ed.u] > pos[ed.v] ? ed.u : ed.v;
            Vertex earlier = later == ed.u ? ed.v : ed.u;
            back_[pos[later]].push_back({earlier, cls * grp_.order()});
        }

        if (p.candidates.empty()) {
            all_.resize(grp_.order());
            std::iota(all_.begin(), all_.end(), Index{0});
        } else {
            for (auto c : p.candidates) {
                if (c >= grp_.order()) throw StructuralError("candidate label out of range");
            }
        }
        label_.assign(n, 0);
        label_count_.assign(grp_.order(), 0);
    }

    SearchOutcome run() {
        SearchOutcome out;
        bool found = dfs(0);
        out.nodes = nodes_;
        if (found) {
            out.status = SearchStatus::Found;
            out.labels = label_;
        } else {
            out.status = stopped_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
        }
        return out;
    }

private:
    struct BackEdge {
        Vertex other;
        std::size_t class_offset;
    };

    bool over_budget() {
        if (p_.budget.node_limit && nodes_ > p_.budget.node_limit) return true;
        if (p_.budget.deadline && (nodes_ & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > *p_.budget.deadline) {
            return true;
        }
        return false;
    }

    bool dfs(std::size_t depth) {
        if (depth == order_.size()) return !p_.surjective || distinct_labels_ == grp_.order();
        const Vertex v = order_[depth];
        const int inj = p_.injective_class.empty() ? -1 : p_.injective_class[v];
        const std::size_t inj_offset = inj < 0 ? 0 : static_cast<std::size_t>(inj) * grp_.order();

        Index single;
        std::span<const Index> cands = p_.candidates.empty() ? std::span<const Index>(all_)
                                                             : std::span<const Index>(p_.candidates);
        if (!p_.pinned.empty() && p_.pinned[v]) {
            single = *p_.pinned[v];
            cands = std::span<const Index>(&single, 1);
        }

        const auto& back = back_[depth];
        std::vector<std::size_t> touched;
        touched.reserve(back.size());
        for (Index c : cands) {
            if (inj >= 0 && used_label_[inj_offset + c]) continue;
            bool ok = true;
            touched.clear();
            for (const auto& b : back) {
                std::size_t key = b.class_offset + grp_.add(c, label_[b.other]);
                if (used_weight_[key]) {
                    ok = false;
                    break;
                }
                used_weight_[key] = 1;
                touched.push_back(key);
            }
            if (ok) {
                ++nodes_;
                if (over_budget()) {
                    stopped_ = true;
                    for (auto k : touched) used_weight_[k] = 0;
                    return false;
                }
                label_[v] = c;
                if (inj >= 0) used_label_[inj_offset + c] = 1;
                if (label_count_[c]++ == 0) ++distinct_labels_;

                const std::size_t remaining = order_.size() - depth - 1;
                bool feasible = !p_.surjective || distinct_labels_ + remaining >= grp_.order();
                if (feasible && dfs(depth + 1)) return true;

                if (--label_count_[c] == 0) --distinct_labels_;
                if (inj >= 0) used_label_[inj_offset + c] = 0;
                if (stopped_) {
                    for (auto k : touched) used_weight_[k] = 0;
                    return false;
                }
            }
            for (auto k : touched) used_weight_[k] = 0;
        }
        return false;
    }

    const SearchProblem& p_;
    const Graph& g_;
    const IndexedGroup& grp_;
    std::vector<Vertex> order_;
    std::vector<std::vector<BackEdge>> back_;
    std::vector<Index> all_;
    std::vector<Index> label_;
    std::vector<std::uint8_t> used_weight_;
    std::vector<std::uint8_t> used_label_;
    std::vector<std::uint32_t> label_count_;
    Index distinct_labels_ = 0;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace

SearchOutcome find_labeling(const SearchProblem& problem) {
    if (!problem.graph || !problem.group) throw StructuralError("search problem needs a graph and a group");
    return Searcher(problem).run();
}

void pin_search_root(SearchProblem& problem) {
    if (!problem.graph) throw StructuralError("search problem needs a graph");
    const std::size_t n = problem.graph->vertex_count();
    if (n == 0) return;
    if (problem.order.empty()) problem.order = coloring_number(*problem.graph).ordering;
    problem.pinned.assign(n, std::nullopt);
    problem.pinned[problem.order.front()] = Index{0};
}

}  // namespace esg
