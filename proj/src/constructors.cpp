#include "esg/constructors.hpp"

#include "esg/error.hpp"
#include "esg/primes.hpp"
#include "esg/search.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <queue>
#include <set>

namespace esg {

namespace {

using Index = IndexedGroup::Index;

std::string edge_str(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

// How an edge weight is formed from the new vertex's label c and the label
// of an earlier endpoint.
enum class WeightForm { Sum, EarlierMinusNew, NewMinusEarlier };

struct GreedyInput {
    std::size_t n = 0;
    std::vector<Vertex> order;
    std::vector<std::vector<Vertex>> neighbours;  // undirected adjacency
    WeightForm form = WeightForm::Sum;
    bool injective = false;
};

ConstructionResult run_greedy(const GreedyInput& in, const AbelianGroup& grp,
                              const std::optional<GroupElement>& first_label) {
    IndexedGroup ig(grp);
    const Index order = ig.order();
    const std::size_t n = in.n;

    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[in.order[i]] = i;

    std::vector<Index> label(n, 0);
    std::vector<std::uint8_t> used_weight(order, 0);
    std::vector<std::uint8_t> used_label(order, 0);
    std::vector<std::uint8_t> forbidden(order, 0);
    std::vector<Index> forbidden_list;
    std::vector<Index> fresh;

    auto weight = [&](Index c, Vertex earlier) -> Index {
        switch (in.form) {
            case WeightForm::Sum: return ig.add(c, label[earlier]);
            case WeightForm::EarlierMinusNew: return ig.sub(label[earlier], c);
            case WeightForm::NewMinusEarlier: return ig.sub(c, label[earlier]);
        }
        return 0;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = in.order[i];
        std::vector<Vertex> back;
        for (Vertex u : in.neighbours[v]) {
            if (pos[u] < i) back.push_back(u);
        }

        // Earlier vertices that share a later neighbour x with v: the edges
        // to x would collide if they carried the same label as v.
        forbidden_list.clear();
        if (!in.injective) {
            for (Vertex x : in.neighbours[v]) {
                if (pos[x] <= i) continue;
                for (Vertex u : in.neighbours[x]) {
                    if (pos[u] < i && !forbidden[label[u]]) {
                        forbidden[label[u]] = 1;
                        forbidden_list.push_back(label[u]);
                    }
                }
            }
        }

        std::optional<Index> chosen;
        if (i == 0 && first_label) {
            chosen = static_cast<Index>(grp.index_of(*first_label));
        } else {
            for (Index c = 0; c < order && !chosen; ++c) {
                if (forbidden[c] || (in.injective && used_label[c])) continue;
                fresh.clear();
                bool ok = true;
                for (Vertex u : back) {
                    Index w = weight(c, u);
                    if (used_weight[w]) {
                        ok = false;
                        break;
                    }
                    used_weight[w] = 1;
                    fresh.push_back(w);
                }
                for (Index w : fresh) used_weight[w] = 0;
                if (ok) chosen = c;
            }
        }
        for (Index f : forbidden_list) forbidden[f] = 0;

        if (!chosen) return {std::nullopt, v};
        label[v] = *chosen;
        used_label[*chosen] = 1;
        for (Vertex u : back) used_weight[weight(*chosen, u)] = 1;
    }
    return {Labeling::from_indices(grp, label), std::nullopt};
}

GreedyInput undirected_input(const Graph& g, bool injective) {
    GreedyInput in;
    in.n = g.vertex_count();
    in.order = coloring_number(g).ordering;
    in.neighbours.resize(in.n);
    for (Vertex v = 0; v < in.n; ++v) {
        auto nb = g.neighbors(v);
        in.neighbours[v].assign(nb.begin(), nb.end());
    }
    in.injective = injective;
    return in;
}

void require_group_label(const AbelianGroup& grp, const std::optional<GroupElement>& label) {
    if (label && !grp.contains(*label)) {
        throw StructuralError("first label " + label->to_string() + " is not in " + grp.to_string());
    }
}

AbelianGroup product_with(std::uint64_t cyclic_order, const AbelianGroup& gp) {
    std::vector<Order> fs{cyclic_order};
    fs.insert(fs.end(), gp.factors().begin(), gp.factors().end());
    return AbelianGroup(std::move(fs));
}

GroupElement pair_element(const AbelianGroup& product, Order first, const GroupElement& second) {
    std::vector<Order> r{first};
    r.insert(r.end(), second.residues().begin(), second.residues().end());
    return product.element(std::move(r));
}

}  // namespace

// ------------------------------------------------------------------ plans

WeightPlan random_plan(const Graph& f, const AbelianGroup& g, Rng& rng) {
    const std::size_t m = f.edge_count();
    if (g.order() < m) throw DomainError("group smaller than the number of edges");
    std::vector<Order> pool(g.order());
    std::iota(pool.begin(), pool.end(), Order{0});
    WeightPlan plan;
    for (std::size_t i = 0; i < m; ++i) {
        std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
        plan.targets.push_back(g.element_at(pool[i]));
    }
    for (const auto& comp : f.components()) {
        Vertex a = comp[uniform_below(rng, comp.size())];
        plan.anchors.emplace_back(a, g.element_at(uniform_below(rng, g.order())));
    }
    return plan;
}

Labeling label_forest(const Graph& f, const AbelianGroup& g, const WeightPlan& plan) {
    if (!f.is_forest()) throw DomainError("label_forest: graph contains a cycle");
    const std::size_t m = f.edge_count(), n = f.vertex_count();
    if (g.order() < m) throw DomainError("label_forest: |G| < m");
    if (plan.targets.size() != m) throw DomainError("label_forest: plan needs one target per edge");
    std::set<Order> seen;
    for (const auto& t : plan.targets) {
        if (!g.contains(t)) throw StructuralError("label_forest: target " + t.to_string() + " not in " + g.to_string());
        if (!seen.insert(g.index_of(t)).second) throw DomainError("label_forest: repeated target " + t.to_string());
    }

    auto comp = f.component_ids();
    std::vector<std::optional<GroupElement>> label(n);
    std::vector<int> anchors_in(f.components().size(), 0);
    for (const auto& [v, a] : plan.anchors) {
        if (v >= n) throw DomainError("label_forest: anchor vertex out of range");
        if (!g.contains(a)) throw StructuralError("label_forest: anchor label not in " + g.to_string());
        if (anchors_in[comp[v]]++) throw DomainError("label_forest: two anchors in one component");
        label[v] = a;
    }
    for (std::size_t c = 0; c < anchors_in.size(); ++c) {
        if (!anchors_in[c]) throw DomainError("label_forest: component without an anchor");
    }

    for (const auto& [anchor, a] : plan.anchors) {
        std::queue<Vertex> q;
        q.push(anchor);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : f.neighbors(x)) {
                if (label[y]) continue;
                const auto& target = plan.targets[*f.edge_index(x, y)];
                label[y] = sub(g, target, *label[x]);
                q.push(y);
            }
        }
    }
    std::vector<GroupElement> values;
    values.reserve(n);
    for (auto& l : label) values.push_back(std::move(*l));
    return Labeling(g, std::move(values));
}

Labeling label_complete_bipartite(std::size_t m, std::size_t n, const AbelianGroup& g) {
    if (m == 0 || n == 0) throw DomainError("label_complete_bipartite: empty side");
    if (g.order() != static_cast<Order>(m) * n) {
        throw DomainError("label_complete_bipartite: |" + g.to_string() + "| = " + std::to_string(g.order()) +
                          " but mn = " + std::to_string(m * n));
    }
    auto sub_group = subgroup_of_order(g, m);
    auto reps = coset_representatives(g, sub_group);
    std::vector<GroupElement> values;
    values.reserve(m + n);
    values.insert(values.end(), sub_group.begin(), sub_group.end());
    values.insert(values.end(), reps.begin(), reps.end());
    return Labeling(g, std::move(values));
}

// ----------------------------------------------------------------- greedy

std::uint64_t greedy_col_bound(const Graph& g) {
    const std::uint64_t m = g.edge_count();
    if (m == 0) return 1;
    return (coloring_number(g).col - 1) * (m - 1) + 1;
}

std::uint64_t greedy_injective_bound(const Graph& g) {
    const std::uint64_t m = g.edge_count(), n = g.vertex_count();
    if (m == 0) return std::max<std::uint64_t>(n, 1);
    return n + (coloring_number(g).col - 1) * (m - 1);
}

std::uint64_t dag_bound(const Digraph& d) {
    const std::uint64_t m = d.arc_count();
    if (m == 0) return 1;
    return (m - 1) * std::min(d.max_in_degree(), d.max_out_degree()) + 1;
}

ConstructionResult label_greedy_col(const Graph& g, const AbelianGroup& grp,
                                    const std::optional<GroupElement>& first_label) {
    require_group_label(grp, first_label);
    return run_greedy(undirected_input(g, false), grp, first_label);
}

ConstructionResult label_greedy_injective(const Graph& g, const AbelianGroup& grp,
                                          const std::optional<GroupElement>& first_label) {
    require_group_label(grp, first_label);
    return run_greedy(undirected_input(g, true), grp, first_label);
}

ConstructionResult label_dag_greedy(const Digraph& d, const AbelianGroup& grp,
                                    const std::optional<GroupElement>& first_label) {
    require_group_label(grp, first_label);
    auto topo = topological_order(d);
    if (!topo.acyclic()) {
        std::string cyc;
        for (Vertex v : topo.cycle) cyc += std::to_string(v) + "->";
        cyc += std::to_string(topo.cycle.front());
        throw DomainError("label_dag_greedy: digraph has a cycle " + cyc);
    }
    GreedyInput in;
    in.n = d.vertex_count();
    in.order = *topo.order;
    // Earlier neighbours are in-neighbours along a topological order,
    // out-neighbours along its reverse.
    if (d.max_in_degree() <= d.max_out_degree()) {
        in.form = WeightForm::EarlierMinusNew;
    } else {
        std::reverse(in.order.begin(), in.order.end());
        in.form = WeightForm::NewMinusEarlier;
    }
    in.neighbours.resize(in.n);
    for (const auto& a : d.arcs()) {
        in.neighbours[a.tail].push_back(a.head);
        in.neighbours[a.head].push_back(a.tail);
    }
    return run_greedy(in, grp, first_label);
}

// ------------------------------------------------------------ composition

namespace {

enum Zone : std::uint32_t { kZoneRow1 = 0, kZoneRow2 = 1, kZoneCross = 2 };

Zone zone_of(Part a, Part b) {
    if (part_row(a) == 1 && part_row(b) == 1) return kZoneRow1;
    if (part_row(a) == 2 && part_row(b) == 2) return kZoneRow2;
    return kZoneCross;
}

void require_valid_partition(const Graph& g, const FourSetPartition& p) {
    auto violations = validate_four_set_partition(g, p);
    if (violations.empty()) return;
    std::string msg = "invalid four-set partition:";
    for (const auto& v : violations) msg += " " + v.message + ";";
    throw DomainError(msg);
}

}  // namespace

Labeling compose_four_set(const Graph& g, const FourSetPartition& p, const AbelianGroup& gp,
                          const Labeling& second) {
    require_valid_partition(g, p);
    if (gp.order() % 3 == 0) throw DomainError("compose_four_set: 3 divides |" + gp.to_string() + "|");
    if (!(second.group() == gp)) throw StructuralError("compose_four_set: sublabeling is not over " + gp.to_string());
    if (second.size() != g.vertex_count()) throw StructuralError("compose_four_set: sublabeling does not cover the graph");

    // Label reuse: V12 must avoid V11's labels, V22 must avoid V21's.
    auto check_reuse = [&](Part fixed, Part other) {
        std::set<Order> used;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (p.parts[v] == fixed) used.insert(gp.index_of(second[v]));
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (p.parts[v] == other && used.count(gp.index_of(second[v]))) {
                throw DomainError("compose_four_set: vertex " + std::to_string(v) + " in " + to_string(other) +
                                  " reuses a label of " + to_string(fixed));
            }
        }
    };
    check_reuse(Part::V11, Part::V12);
    check_reuse(Part::V21, Part::V22);

    static const char* zone_name[] = {"V11+V12", "V21+V22", "V11-V21"};
    std::map<std::pair<std::uint32_t, Order>, Edge> seen;
    for (const auto& e : g.edges()) {
        Zone z = zone_of(p.parts[e.u], p.parts[e.v]);
        Order w = gp.index_of(add(gp, second[e.u], second[e.v]));
        auto [it, fresh] = seen.emplace(std::make_pair(static_cast<std::uint32_t>(z), w), e);
        if (!fresh) {
            throw DomainError(std::string("compose_four_set: edges ") + edge_str(it->second.u, it->second.v) +
                              " and " + edge_str(e.u, e.v) + " share a second coordinate within zone " +
                              zone_name[z]);
        }
    }

    AbelianGroup product = product_with(3, gp);
    std::vector<GroupElement> values;
    values.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        values.push_back(pair_element(product, part_row(p.parts[v]) == 1 ? 0 : 1, second[v]));
    }
    return Labeling(product, std::move(values));
}

Labeling compose_components(const Graph& g, std::uint64_t p, const AbelianGroup& gp,
                            std::span<const Labeling> sublabelings) {
    auto comps = g.components();
    if (comps.size() < 2) throw DomainError("compose_components: needs at least two components");
    if (p % 2 == 0 || !is_prime(p)) throw DomainError("compose_components: p = " + std::to_string(p) + " is not an odd prime");
    if (p < comps.size()) {
        throw DomainError("compose_components: p = " + std::to_string(p) + " is smaller than the " +
                          std::to_string(comps.size()) + " components");
    }
    if (gp.order() % p == 0) throw DomainError("compose_components: p divides |" + gp.to_string() + "|");
    if (sublabelings.size() != comps.size()) throw StructuralError("compose_components: one sublabeling per component required");

    AbelianGroup product = product_with(p, gp);
    std::vector<std::optional<GroupElement>> values(g.vertex_count());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& sub_l = sublabelings[i];
        if (!(sub_l.group() == gp)) throw StructuralError("compose_components: sublabeling is not over " + gp.to_string());
        Graph h = induced_subgraph(g, comps[i]);
        auto verdict = is_edge_irregular(h, sub_l);
        if (!verdict) {
            throw DomainError("compose_components: sublabeling of component " + std::to_string(i) +
                              " repeats an edge weight");
        }
        for (std::size_t k = 0; k < comps[i].size(); ++k) {
            values[comps[i][k]] = pair_element(product, i, sub_l[static_cast<Vertex>(k)]);
        }
    }
    std::vector<GroupElement> out;
    out.reserve(values.size());
    for (auto& v : values) out.push_back(std::move(*v));
    return Labeling(product, std::move(out));
}

std::optional<Labeling> four_set_sublabeling(const Graph& g, const FourSetPartition& p, const AbelianGroup& gp,
                                             std::uint64_t node_limit) {
    require_valid_partition(g, p);
    IndexedGroup ig(gp);
    SearchProblem prob;
    prob.graph = &g;
    prob.group = &ig;
    for (const auto& e : g.edges()) prob.edge_class.push_back(zone_of(p.parts[e.u], p.parts[e.v]));
    for (Part x : p.parts) prob.injective_class.push_back(part_row(x) - 1);
    prob.budget.node_limit = node_limit;
    pin_search_root(prob);
    auto out = find_labeling(prob);
    if (out.status != SearchStatus::Found) return std::nullopt;
    return Labeling::from_indices(gp, out.labels);
}

std::optional<std::vector<Labeling>> component_sublabelings(const Graph& g, const AbelianGroup& gp,
                                                            std::uint64_t node_limit) {
    IndexedGroup ig(gp);
    std::vector<Labeling> out;
    for (const auto& comp : g.components()) {
        Graph h = induced_subgraph(g, comp);
        SearchProblem prob;
        prob.graph = &h;
        prob.group = &ig;
        prob.budget.node_limit = node_limit;
        pin_search_root(prob);
        auto res = find_labeling(prob);
        if (res.status != SearchStatus::Found) return std::nullopt;
        out.push_back(Labeling::from_indices(gp, res.labels));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<std::int64_t> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : g.edges()) {
        if (local[e.u] >= 0 && local[e.v] >= 0) {
            edges.emplace_back(static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v]));
        }
    }
    return Graph(vertices.size(), edges);
}

}  // namespace esg
