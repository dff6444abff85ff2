#include "esg/graphs.hpp"

#include "esg/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace esg {

namespace {

void check_endpoint(std::size_t n, Vertex v) {
    if (v >= n) {
        throw DomainError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
    }
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : adj_(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        check_endpoint(n, a);
        check_endpoint(n, b);
        if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
        throw DomainError("repeated edge " + std::to_string(it->u) + "-" + std::to_string(it->v));
    }
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> Graph::component_ids() const {
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(vertex_count(), none);
    std::size_t next = 0;
    for (Vertex s = 0; s < vertex_count(); ++s) {
        if (id[s] != none) continue;
        std::vector<Vertex> stack{s};
        id[s] = next;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[v]) {
                if (id[w] == none) {
                    id[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return id;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    auto id = component_ids();
    std::size_t count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
    std::vector<std::vector<Vertex>> out(count);
    for (Vertex v = 0; v < vertex_count(); ++v) out[id[v]].push_back(v);
    return out;
}

bool Graph::is_forest() const {
    // A forest has exactly n - c edges.
    return edge_count() + components().size() == vertex_count();
}

bool Graph::is_complete() const {
    std::size_t n = vertex_count();
    return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> side(vertex_count(), -1);
    for (Vertex s = 0; s < vertex_count(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : adj_[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

// -------------------------------------------------------------- Digraph

Digraph::Digraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) : out_(n), in_(n) {
    arcs_.reserve(arcs.size());
    for (auto [a, b] : arcs) {
        check_endpoint(n, a);
        check_endpoint(n, b);
        if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
        arcs_.push_back({a, b});
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (auto it = std::adjacent_find(arcs_.begin(), arcs_.end()); it != arcs_.end()) {
        throw DomainError("repeated arc " + std::to_string(it->tail) + "->" + std::to_string(it->head));
    }
    for (const auto& a : arcs_) {
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
    }
    for (auto& l : in_) std::sort(l.begin(), l.end());
}

std::size_t Digraph::max_in_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& l : in_) d = std::max(d, l.size());
    return d;
}

std::size_t Digraph::max_out_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& l : out_) d = std::max(d, l.size());
    return d;
}

Graph Digraph::underlying() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(arcs_.size());
    for (const auto& a : arcs_) edges.emplace_back(a.tail, a.head);
    return Graph(vertex_count(), edges);
}

// ------------------------------------------------------- coloring number

ColoringNumber coloring_number(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<Vertex> removal;
    removal.reserve(n);
    std::size_t degeneracy = 0;

    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (removed[v]) continue;
            if (!found || deg[v] < deg[best]) {
                best = v;
                found = true;
            }
        }
        degeneracy = std::max(degeneracy, deg[best]);
        removed[best] = true;
        removal.push_back(best);
        for (Vertex w : g.neighbors(best)) {
            if (!removed[w]) --deg[w];
        }
    }
    std::reverse(removal.begin(), removal.end());
    return {degeneracy + 1, std::move(removal)};
}

// ------------------------------------------------------ topological order

TopologicalOrder topological_order(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> indeg(n);
    for (Vertex v = 0; v < n; ++v) indeg[v] = d.in_neighbors(v).size();

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex w : d.out_neighbors(v)) {
            if (--indeg[w] == 0) ready.push(w);
        }
    }
    TopologicalOrder result;
    if (order.size() == n) {
        result.order = std::move(order);
        return result;
    }

    // Every leftover vertex has a leftover in-neighbour; walk backwards
    // until a vertex repeats.
    Vertex start = 0;
    while (indeg[start] == 0) ++start;
    std::vector<std::size_t> seen_at(n, static_cast<std::size_t>(-1));
    std::vector<Vertex> walk;
    Vertex v = start;
    while (seen_at[v] == static_cast<std::size_t>(-1)) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        for (Vertex u : d.in_neighbors(v)) {
            if (indeg[u] > 0) {
                v = u;
                break;
            }
        }
    }
    std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    result.cycle = std::move(cycle);
    return result;
}

// ------------------------------------------------------ four-set partition

std::string to_string(Part p) {
    switch (p) {
        case Part::V11: return "V11";
        case Part::V12: return "V12";
        case Part::V21: return "V21";
        case Part::V22: return "V22";
    }
    return "?";
}

FourSetPartition FourSetPartition::parse(std::string_view text) {
    FourSetPartition out;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (!tok.empty() && (tok[0] == 'V' || tok[0] == 'v')) tok.erase(0, 1);
        if (tok == "11") out.parts.push_back(Part::V11);
        else if (tok == "12") out.parts.push_back(Part::V12);
        else if (tok == "21") out.parts.push_back(Part::V21);
        else if (tok == "22") out.parts.push_back(Part::V22);
        else throw ParseError("bad partition class '" + tok + "' (expected 11, 12, 21 or 22)");
    }
    return out;
}

std::vector<PartitionViolation> validate_four_set_partition(const Graph& g, const FourSetPartition& p) {
    using K = PartitionViolation::Kind;
    std::vector<PartitionViolation> out;
    const std::size_t n = g.vertex_count();
    if (p.parts.size() != n) {
        out.push_back({K::Length, std::nullopt,
                       "partition covers " + std::to_string(p.parts.size()) + " vertices, graph has " +
                           std::to_string(n)});
        return out;
    }
    for (const auto& e : g.edges()) {
        Part a = p.parts[e.u], b = p.parts[e.v];
        bool ok = part_row(a) == part_row(b) || (part_col(a) == 1 && part_col(b) == 1);
        if (!ok) {
            out.push_back({K::ForbiddenEdge, e,
                           "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins " + to_string(a) +
                               " and " + to_string(b)});
        }
    }
    std::size_t cnt[4] = {0, 0, 0, 0};
    for (Part x : p.parts) ++cnt[static_cast<int>(x)];
    const std::size_t half = (n + 1) / 2;
    auto size_check = [&](K kind, std::size_t a, std::size_t b, const char* name) {
        if (a + b > half) {
            out.push_back({kind, std::nullopt,
                           std::string(name) + " = " + std::to_string(a + b) + " exceeds ceil(n/2) = " +
                               std::to_string(half)});
        }
    };
    size_check(K::SizeV11V12, cnt[0], cnt[1], "|V11|+|V12|");
    size_check(K::SizeV11V21, cnt[0], cnt[2], "|V11|+|V21|");
    size_check(K::SizeV21V22, cnt[2], cnt[3], "|V21|+|V22|");
    return out;
}

}  // namespace esg
