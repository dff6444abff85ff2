#include "esg/labeling.hpp"

#include "esg/error.hpp"

#include <unordered_map>

namespace esg {

Labeling::Labeling(AbelianGroup g, std::vector<GroupElement> values)
    : group_(std::move(g)), values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
        if (!group_.contains(values_[v])) {
            throw StructuralError("label of vertex " + std::to_string(v) + " is not an element of " +
                                  group_.to_string());
        }
    }
}

Labeling Labeling::from_indices(const AbelianGroup& g, std::span<const std::uint32_t> indices) {
    std::vector<GroupElement> values;
    values.reserve(indices.size());
    for (auto i : indices) values.push_back(g.element_at(i));
    return Labeling(g, std::move(values));
}

namespace {

void require_cover(std::size_t n, const Labeling& L) {
    if (L.size() != n) {
        throw StructuralError("labeling has " + std::to_string(L.size()) + " values but the graph has " +
                              std::to_string(n) + " vertices");
    }
}

void mark_duplicates(const AbelianGroup& g, WeightTable& t) {
    // Keyed on the element index, which is a bijective image of the residue vector.
    std::unordered_map<Order, std::size_t> first_seen;
    first_seen.reserve(t.weights.size());
    for (std::size_t j = 0; j < t.weights.size(); ++j) {
        auto [it, fresh] = first_seen.emplace(g.index_of(t.weights[j]), j);
        if (!fresh) {
            t.distinct = false;
            t.duplicate = std::make_pair(it->second, j);
            return;
        }
    }
}

IrregularityVerdict verdict_from(const WeightTable& t) {
    IrregularityVerdict v;
    v.irregular = t.distinct;
    if (t.duplicate) v.witness = std::make_pair(t.endpoints[t.duplicate->first], t.endpoints[t.duplicate->second]);
    return v;
}

}  // namespace

WeightTable edge_weights(const Graph& g, const Labeling& L) {
    require_cover(g.vertex_count(), L);
    const auto& grp = L.group();
    WeightTable t;
    t.endpoints.reserve(g.edge_count());
    t.weights.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        t.endpoints.emplace_back(e.u, e.v);
        t.weights.push_back(add(grp, L[e.u], L[e.v]));
    }
    mark_duplicates(grp, t);
    return t;
}

WeightTable arc_weights(const Digraph& d, const Labeling& L) {
    require_cover(d.vertex_count(), L);
    const auto& grp = L.group();
    WeightTable t;
    t.endpoints.reserve(d.arc_count());
    t.weights.reserve(d.arc_count());
    for (const auto& a : d.arcs()) {
        t.endpoints.emplace_back(a.tail, a.head);
        t.weights.push_back(sub(grp, L[a.tail], L[a.head]));
    }
    mark_duplicates(grp, t);
    return t;
}

IrregularityVerdict is_edge_irregular(const Graph& g, const Labeling& L) {
    return verdict_from(edge_weights(g, L));
}

IrregularityVerdict is_arc_irregular(const Digraph& d, const Labeling& L) {
    return verdict_from(arc_weights(d, L));
}

InjectivityVerdict is_injective(const Labeling& L) {
    std::unordered_map<Order, Vertex> seen;
    for (Vertex v = 0; v < L.size(); ++v) {
        auto [it, fresh] = seen.emplace(L.group().index_of(L[v]), v);
        if (!fresh) return {false, std::make_pair(it->second, v)};
    }
    return {};
}

}  // namespace esg
