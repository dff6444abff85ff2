#pragma once

#include "esg/abelian.hpp"
#include "esg/graphs.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace esg {

/// Vertex labels drawn from one Abelian group.
class Labeling {
public:
    /// Throws StructuralError if a value is not an element of g.
    Labeling(AbelianGroup g, std::vector<GroupElement> values);
    /// Labels given as element indices (see AbelianGroup::element_at).
    static Labeling from_indices(const AbelianGroup& g, std::span<const std::uint32_t> indices);

    const AbelianGroup& group() const noexcept { return group_; }
    const std::vector<GroupElement>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const GroupElement& operator[](Vertex v) const { return values_.at(v); }

private:
    AbelianGroup group_;
    std::vector<GroupElement> values_;
};

/// Per-edge (or per-arc) weights in canonical edge order, with the first
/// colliding pair when the weights are not pairwise distinct.
struct WeightTable {
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    std::vector<GroupElement> weights;
    bool distinct = true;
    /// Indices into endpoints/weights: the earliest edge j that repeats the
    /// weight of an earlier edge i, as (i, j).
    std::optional<std::pair<std::size_t, std::size_t>> duplicate;
};

/// wd(uv) = w(u) + w(v) for every edge. Throws StructuralError when the
/// labeling does not cover the graph.
WeightTable edge_weights(const Graph& g, const Labeling& L);

/// wd((u,v)) = w(u) - w(v) for every arc.
WeightTable arc_weights(const Digraph& d, const Labeling& L);

struct IrregularityVerdict {
    bool irregular = true;
    /// Two edges (or arcs) sharing a weight.
    std::optional<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> witness;

    explicit operator bool() const noexcept { return irregular; }
};

IrregularityVerdict is_edge_irregular(const Graph& g, const Labeling& L);
IrregularityVerdict is_arc_irregular(const Digraph& d, const Labeling& L);

struct InjectivityVerdict {
    bool injective = true;
    std::optional<std::pair<Vertex, Vertex>> witness;

    explicit operator bool() const noexcept { return injective; }
};

InjectivityVerdict is_injective(const Labeling& L);

}  // namespace esg
