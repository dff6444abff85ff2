#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace esg {

using Vertex = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Arc with tail u and head v.
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are kept sorted
/// lexicographically; that order is the canonical edge order everywhere.
class Graph {
public:
    Graph() = default;
    /// Throws DomainError on loops, repeated edges or out-of-range endpoints.
    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::size_t max_degree() const noexcept;

    bool has_edge(Vertex u, Vertex v) const;
    /// Position of {u,v} in edges(), if present.
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

    /// Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;
    /// Component id per vertex, consistent with components().
    std::vector<std::size_t> component_ids() const;

    bool is_forest() const;
    bool is_complete() const;
    /// A proper 2-colouring (side 0/1 per vertex), if one exists. The
    /// smallest vertex of each component gets side 0.
    std::optional<std::vector<int>> bipartition() const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Simple digraph: no loops, at most one arc per ordered pair.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }
    std::size_t max_in_degree() const noexcept;
    std::size_t max_out_degree() const noexcept;

    /// Underlying simple graph; throws DomainError when both (u,v) and
    /// (v,u) are present.
    Graph underlying() const;

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

struct ColoringNumber {
    std::size_t col = 1;
    /// Witness: every vertex has at most col-1 neighbours before it.
    std::vector<Vertex> ordering;
};

/// Coloring number (degeneracy + 1) by repeated removal of a minimum-degree
/// vertex, lowest index first on ties. The witness ordering is the reverse
/// removal order.
ColoringNumber coloring_number(const Graph& g);

struct TopologicalOrder {
    /// Set when the digraph is acyclic; every arc points forward.
    std::optional<std::vector<Vertex>> order;
    /// Otherwise a directed cycle v_0 -> v_1 -> ... -> v_0.
    std::vector<Vertex> cycle;

    bool acyclic() const noexcept { return order.has_value(); }
};

/// Kahn's algorithm taking the smallest available vertex first.
TopologicalOrder topological_order(const Digraph& d);

// ------------------------------------------------------ four-set partition

enum class Part : std::uint8_t { V11, V12, V21, V22 };

inline int part_row(Part p) noexcept { return (p == Part::V11 || p == Part::V12) ? 1 : 2; }
inline int part_col(Part p) noexcept { return (p == Part::V11 || p == Part::V21) ? 1 : 2; }
std::string to_string(Part p);

/// Assignment of each vertex to one of V11, V12, V21, V22. An edge between
/// V_ij and V_kl is allowed iff i = k or j = l = 1.
struct FourSetPartition {
    std::vector<Part> parts;

    /// Parses a comma-separated list of "11", "12", "21", "22".
    static FourSetPartition parse(std::string_view text);
};

struct PartitionViolation {
    enum class Kind { Length, ForbiddenEdge, SizeV11V12, SizeV11V21, SizeV21V22 };
    Kind kind;
    std::optional<Edge> edge;
    std::string message;
};

std::vector<PartitionViolation> validate_four_set_partition(const Graph& g, const FourSetPartition& p);

}  // namespace esg
