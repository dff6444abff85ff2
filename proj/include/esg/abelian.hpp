#pragma once

// Finite Abelian groups presented as direct sums of cyclic groups
// Z_{n_1} x ... x Z_{n_k}, with exact residue-vector arithmetic.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace esg {

using Order = std::uint64_t;

class GroupElement;

namespace detail {
struct GroupData;
}

/// A finite Abelian group Z_{n_1} x ... x Z_{n_k}. Factors are kept in the
/// order they were given; use invariant_factors() or isomorphic_to() for
/// structural comparison. The empty factor list is the trivial group.
class AbelianGroup {
public:
    AbelianGroup();
    explicit AbelianGroup(std::vector<Order> factors);

    static AbelianGroup cyclic(Order n);

    /// Parses "Z6", "Z2xZ3", "z4 x z2" (case-insensitive). "Z1" alone is
    /// the trivial group.
    static AbelianGroup parse(std::string_view spec);

    const std::vector<Order>& factors() const noexcept;
    Order order() const noexcept;
    std::size_t rank() const noexcept { return factors().size(); }

    GroupElement zero() const;
    GroupElement element(std::vector<Order> residues) const;

    /// Elements are indexed 0..order-1 in lexicographic order of their
    /// residue vectors (first factor most significant).
    GroupElement element_at(Order index) const;
    Order index_of(const GroupElement& e) const;
    std::vector<GroupElement> elements() const;

    /// Parses an element literal such as "(1,2)".
    GroupElement parse_element(std::string_view literal) const;

    bool contains(const GroupElement& e) const noexcept;

    /// Invariant-factor form d_1 | d_2 | ... | d_r, ascending.
    std::vector<Order> invariant_factors() const;
    bool isomorphic_to(const AbelianGroup& other) const;

    std::string to_string() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) noexcept;

private:
    friend class GroupElement;
    explicit AbelianGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::GroupData> data_;
};

class GroupElement {
public:
    const std::vector<Order>& residues() const noexcept { return residues_; }
    AbelianGroup group() const { return AbelianGroup(group_); }
    bool is_zero() const noexcept;
    std::string to_string() const;

    /// Equal iff same group presentation and same residues.
    friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept;
    /// Lexicographic on residues; only meaningful within one group.
    friend bool operator<(const GroupElement& a, const GroupElement& b) noexcept {
        return a.residues_ < b.residues_;
    }

private:
    friend class AbelianGroup;
    GroupElement(std::shared_ptr<const detail::GroupData> group, std::vector<Order> residues)
        : group_(std::move(group)), residues_(std::move(residues)) {}

    std::shared_ptr<const detail::GroupData> group_;
    std::vector<Order> residues_;
};

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroup& g, const GroupElement& a);
GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);

/// One representative per isomorphism class of Abelian groups of the given
/// order, each in primary decomposition (prime powers, primes ascending,
/// exponents descending within a prime).
std::vector<AbelianGroup> enumerate_groups(Order order);

/// Number of partitions of n (used to count isomorphism classes).
std::uint64_t partition_count(unsigned n);

/// A subgroup of order k, deterministic: generators are picked greedily in
/// element order. Returned sorted by element index.
std::vector<GroupElement> subgroup_of_order(const AbelianGroup& g, Order k);

/// Lexicographically least transversal of g/h. Throws StructuralError when
/// h is not a subgroup of g.
std::vector<GroupElement> coset_representatives(const AbelianGroup& g,
                                                std::span<const GroupElement> h);

/// Sum of all elements of g.
GroupElement element_sum(const AbelianGroup& g);

/// True iff the Sylow 2-subgroup of g is Z_2, i.e. |g| = 2 (mod 4).
bool sylow_two_is_z2(const AbelianGroup& g);

/// Index-level arithmetic for hot loops (searches, greedy constructors).
/// Indices follow AbelianGroup::element_at. Small groups use a Cayley table.
class IndexedGroup {
public:
    using Index = std::uint32_t;

    explicit IndexedGroup(const AbelianGroup& g);

    const AbelianGroup& group() const noexcept { return group_; }
    Index order() const noexcept { return order_; }

    Index add(Index a, Index b) const noexcept {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
        return add_digits(a, b);
    }
    Index neg(Index a) const noexcept { return neg_[a]; }
    Index sub(Index a, Index b) const noexcept { return add(a, neg_[b]); }

private:
    Index add_digits(Index a, Index b) const noexcept;

    AbelianGroup group_;
    Index order_;
    std::vector<Index> strides_;
    std::vector<Index> table_;
    std::vector<Index> neg_;
};

}  // namespace esg
