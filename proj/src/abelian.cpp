#include "esg/abelian.hpp"

#include "esg/error.hpp"
#include "esg/primes.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace esg {

namespace detail {

struct GroupData {
    std::vector<Order> factors;
    Order order = 1;
};

}  // namespace detail

namespace {

constexpr Order kMaxOrder = Order{1} << 40;

std::shared_ptr<const detail::GroupData> make_data(std::vector<Order> factors) {
    auto data = std::make_shared<detail::GroupData>();
    Order order = 1;
    for (Order f : factors) {
        if (f < 2) throw DomainError("cyclic factor must be at least 2, got " + std::to_string(f));
        if (order > kMaxOrder / f) throw DomainError("group order exceeds supported range");
        order *= f;
    }
    data->factors = std::move(factors);
    data->order = order;
    return data;
}

const std::shared_ptr<const detail::GroupData>& trivial_data() {
    static const auto data = make_data({});
    return data;
}

bool same_group(const detail::GroupData* a, const detail::GroupData* b) noexcept {
    return a == b || (a && b && a->factors == b->factors);
}

void require_member(const AbelianGroup& g, const GroupElement& e, const char* op) {
    if (!g.contains(e)) {
        throw StructuralError(std::string(op) + ": element " + e.to_string() +
                              " does not belong to " + g.to_string());
    }
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

Order parse_order(const std::string& token, std::string_view context) {
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("expected a non-negative integer in '" + std::string(context) + "'");
    }
    try {
        return std::stoull(token);
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range in '" + std::string(context) + "'");
    }
}

// Partitions of n as descending part lists, in reverse lexicographic order
// ([n] first, [1,...,1] last).
void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}

Order ipow(Order base, unsigned e) {
    Order r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

// ---------------------------------------------------------------- group

AbelianGroup::AbelianGroup() : data_(trivial_data()) {}

AbelianGroup::AbelianGroup(std::vector<Order> factors) : data_(make_data(std::move(factors))) {}

AbelianGroup AbelianGroup::cyclic(Order n) {
    if (n == 0) throw DomainError("cyclic group order must be positive");
    if (n == 1) return AbelianGroup();
    return AbelianGroup(std::vector<Order>{n});
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
    std::string s;
    for (char c : spec) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (s.empty()) throw ParseError("empty group spec");

    std::vector<Order> factors;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find('x', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.size() < 2 || tok[0] != 'z') {
            throw ParseError("bad cyclic factor '" + tok + "' in group spec '" + std::string(spec) + "'");
        }
        std::string digits = tok.substr(tok[1] == '_' ? 2 : 1);
        factors.push_back(parse_order(digits, spec));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (factors.size() == 1 && factors[0] == 1) return AbelianGroup();
    for (Order f : factors) {
        if (f < 2) throw ParseError("cyclic factor must be at least 2 in '" + std::string(spec) + "'");
    }
    try {
        return AbelianGroup(std::move(factors));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

const std::vector<Order>& AbelianGroup::factors() const noexcept { return data_->factors; }

Order AbelianGroup::order() const noexcept { return data_->order; }

GroupElement AbelianGroup::zero() const {
    return GroupElement(data_, std::vector<Order>(rank(), 0));
}

GroupElement AbelianGroup::element(std::vector<Order> residues) const {
    if (residues.size() != rank()) {
        throw StructuralError("element has " + std::to_string(residues.size()) +
                              " residues but " + to_string() + " has rank " + std::to_string(rank()));
    }
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (residues[i] >= factors()[i]) {
            throw DomainError("residue " + std::to_string(residues[i]) + " out of range for Z" +
                              std::to_string(factors()[i]));
        }
    }
    return GroupElement(data_, std::move(residues));
}

GroupElement AbelianGroup::element_at(Order index) const {
    if (index >= order()) throw DomainError("element index out of range");
    std::vector<Order> r(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        r[i] = index % factors()[i];
        index /= factors()[i];
    }
    return GroupElement(data_, std::move(r));
}

Order AbelianGroup::index_of(const GroupElement& e) const {
    require_member(*this, e, "index_of");
    Order idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * factors()[i] + e.residues()[i];
    return idx;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    for (Order i = 0; i < order(); ++i) out.push_back(element_at(i));
    return out;
}

GroupElement AbelianGroup::parse_element(std::string_view literal) const {
    std::string s = trim(literal);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        throw ParseError("element literal must be parenthesised: '" + std::string(literal) + "'");
    }
    std::string body = trim(std::string_view(s).substr(1, s.size() - 2));
    std::vector<Order> residues;
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) residues.push_back(parse_order(trim(tok), literal));
    }
    try {
        return element(std::move(residues));
    } catch (const std::logic_error& e) {
        throw ParseError(e.what());
    }
}

bool AbelianGroup::contains(const GroupElement& e) const noexcept {
    return same_group(data_.get(), e.group_.get());
}

std::vector<Order> AbelianGroup::invariant_factors() const {
    std::map<Order, std::vector<unsigned>> exps;
    for (Order f : factors()) {
        for (auto [p, e] : factorize(f)) exps[p].push_back(e);
    }
    std::size_t len = 0;
    for (auto& [p, v] : exps) {
        std::sort(v.begin(), v.end(), std::greater<>());
        len = std::max(len, v.size());
    }
    // Largest invariant factor collects the largest power of every prime.
    std::vector<Order> out(len, 1);
    for (const auto& [p, v] : exps) {
        for (std::size_t j = 0; j < v.size(); ++j) out[len - 1 - j] *= ipow(p, v[j]);
    }
    return out;
}

bool AbelianGroup::isomorphic_to(const AbelianGroup& other) const {
    return invariant_factors() == other.invariant_factors();
}

std::string AbelianGroup::to_string() const {
    if (rank() == 0) return "Z1";
    std::string out;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i) out += 'x';
        out += 'Z' + std::to_string(factors()[i]);
    }
    return out;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) noexcept {
    return same_group(a.data_.get(), b.data_.get());
}

// -------------------------------------------------------------- element

bool GroupElement::is_zero() const noexcept {
    return std::all_of(residues_.begin(), residues_.end(), [](Order r) { return r == 0; });
}

std::string GroupElement::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(residues_[i]);
    }
    return out + ")";
}

bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return same_group(a.group_.get(), b.group_.get()) && a.residues_ == b.residues_;
}

// ----------------------------------------------------------- operations

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    require_member(g, a, "add");
    require_member(g, b, "add");
    std::vector<Order> r(g.rank());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = (a.residues()[i] + b.residues()[i]) % g.factors()[i];
    }
    return g.element(std::move(r));
}

GroupElement neg(const AbelianGroup& g, const GroupElement& a) {
    require_member(g, a, "neg");
    std::vector<Order> r(g.rank());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Order n = g.factors()[i];
        r[i] = (n - a.residues()[i]) % n;
    }
    return g.element(std::move(r));
}

GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    return add(g, a, neg(g, b));
}

std::uint64_t partition_count(unsigned n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= n; ++part) {
        for (unsigned k = part; k <= n; ++k) p[k] += p[k - part];
    }
    return p[n];
}

std::vector<AbelianGroup> enumerate_groups(Order order) {
    if (order == 0) throw DomainError("group order must be positive");
    if (order == 1) return {AbelianGroup()};

    // Per prime: all factor lists p^{l_1},...,p^{l_r} for partitions l of the exponent.
    std::vector<std::vector<std::vector<Order>>> per_prime;
    for (auto [p, e] : factorize(order)) {
        std::vector<std::vector<unsigned>> parts;
        std::vector<unsigned> cur;
        partitions(e, e, cur, parts);
        std::vector<std::vector<Order>> choices;
        for (const auto& part : parts) {
            std::vector<Order> fs;
            for (unsigned l : part) fs.push_back(ipow(p, l));
            choices.push_back(std::move(fs));
        }
        per_prime.push_back(std::move(choices));
    }

    std::vector<AbelianGroup> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
        std::vector<Order> fs;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const auto& c = per_prime[i][pick[i]];
            fs.insert(fs.end(), c.begin(), c.end());
        }
        out.emplace_back(std::move(fs));
        // Odometer with the last prime varying fastest.
        std::size_t i = per_prime.size();
        while (i > 0) {
            --i;
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

namespace {

// <H, x> as a membership mask, where H is given by its mask and size.
std::vector<bool> extend_subgroup(const IndexedGroup& ig, const std::vector<bool>& h,
                                  const std::vector<IndexedGroup::Index>& h_list,
                                  IndexedGroup::Index x, std::vector<IndexedGroup::Index>& out_list) {
    std::vector<bool> mask = h;
    out_list = h_list;
    IndexedGroup::Index shift = x;
    while (!h[shift]) {
        for (auto e : h_list) {
            auto y = ig.add(e, shift);
            if (!mask[y]) {
                mask[y] = true;
                out_list.push_back(y);
            }
        }
        shift = ig.add(shift, x);
    }
    return mask;
}

}  // namespace

std::vector<GroupElement> subgroup_of_order(const AbelianGroup& g, Order k) {
    if (k == 0 || g.order() % k != 0) {
        throw DomainError("subgroup order " + std::to_string(k) + " does not divide |" +
                          g.to_string() + "| = " + std::to_string(g.order()));
    }
    IndexedGroup ig(g);
    std::vector<bool> mask(g.order(), false);
    mask[0] = true;
    std::vector<IndexedGroup::Index> list{0};
    // Any H whose order divides k extends to a subgroup of order exactly k
    // (take a subgroup of order k/|H| in g/H), so this greedy never stalls.
    for (Order x = 1; x < g.order() && list.size() < k; ++x) {
        if (mask[x]) continue;
        std::vector<IndexedGroup::Index> cand_list;
        auto cand = extend_subgroup(ig, mask, list, static_cast<IndexedGroup::Index>(x), cand_list);
        if (k % cand_list.size() == 0) {
            mask = std::move(cand);
            list = std::move(cand_list);
        }
    }
    std::sort(list.begin(), list.end());
    std::vector<GroupElement> out;
    out.reserve(list.size());
    for (auto i : list) out.push_back(g.element_at(i));
    return out;
}

std::vector<GroupElement> coset_representatives(const AbelianGroup& g,
                                                std::span<const GroupElement> h) {
    IndexedGroup ig(g);
    std::vector<bool> in_h(g.order(), false);
    std::vector<IndexedGroup::Index> h_idx;
    for (const auto& e : h) {
        if (!g.contains(e)) throw StructuralError("coset_representatives: " + e.to_string() + " not in " + g.to_string());
        auto i = static_cast<IndexedGroup::Index>(g.index_of(e));
        if (in_h[i]) throw StructuralError("coset_representatives: duplicate element " + e.to_string());
        in_h[i] = true;
        h_idx.push_back(i);
    }
    if (h_idx.empty() || !in_h[0]) throw StructuralError("coset_representatives: set does not contain zero");
    for (auto a : h_idx) {
        for (auto b : h_idx) {
            if (!in_h[ig.add(a, b)]) throw StructuralError("coset_representatives: set is not closed under addition");
        }
    }

    std::vector<bool> covered(g.order(), false);
    std::vector<GroupElement> reps;
    for (Order r = 0; r < g.order(); ++r) {
        if (covered[r]) continue;
        reps.push_back(g.element_at(r));
        for (auto e : h_idx) covered[ig.add(static_cast<IndexedGroup::Index>(r), e)] = true;
    }
    return reps;
}

GroupElement element_sum(const AbelianGroup& g) {
    // Coordinate i takes every residue |g|/n_i times: total (|g|/n_i) * n_i(n_i-1)/2.
    std::vector<Order> r(g.rank());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Order n = g.factors()[i];
        Order mult = g.order() / n;
        Order tri = (n % 2 == 0) ? (n / 2) * (n - 1) : n * ((n - 1) / 2);
        r[i] = ((mult % n) * (tri % n)) % n;
    }
    return g.element(std::move(r));
}

bool sylow_two_is_z2(const AbelianGroup& g) { return g.order() % 4 == 2; }

// --------------------------------------------------------- IndexedGroup

IndexedGroup::IndexedGroup(const AbelianGroup& g) : group_(g) {
    if (g.order() > std::numeric_limits<Index>::max() / 2) {
        throw DomainError("group too large for indexed arithmetic: " + g.to_string());
    }
    order_ = static_cast<Index>(g.order());
    strides_.assign(g.rank(), 1);
    for (std::size_t i = g.rank(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * static_cast<Index>(g.factors()[i]);
    }
    neg_.resize(order_);
    for (Index a = 0; a < order_; ++a) {
        Index r = 0, rest = a;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            auto n = static_cast<Index>(g.factors()[i]);
            Index d = rest / strides_[i];
            rest %= strides_[i];
            r += ((n - d) % n) * strides_[i];
        }
        neg_[a] = r;
    }
    if (order_ <= 1024) {
        table_.resize(static_cast<std::size_t>(order_) * order_);
        for (Index a = 0; a < order_; ++a) {
            for (Index b = 0; b < order_; ++b) table_[static_cast<std::size_t>(a) * order_ + b] = add_digits(a, b);
        }
    }
}

IndexedGroup::Index IndexedGroup::add_digits(Index a, Index b) const noexcept {
    Index r = 0;
    for (std::size_t i = 0; i < strides_.size(); ++i) {
        auto n = static_cast<Index>(group_.factors()[i]);
        Index da = a / strides_[i], db = b / strides_[i];
        a %= strides_[i];
        b %= strides_[i];
        Index s = da + db;
        if (s >= n) s -= n;
        r += s * strides_[i];
    }
    return r;
}

}  // namespace esg
