#include "esg/generators.hpp"

#include "esg/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace esg {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw DomainError("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

bool bernoulli(Rng& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

namespace gen {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph path(std::size_t n) {
    if (n < 1) throw DomainError("path needs at least 1 vertex");
    EdgeList e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

Graph star(std::size_t n) {
    if (n < 1) throw DomainError("star needs at least 1 vertex");
    EdgeList e;
    for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

Graph complete(std::size_t n) {
    if (n < 1) throw DomainError("complete graph needs at least 1 vertex");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    return Graph(n, e);
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw DomainError("complete bipartite graph needs both sides non-empty");
    EdgeList e;
    for (Vertex i = 0; i < m; ++i) {
        for (Vertex j = 0; j < n; ++j) e.emplace_back(i, static_cast<Vertex>(m + j));
    }
    return Graph(m + n, e);
}

Graph random_forest(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw DomainError("forest needs at least 1 vertex");
    Rng rng(seed);
    std::vector<Vertex> name(n);
    std::iota(name.begin(), name.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(name[i - 1], name[uniform_below(rng, i)]);
    EdgeList e;
    for (std::size_t i = 1; i < n; ++i) {
        if (uniform_below(rng, 5) < 4) e.emplace_back(name[i], name[uniform_below(rng, i)]);
    }
    return Graph(n, e);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw DomainError("graph needs at least 1 vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0,1]");
    Rng rng(seed);
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (bernoulli(rng, p)) e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::size_t offset = 0;
    EdgeList e;
    for (const auto& g : parts) {
        for (const auto& x : g.edges()) {
            e.emplace_back(static_cast<Vertex>(x.u + offset), static_cast<Vertex>(x.v + offset));
        }
        offset += g.vertex_count();
    }
    return Graph(offset, e);
}

Digraph directed_path(std::size_t n) {
    if (n < 1) throw DomainError("path needs at least 1 vertex");
    EdgeList a;
    for (Vertex i = 0; i + 1 < n; ++i) a.emplace_back(i, i + 1);
    return Digraph(n, a);
}

Digraph random_dag(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw DomainError("dag needs at least 1 vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("arc probability must lie in [0,1]");
    Rng rng(seed);
    std::vector<Vertex> name(n);
    std::iota(name.begin(), name.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(name[i - 1], name[uniform_below(rng, i)]);
    EdgeList a;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (bernoulli(rng, p)) a.emplace_back(name[i], name[j]);
        }
    }
    return Digraph(n, a);
}

namespace {

struct SpecTerm {
    std::string kind;
    std::vector<std::string> args;
};

SpecTerm split_term(std::string_view term) {
    std::string t;
    for (char c : term) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    auto colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("generator spec '" + t + "' lacks ':'");
    SpecTerm out{t.substr(0, colon), {}};
    std::stringstream ss(t.substr(colon + 1));
    std::string arg;
    while (std::getline(ss, arg, ',')) out.args.push_back(arg);
    return out;
}

std::uint64_t as_uint(const std::string& s, const SpecTerm& t) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("expected a non-negative integer argument to '" + t.kind + "', got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw ParseError("argument out of range: '" + s + "'");
    }
}

double as_double(const std::string& s, const SpecTerm& t) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a probability argument to '" + t.kind + "', got '" + s + "'");
    }
}

void arity(const SpecTerm& t, std::size_t n) {
    if (t.args.size() != n) {
        throw ParseError("'" + t.kind + "' takes " + std::to_string(n) + " argument(s), got " +
                         std::to_string(t.args.size()));
    }
}

Graph parse_term(std::string_view term) {
    SpecTerm t = split_term(term);
    try {
        if (t.kind == "path") return arity(t, 1), path(as_uint(t.args[0], t));
        if (t.kind == "cycle") return arity(t, 1), cycle(as_uint(t.args[0], t));
        if (t.kind == "star") return arity(t, 1), star(as_uint(t.args[0], t));
        if (t.kind == "complete" || t.kind == "k") return arity(t, 1), complete(as_uint(t.args[0], t));
        if (t.kind == "kmn") return arity(t, 2), complete_bipartite(as_uint(t.args[0], t), as_uint(t.args[1], t));
        if (t.kind == "forest") return arity(t, 2), random_forest(as_uint(t.args[0], t), as_uint(t.args[1], t));
        if (t.kind == "random") {
            arity(t, 3);
            return random_graph(as_uint(t.args[0], t), as_double(t.args[1], t), as_uint(t.args[2], t));
        }
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown generator '" + t.kind + "'");
}

}  // namespace

Graph parse_spec(std::string_view spec) {
    std::vector<Graph> parts;
    std::size_t pos = 0;
    while (true) {
        auto plus = spec.find('+', pos);
        parts.push_back(parse_term(spec.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos)));
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    if (parts.size() == 1) return parts.front();
    return disjoint_union(parts);
}

Digraph parse_digraph_spec(std::string_view spec) {
    SpecTerm t = split_term(spec);
    try {
        if (t.kind == "dpath") return arity(t, 1), directed_path(as_uint(t.args[0], t));
        if (t.kind == "dag") {
            arity(t, 3);
            return random_dag(as_uint(t.args[0], t), as_double(t.args[1], t), as_uint(t.args[2], t));
        }
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown digraph generator '" + t.kind + "'");
}

}  // namespace gen
}  // namespace esg
