#include "esg/io.hpp"

#include "esg/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace esg::io {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::pair<std::size_t, Pairs> read_pairs(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("edge list: missing header line 'n m'");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header '" + line + "'");
    Pairs pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) {
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        }
        std::istringstream row(line);
        long long u = -1, v = -1;
        std::string rest;
        if (!(row >> u >> v) || u < 0 || v < 0 || (row >> rest)) {
            throw ParseError("edge list: bad edge line '" + line + "'");
        }
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_content_line(in, line)) throw ParseError("edge list: trailing content '" + line + "'");
    return {static_cast<std::size_t>(n), std::move(pairs)};
}

template <class G>
G build(std::size_t n, const Pairs& pairs) {
    try {
        return G(n, pairs);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& s) {
    auto first = s.find_first_not_of(" \t\r\n");
    return first != std::string::npos && s[first] == '{';
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

Pairs pairs_from_json(const json& j, const char* key) {
    Pairs out;
    if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("graph JSON: missing array '") + key + "'");
    for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw ParseError(std::string("graph JSON: entries of '") + key + "' must be [u, v]");
        }
        out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return out;
}

std::size_t n_from_json(const json& j) {
    if (!j.contains("n") || !j.at("n").is_number_unsigned()) throw ParseError("graph JSON: missing 'n'");
    return j.at("n").get<std::size_t>();
}

json residues(const GroupElement& e) { return json(e.residues()); }

}  // namespace

Graph read_edge_list(std::istream& in) {
    auto [n, pairs] = read_pairs(in);
    return build<Graph>(n, pairs);
}

Digraph read_arc_list(std::istream& in) {
    auto [n, pairs] = read_pairs(in);
    return build<Digraph>(n, pairs);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_arc_list(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::string to_dot(const Graph& g, const Labeling* labeling) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (labeling) out << " [label=\"" << v << ": " << (*labeling)[v].to_string() << "\"]";
        out << ";\n";
    }
    std::optional<WeightTable> t;
    if (labeling) t = edge_weights(g, *labeling);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        out << "  " << e.u << " -- " << e.v;
        if (t) out << " [label=\"" << t->weights[i].to_string() << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Digraph& d, const Labeling* labeling) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        out << "  " << v;
        if (labeling) out << " [label=\"" << v << ": " << (*labeling)[v].to_string() << "\"]";
        out << ";\n";
    }
    std::optional<WeightTable> t;
    if (labeling) t = arc_weights(d, *labeling);
    for (std::size_t i = 0; i < d.arc_count(); ++i) {
        const auto& a = d.arcs()[i];
        out << "  " << a.tail << " -> " << a.head;
        if (t) out << " [label=\"" << t->weights[i].to_string() << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

json to_json(const Digraph& d) {
    json arcs = json::array();
    for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head});
    return {{"n", d.vertex_count()}, {"arcs", arcs}};
}

Graph graph_from_json(const json& j) { return build<Graph>(n_from_json(j), pairs_from_json(j, "edges")); }

Digraph digraph_from_json(const json& j) { return build<Digraph>(n_from_json(j), pairs_from_json(j, "arcs")); }

json to_json(const Labeling& L) {
    json values = json::array();
    for (const auto& v : L.values()) values.push_back(residues(v));
    return {{"group", L.group().to_string()}, {"values", values}};
}

Labeling labeling_from_json(const json& j) {
    if (!j.contains("group") || !j.at("group").is_string()) throw ParseError("labeling JSON: missing 'group'");
    if (!j.contains("values") || !j.at("values").is_array()) throw ParseError("labeling JSON: missing 'values'");
    AbelianGroup g = AbelianGroup::parse(j.at("group").get<std::string>());
    std::vector<GroupElement> values;
    for (const auto& v : j.at("values")) {
        if (!v.is_array()) throw ParseError("labeling JSON: each value must be a residue array");
        std::vector<Order> r;
        for (const auto& x : v) {
            if (!x.is_number_unsigned()) throw ParseError("labeling JSON: residues must be non-negative integers");
            r.push_back(x.get<Order>());
        }
        try {
            values.push_back(g.element(std::move(r)));
        } catch (const std::logic_error& e) {
            throw ParseError(std::string("labeling JSON: ") + e.what());
        }
    }
    return Labeling(g, std::move(values));
}

json to_json(const WeightTable& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.weights.size(); ++i) {
        rows.push_back({{"edge", {t.endpoints[i].first, t.endpoints[i].second}}, {"weight", residues(t.weights[i])}});
    }
    json witness = nullptr;
    if (t.duplicate) {
        const auto& a = t.endpoints[t.duplicate->first];
        const auto& b = t.endpoints[t.duplicate->second];
        witness = json::array({json::array({a.first, a.second}), json::array({b.first, b.second})});
    }
    return {{"weights", rows}, {"distinct", t.distinct}, {"witness", witness}};
}

json verification_report(const Graph& g, const Labeling& L) {
    json j = to_json(edge_weights(g, L));
    j["injective"] = static_cast<bool>(is_injective(L));
    return j;
}

json verification_report(const Digraph& d, const Labeling& L) { return to_json(arc_weights(d, L)); }

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_json(text)) return graph_from_json(parse_json(text, path));
    std::istringstream in(text);
    return read_edge_list(in);
}

Digraph load_digraph(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_json(text)) return digraph_from_json(parse_json(text, path));
    std::istringstream in(text);
    return read_arc_list(in);
}

Labeling load_labeling(const std::string& path) {
    json j = parse_json(read_file(path), path);
    if (j.contains("labeling")) return labeling_from_json(j.at("labeling"));
    return labeling_from_json(j);
}

}  // namespace esg::io
