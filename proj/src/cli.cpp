#include "esg/cli.hpp"

#include "esg/constructors.hpp"
#include "esg/error.hpp"
#include "esg/generators.hpp"
#include "esg/io.hpp"
#include "esg/solvers.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace esg::cli {

namespace {

using io::json;

/// An internally produced result failed re-verification.
class InvariantBreach : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Emitted {
    json body;
    int exit_code = kOk;
    /// Used instead of body for the dot and table formats.
    std::optional<std::string> text;
};

struct NamedGraph {
    std::string id;
    Graph graph;
};

NamedGraph input_graph(const RunConfig& c) {
    if (c.gen.size() + (c.graph_file.empty() ? 0 : 1) != 1) {
        throw ParseError("exactly one graph source required: --gen <spec> or --graph <file>");
    }
    if (!c.graph_file.empty()) return {c.graph_file, io::load_graph(c.graph_file)};
    return {c.gen.front(), gen::parse_spec(c.gen.front())};
}

std::pair<std::string, Digraph> input_digraph(const RunConfig& c) {
    if (c.gen.size() + (c.graph_file.empty() ? 0 : 1) != 1) {
        throw ParseError("exactly one graph source required: --gen <spec> or --graph <file>");
    }
    if (!c.graph_file.empty()) return {c.graph_file, io::load_digraph(c.graph_file)};
    return {c.gen.front(), gen::parse_digraph_spec(c.gen.front())};
}

ExactBudget budget_of(const RunConfig& c) {
    ExactBudget b;
    b.node_limit = c.budget_nodes;
    b.seconds = c.budget_secs;
    b.workers = c.workers;
    return b;
}

json header(const RunConfig& c) {
    return {{"schema", io::kSchemaVersion}, {"verb", c.verb}, {"seed", c.seed}};
}

json graph_summary(const std::string& id, std::size_t n, std::size_t m) {
    return {{"id", id}, {"n", n}, {"m", m}};
}

int exit_for(ExactStatus s) { return s == ExactStatus::Computed ? kOk : kBudgetExceeded; }

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (c.format == f) return;
    }
    throw ParseError("format '" + c.format + "' is not supported by '" + c.verb + "'");
}

void verify_or_breach(const Graph& g, const Labeling& L, const std::string& what) {
    auto v = is_edge_irregular(g, L);
    if (!v) throw InvariantBreach(what + " produced a labeling with repeated edge weights");
}

std::optional<GroupElement> anchor_label(const RunConfig& c, const AbelianGroup& g) {
    if (c.anchor.empty()) return std::nullopt;
    return g.parse_element(c.anchor);
}

AbelianGroup group_or(const RunConfig& c, Order fallback) {
    return c.group.empty() ? AbelianGroup::cyclic(fallback) : AbelianGroup::parse(c.group);
}

// ------------------------------------------------------------------ verbs

Emitted cmd_esg(const RunConfig& c) {
    require_format(c, {"json", "table"});
    auto [id, g] = input_graph(c);
    Order s_max = c.max_value ? c.max_value : greedy_col_bound(g);
    auto res = exact_esg(g, s_max, budget_of(c));

    json levels = json::array();
    std::ostringstream table;
    table << "s\tgroup\tstatus\tnodes\n";
    for (const auto& level : res.levels) {
        json groups = json::array();
        for (const auto& a : level.groups) {
            json entry = {{"group", a.group.to_string()}, {"status", to_string(a.status)}, {"nodes", a.nodes}};
            if (a.certificate) {
                verify_or_breach(g, *a.certificate, "esg");
                entry["labeling"] = io::to_json(*a.certificate);
            }
            groups.push_back(entry);
            table << level.s << '\t' << a.group.to_string() << '\t' << to_string(a.status) << '\t' << a.nodes << '\n';
        }
        levels.push_back({{"s", level.s}, {"groups", groups}});
    }
    json body = header(c);
    body["graph"] = graph_summary(id, g.vertex_count(), g.edge_count());
    body["status"] = to_string(res.status);
    body["es_g"] = res.value ? json(*res.value) : json(nullptr);
    body["s_max"] = s_max;
    body["levels"] = levels;
    table << "es_g\t" << (res.value ? std::to_string(*res.value) : to_string(res.status)) << '\n';

    Emitted e{body, exit_for(res.status), std::nullopt};
    if (c.format == "table") e.text = table.str();
    return e;
}

Emitted cmd_es(const RunConfig& c) {
    require_format(c, {"json"});
    auto [id, g] = input_graph(c);
    std::uint64_t k_max = c.max_value ? c.max_value : greedy_col_bound(g);
    auto res = exact_es(g, k_max, budget_of(c));
    if (res.value) {
        std::vector<std::uint64_t> sums;
        for (const auto& e : g.edges()) sums.push_back(res.certificate[e.u] + res.certificate[e.v]);
        std::sort(sums.begin(), sums.end());
        bool in_range = std::all_of(res.certificate.begin(), res.certificate.end(),
                                    [&](std::uint64_t x) { return x >= 1 && x <= *res.value; });
        if (!in_range || std::adjacent_find(sums.begin(), sums.end()) != sums.end()) {
            throw InvariantBreach("es produced a labeling with repeated sums");
        }
    }
    json body = header(c);
    body["graph"] = graph_summary(id, g.vertex_count(), g.edge_count());
    body["status"] = to_string(res.status);
    body["es"] = res.value ? json(*res.value) : json(nullptr);
    body["k_max"] = k_max;
    body["certificate"] = res.value ? json(res.certificate) : json(nullptr);
    body["nodes"] = res.nodes;
    return {body, exit_for(res.status), std::nullopt};
}

Emitted cmd_har(const RunConfig& c) {
    require_format(c, {"json"});
    auto [id, g] = input_graph(c);
    std::uint64_t t_max = c.max_value ? c.max_value : greedy_injective_bound(g);
    auto res = exact_har(g, t_max, budget_of(c));
    json body = header(c);
    body["graph"] = graph_summary(id, g.vertex_count(), g.edge_count());
    body["status"] = to_string(res.status);
    body["har"] = res.value ? json(*res.value) : json(nullptr);
    body["t_max"] = t_max;
    if (res.certificate) {
        verify_or_breach(g, *res.certificate, "har");
        bool injective_regime = *res.value >= g.vertex_count();
        if (injective_regime && !is_injective(*res.certificate)) throw InvariantBreach("har certificate is not injective");
        body["regime"] = injective_regime ? "injective" : "surjective";
        body["labeling"] = io::to_json(*res.certificate);
    }
    body["nodes"] = res.nodes;
    return {body, exit_for(res.status), std::nullopt};
}

Emitted cmd_sidon(const RunConfig& c) {
    require_format(c, {"json"});
    if (c.group.empty()) throw ParseError("sidon requires --group");
    AbelianGroup g = AbelianGroup::parse(c.group);
    auto rec = max_sidon(g, c.budget_nodes);
    if (!is_sidon_set(g, rec.elements)) throw InvariantBreach("max_sidon returned a set with repeated sums");
    json set = json::array();
    for (const auto& e : rec.elements) set.push_back(e.residues());
    json body = header(c);
    body["group"] = g.to_string();
    body["size"] = rec.size();
    body["set"] = set;
    body["optimal"] = rec.optimal;
    return {body, rec.optimal ? kOk : kBudgetExceeded, std::nullopt};
}

Emitted cmd_obstruct(const RunConfig& c) {
    require_format(c, {"json"});
    auto [id, g] = input_graph(c);
    std::vector<AbelianGroup> groups;
    if (c.group.empty()) {
        groups = enumerate_groups(std::max<Order>(g.edge_count(), 1));
    } else {
        groups.push_back(AbelianGroup::parse(c.group));
    }
    json checks = json::array();
    for (const auto& grp : groups) {
        auto ob = parity_obstruction(g, grp);
        json entry = {{"group", grp.to_string()}, {"obstruction", ob.has_value()}};
        if (ob) {
            entry["element_sum"] = ob->sum_of_all_elements.residues();
            entry["certificate"] = ob->certificate;
        }
        checks.push_back(entry);
    }
    json body = header(c);
    body["graph"] = graph_summary(id, g.vertex_count(), g.edge_count());
    body["checks"] = checks;
    return {body, kOk, std::nullopt};
}

json bounds_json(const BoundsReport& r) {
    auto list = [](const std::vector<Bound>& bs) {
        json out = json::array();
        for (const auto& b : bs) out.push_back({{"value", b.value}, {"source", to_string(b.source)}});
        return out;
    };
    json exact = json::object();
    if (r.es) exact["es"] = r.es->value ? json(*r.es->value) : json(to_string(r.es->status));
    if (r.es_g) exact["es_g"] = r.es_g->value ? json(*r.es_g->value) : json(to_string(r.es_g->status));
    if (r.har) exact["har"] = r.har->value ? json(*r.har->value) : json(to_string(r.har->status));
    return {{"n", r.n},
            {"m", r.m},
            {"col", r.col},
            {"lower", list(r.lower)},
            {"upper", list(r.upper)},
            {"max_lower", r.max_lower() ? json(*r.max_lower()) : json(nullptr)},
            {"min_upper", r.min_upper() ? json(*r.min_upper()) : json(nullptr)},
            {"exact", exact},
            {"consistent", r.consistent()}};
}

Emitted cmd_bounds(const RunConfig& c) {
    require_format(c, {"json", "table"});
    BoundsReport r;
    if (c.directed) {
        auto [id, d] = input_digraph(c);
        r = dag_bounds_report(d, id);
    } else {
        auto [id, g] = input_graph(c);
        BoundsOptions opt;
        opt.planar = c.planar;
        opt.compute_exact = c.exact;
        opt.budget = budget_of(c);
        r = bounds_report(g, opt, id);
        if (r.es_g && r.es_g->value) {
            for (const auto& a : r.es_g->levels.back().groups) verify_or_breach(g, *a.certificate, "bounds");
        }
    }
    json body = header(c);
    body["graph"] = graph_summary(r.graph_id, r.n, r.m);
    body["report"] = bounds_json(r);

    int code = kOk;
    for (const auto* st : {r.es ? &r.es->status : nullptr, r.es_g ? &r.es_g->status : nullptr,
                           r.har ? &r.har->status : nullptr}) {
        if (st && *st != ExactStatus::Computed) code = kBudgetExceeded;
    }
    Emitted e{body, code, std::nullopt};
    if (c.format == "table") {
        std::ostringstream t;
        t << "graph\t" << r.graph_id << "\nn\t" << r.n << "\nm\t" << r.m << "\ncol\t" << r.col << '\n';
        for (const auto& b : r.lower) t << "lower\t" << b.value << '\t' << to_string(b.source) << '\n';
        for (const auto& b : r.upper) t << "upper\t" << b.value << '\t' << to_string(b.source) << '\n';
        for (auto& [k, v] : body["report"]["exact"].items()) t << k << '\t' << v.dump() << '\n';
        e.text = t.str();
    }
    return e;
}

std::vector<std::int64_t> parse_grid(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad --c-grid entry '" + tok + "'");
        }
    }
    return out;
}

Emitted cmd_sweep(const RunConfig& c) {
    require_format(c, {"json", "table"});
    std::vector<std::pair<std::string, Graph>> corpus;
    for (const auto& spec : c.gen) corpus.emplace_back(spec, gen::parse_spec(spec));
    if (!c.graph_file.empty()) corpus.emplace_back(c.graph_file, io::load_graph(c.graph_file));
    if (corpus.empty()) throw ParseError("sweep needs at least one --gen or --graph");
    auto grid = parse_grid(c.c_grid);
    auto rows = conjecture_sweep(corpus, grid, budget_of(c));

    json jrows = json::array();
    std::ostringstream t;
    t << "graph\tm\tes_g\tmargin";
    for (auto cv : grid) t << "\tc=" << cv;
    t << '\n';
    int code = kOk;
    for (const auto& r : rows) {
        json holds = json::object();
        for (auto [cv, ok] : r.holds) holds[std::to_string(cv)] = ok;
        jrows.push_back({{"graph", r.graph_id},
                         {"m", r.m},
                         {"es_g", r.es_g ? json(*r.es_g) : json(nullptr)},
                         {"margin", r.margin ? json(*r.margin) : json(nullptr)},
                         {"holds", holds}});
        t << r.graph_id << '\t' << r.m << '\t' << (r.es_g ? std::to_string(*r.es_g) : "?") << '\t'
          << (r.margin ? std::to_string(*r.margin) : "?");
        for (auto [cv, ok] : r.holds) t << '\t' << (ok ? "yes" : "no");
        t << '\n';
        if (!r.es_g) code = kBudgetExceeded;
    }
    json body = header(c);
    body["c_grid"] = grid;
    body["rows"] = jrows;
    Emitted e{body, code, std::nullopt};
    if (c.format == "table") e.text = t.str();
    return e;
}

Labeling bipartite_strategy(const Graph& g, const RunConfig& c) {
    auto sides = g.bipartition();
    if (!sides) throw DomainError("bipartite strategy: graph is not bipartite");
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.vertex_count(); ++v) ((*sides)[v] == 0 ? a : b).push_back(v);
    if (a.empty() || b.empty() || g.edge_count() != a.size() * b.size()) {
        throw DomainError("bipartite strategy: graph is not complete bipartite");
    }
    AbelianGroup grp = group_or(c, static_cast<Order>(a.size() * b.size()));
    Labeling local = label_complete_bipartite(a.size(), b.size(), grp);
    std::vector<GroupElement> values(g.vertex_count(), grp.zero());
    for (std::size_t i = 0; i < a.size(); ++i) values[a[i]] = local[static_cast<Vertex>(i)];
    for (std::size_t j = 0; j < b.size(); ++j) values[b[j]] = local[static_cast<Vertex>(a.size() + j)];
    return Labeling(grp, std::move(values));
}

// Prime at least `from` that avoids `avoid`.
Order prime_from(Order from, Order avoid) {
    Order p = from < 2 ? 2 : from;
    while (!is_prime(p) || p == avoid) ++p;
    return p;
}

Emitted cmd_label(const RunConfig& c) {
    require_format(c, {"json", "dot"});
    const std::string& s = c.strategy;
    json body = header(c);
    body["strategy"] = s;

    if (s == "dag") {
        auto [id, d] = input_digraph(c);
        AbelianGroup grp = group_or(c, dag_bound(d));
        auto res = label_dag_greedy(d, grp, anchor_label(c, grp));
        body["graph"] = graph_summary(id, d.vertex_count(), d.arc_count());
        body["group"] = grp.to_string();
        body["bound"] = dag_bound(d);
        if (!res.ok()) {
            body["status"] = "failed";
            body["stuck_vertex"] = *res.stuck_vertex;
            return {body, kOk, std::nullopt};
        }
        if (!is_arc_irregular(d, *res.labeling)) throw InvariantBreach("dag produced repeated arc weights");
        body["status"] = "ok";
        body["labeling"] = io::to_json(*res.labeling);
        body["verification"] = io::verification_report(d, *res.labeling);
        Emitted e{body, kOk, std::nullopt};
        if (c.format == "dot") e.text = io::to_dot(d, &*res.labeling);
        return e;
    }

    auto [id, g] = input_graph(c);
    body["graph"] = graph_summary(id, g.vertex_count(), g.edge_count());
    std::optional<Labeling> L;
    std::optional<Vertex> stuck;

    if (s == "forest") {
        AbelianGroup grp = group_or(c, std::max<Order>(g.edge_count(), 1));
        Rng rng(c.seed);
        auto plan = random_plan(g, grp, rng);
        L = label_forest(g, grp, plan);
        json targets = json::array();
        for (const auto& t : plan.targets) targets.push_back(t.residues());
        json anchors = json::array();
        for (const auto& [v, a] : plan.anchors) anchors.push_back({{"vertex", v}, {"label", a.residues()}});
        body["plan"] = {{"targets", targets}, {"anchors", anchors}};
        auto table = edge_weights(g, *L);
        if (table.weights != plan.targets) throw InvariantBreach("forest labeling does not realize its plan");
    } else if (s == "bipartite") {
        L = bipartite_strategy(g, c);
    } else if (s == "greedy" || s == "greedy-injective") {
        const bool inj = s == "greedy-injective";
        Order bound = inj ? greedy_injective_bound(g) : greedy_col_bound(g);
        AbelianGroup grp = group_or(c, bound);
        body["bound"] = bound;
        auto res = inj ? label_greedy_injective(g, grp, anchor_label(c, grp))
                       : label_greedy_col(g, grp, anchor_label(c, grp));
        L = res.labeling;
        stuck = res.stuck_vertex;
        if (L && inj && !is_injective(*L)) throw InvariantBreach("greedy-injective labeling is not injective");
        if (!L) body["group"] = grp.to_string();
    } else if (s == "compose4") {
        if (c.partition.empty()) throw ParseError("compose4 requires --partition");
        auto part = FourSetPartition::parse(c.partition);
        AbelianGroup gp = c.group.empty() ? AbelianGroup::cyclic(prime_from(greedy_injective_bound(g), 3))
                                          : AbelianGroup::parse(c.group);
        auto second = four_set_sublabeling(g, part, gp, c.budget_nodes);
        if (!second) {
            body["status"] = "failed";
            body["group"] = gp.to_string();
            return {body, c.budget_nodes ? kBudgetExceeded : kOk, std::nullopt};
        }
        L = compose_four_set(g, part, gp, *second);
    } else if (s == "components") {
        const std::size_t q = g.components().size();
        Order p = c.prime ? c.prime : smallest_odd_prime_at_least(q);
        AbelianGroup gp = c.group.empty() ? AbelianGroup::cyclic(prime_from(greedy_col_bound(g), p))
                                          : AbelianGroup::parse(c.group);
        auto subs = component_sublabelings(g, gp, c.budget_nodes);
        body["prime"] = p;
        if (!subs) {
            body["status"] = "failed";
            body["group"] = gp.to_string();
            return {body, c.budget_nodes ? kBudgetExceeded : kOk, std::nullopt};
        }
        L = compose_components(g, p, gp, *subs);
    } else {
        throw ParseError("unknown strategy '" + s + "'");
    }

    if (!L) {
        body["status"] = "failed";
        body["stuck_vertex"] = *stuck;
        return {body, kOk, std::nullopt};
    }
    verify_or_breach(g, *L, s);
    body["status"] = "ok";
    body["group"] = L->group().to_string();
    body["labeling"] = io::to_json(*L);
    body["verification"] = io::verification_report(g, *L);
    Emitted e{body, kOk, std::nullopt};
    if (c.format == "dot") e.text = io::to_dot(g, &*L);
    return e;
}

Emitted cmd_verify(const RunConfig& c) {
    require_format(c, {"json"});
    if (c.labeling_file.empty()) throw ParseError("verify requires --labeling <file>");
    Labeling L = io::load_labeling(c.labeling_file);
    json body = header(c);
    if (c.directed) {
        auto [id, d] = input_digraph(c);
        body["graph"] = graph_summary(id, d.vertex_count(), d.arc_count());
        body["verification"] = io::verification_report(d, L);
    } else {
        auto [id, g] = input_graph(c);
        body["graph"] = graph_summary(id, g.vertex_count(), g.edge_count());
        body["verification"] = io::verification_report(g, L);
    }
    return {body, kOk, std::nullopt};
}

Emitted cmd_show(const RunConfig& c) {
    require_format(c, {"json", "dot", "table"});
    json body = header(c);
    std::string text;
    if (c.directed) {
        auto [id, d] = input_digraph(c);
        body["graph"] = io::to_json(d);
        std::ostringstream out;
        io::write_arc_list(out, d);
        text = c.format == "dot" ? io::to_dot(d) : out.str();
    } else {
        auto [id, g] = input_graph(c);
        body["graph"] = io::to_json(g);
        auto col = coloring_number(g);
        body["col"] = col.col;
        body["ordering"] = col.ordering;
        std::ostringstream out;
        io::write_edge_list(out, g);
        text = c.format == "dot" ? io::to_dot(g) : out.str();
    }
    Emitted e{body, kOk, std::nullopt};
    if (c.format != "json") e.text = text;
    return e;
}

}  // namespace

RunResult run(const RunConfig& c) {
    RunResult r;
    try {
        Emitted e;
        if (c.verb == "esg") e = cmd_esg(c);
        else if (c.verb == "es") e = cmd_es(c);
        else if (c.verb == "har") e = cmd_har(c);
        else if (c.verb == "sidon") e = cmd_sidon(c);
        else if (c.verb == "obstruct") e = cmd_obstruct(c);
        else if (c.verb == "bounds") e = cmd_bounds(c);
        else if (c.verb == "sweep") e = cmd_sweep(c);
        else if (c.verb == "label") e = cmd_label(c);
        else if (c.verb == "verify") e = cmd_verify(c);
        else if (c.verb == "show") e = cmd_show(c);
        else throw ParseError("unknown verb '" + c.verb + "'");
        r.exit_code = e.exit_code;
        r.out = e.text ? *e.text : e.body.dump(2) + "\n";
    } catch (const InvariantBreach& e) {
        r.exit_code = kInvariantBreach;
        r.err = std::string("invariant breach: ") + e.what() + "\n";
    } catch (const ParseError& e) {
        r.exit_code = kUsage;
        r.err = std::string("error: ") + e.what() + "\n";
    } catch (const DomainError& e) {
        r.exit_code = kUsage;
        r.err = std::string("error: ") + e.what() + "\n";
    } catch (const StructuralError& e) {
        r.exit_code = kUsage;
        r.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::logic_error& e) {
        r.exit_code = kInvariantBreach;
        r.err = std::string("invariant breach: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        r.exit_code = kUsage;
        r.err = std::string("error: ") + e.what() + "\n";
    }
    return r;
}

RunResult run(const std::vector<std::string>& args) {
    RunConfig c;
    CLI::App app{"Group edge irregularity strength toolkit"};
    app.require_subcommand(1);

    auto add_common = [&c](CLI::App* sub) {
        sub->add_option("--gen", c.gen, "Generator spec, e.g. cycle:6, kmn:2,3, path:4+star:3");
        sub->add_option("--graph", c.graph_file, "Graph file (edge list or JSON)");
        sub->add_option("--group", c.group, "Group spec, e.g. Z6 or Z2xZ3");
        sub->add_option("--budget-nodes", c.budget_nodes, "Node limit per search")->check(CLI::PositiveNumber);
        sub->add_option("--budget-secs", c.budget_secs, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
        sub->add_option("--workers", c.workers, "Parallel workers")->check(CLI::PositiveNumber);
        sub->add_option("--seed", c.seed, "Random seed");
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "dot", "table"}));
        sub->add_option("--max", c.max_value, "Largest value to try")->check(CLI::PositiveNumber);
        sub->add_flag("--directed", c.directed, "Treat the input as a digraph");
    };

    struct Verb {
        const char* name;
        const char* help;
    };
    const Verb verbs[] = {
        {"esg", "Exact group edge irregularity strength"},
        {"es", "Exact edge irregularity strength"},
        {"har", "Exact harmonious order"},
        {"sidon", "Maximum S2-set of a group"},
        {"obstruct", "Parity obstruction check"},
        {"bounds", "All applicable bounds"},
        {"sweep", "es_g - 2m margins over a corpus"},
        {"label", "Run a labeling constructor"},
        {"verify", "Verify a labeling file"},
        {"show", "Print a graph"},
    };
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        add_common(sub);
        const std::string name = v.name;
        if (name == "label") {
            sub->add_option("--strategy", c.strategy, "Constructor")
                ->required()
                ->check(CLI::IsMember({"forest", "bipartite", "greedy", "greedy-injective", "compose4", "components", "dag"}));
            sub->add_option("--partition", c.partition, "compose4: per-vertex classes 11,12,21,22");
            sub->add_option("--prime", c.prime, "components: odd prime for the first coordinate");
            sub->add_option("--anchor", c.anchor, "Label of the first vertex, e.g. (1)");
        }
        if (name == "bounds") {
            sub->add_flag("--planar", c.planar, "Declare the graph planar");
            sub->add_flag("!--no-exact", c.exact, "Skip exact computations");
        }
        if (name == "verify") sub->add_option("--labeling", c.labeling_file, "Labeling JSON file")->required();
        if (name == "sweep") sub->add_option("--c-grid", c.c_grid, "Comma-separated constants c");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kOk, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return {kUsage, "", std::string("error: ") + e.what() + "\n"};
    }
    for (auto* sub : app.get_subcommands()) c.verb = sub->get_name();
    return run(c);
}

}  // namespace esg::cli
