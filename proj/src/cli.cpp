#include "freeshift/cli.hpp"

#include "freeshift/actions.hpp"
#include "freeshift/documents.hpp"
#include "freeshift/measured.hpp"
#include "freeshift/rauzy.hpp"
#include "freeshift/selectors.hpp"
#include "freeshift/special.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace freeshift {

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    int code = 0;
    Json verdict;
    Json witnesses = Json::object();
    std::optional<Json> document;
    std::optional<std::string> dot;
};

// Reads inputs and remembers their bytes for the digest.
class Session {
public:
    Json read(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw InputError("cannot read " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        const auto bytes = buf.str();
        files_.push_back(path);
        digest_ += path + '\0' + bytes + '\0';
        try {
            return Json::parse(bytes);
        } catch (const Json::parse_error& e) {
            throw InputError(path + ": " + e.what());
        }
    }

    const std::vector<std::string>& files() const { return files_; }
    const std::string& digest_bytes() const { return digest_; }

private:
    std::vector<std::string> files_;
    std::string digest_;
};

std::string letter_name(Letter s) { return std::string(1, s.to_char()); }

Letter parse_generator(const std::string& text, int rank)
{
    if (text.size() != 1)
        throw InputError("expected a single generator letter, got \"" + text + "\"");
    const Letter s = Letter::from_char(text[0]);
    if (s.inverted() || !FreeGroup(rank).contains(s))
        throw InputError("\"" + text + "\" is not a positive generator of rank " + std::to_string(rank));
    return s;
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(item);
    return out;
}

Json edge_json(const RauzyGraph& g, EdgeId e)
{
    const auto& r = g.edge(e);
    return Json{{"edge", e},
                {"source", g.vertex_name(r.source)},
                {"range", g.vertex_name(r.range)},
                {"label", letter_name(r.label)}};
}

RauzyGraph graph_arg(Session& s, const std::string& path) { return RauzyGraph(parse_graph_document(s.read(path)).raw); }

Json violations_json(const std::vector<Violation>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(Json{{"axiom", v.axiom}, {"detail", v.detail}});
    return out;
}

Json balance_json(const std::vector<BalanceViolation>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(Json{{"kind", v.kind},
                           {"where", v.where},
                           {"lhs", format_rational(v.lhs)},
                           {"rhs", format_rational(v.rhs)}});
    return out;
}

Json cycle_json(const RauzyGraph& g, const Cycle& c)
{
    Json edges = Json::array();
    for (EdgeId e : c.edges)
        edges.push_back(edge_json(g, e));
    return Json{{"edges", c.edges}, {"word", cycle_word(g, c).to_string()}, {"path", std::move(edges)}};
}

Json probe_json(const MinimalityProbe& p)
{
    return Json{{"g0", p.g0.to_string()}, {"h", p.h.to_string()}, {"gap", p.gap}, {"w1_prime", p.w1_prime.to_string()}};
}

struct Options {
    std::string graph;
    std::string selector;
    int radius = 2;
    std::string vertex;
    std::string cycle;
    int window = 2;
    int depth = 6;
    bool hint = false;
    bool transitive = false;
    std::string generator = "a";
    std::string first, second, base, f1, f2;
    int rank = 2;
    int slack = -1;
    std::string pattern;
    std::size_t max_vertices = 2;
    std::size_t max_configs = 1'000'000;
    bool list = false;
};

Outcome cmd_validate(Session& s, const Options& o)
{
    const auto doc = parse_graph_document(s.read(o.graph));
    Outcome r;
    const auto violations = validate(doc.raw);
    r.witnesses["violations"] = violations_json(violations);
    bool ok = violations.empty();
    if (ok && (doc.mu || doc.m)) {
        const auto balance = validate_balance(measured_graph(doc));
        r.witnesses["balance"] = balance_json(balance);
        ok = balance.empty();
    }
    if (violations.empty())
        r.dot = graph_dot(RauzyGraph(doc.raw));
    r.verdict = ok ? "valid" : "invalid";
    r.code = ok ? 0 : 1;
    return r;
}

Outcome cmd_minimal(Session& s, const Options& o)
{
    const auto g = graph_arg(s, o.graph);
    const auto result = is_minimal(g);
    Outcome r;
    r.verdict = result.minimal;
    if (result.witness) {
        r.witnesses["from"] = edge_json(g, result.witness->first);
        r.witnesses["to"] = edge_json(g, result.witness->second);
    }
    r.dot = graph_dot(g);
    r.code = result.minimal ? 0 : 1;
    return r;
}

Outcome cmd_conditions(Session& s, const Options& o)
{
    const auto g = graph_arg(s, o.graph);
    const auto c = check_conditions(g);
    Outcome r;
    r.verdict = Json{{"vertex_connected", c.vertex_connected}, {"minimal", c.minimal}, {"edge_connected", c.edge_connected}};
    r.dot = graph_dot(g);
    return r;
}

Outcome cmd_xg_window(Session& s, const Options& o)
{
    const auto g = graph_arg(s, o.graph);
    if (o.radius < 0)
        throw InputError("--radius must be non-negative");
    const auto x = xg_sft(g);
    const auto ball = g.group().ball(o.radius);
    EnumerateOptions opts;
    opts.max_configs = o.max_configs;
    const auto configs = enumerate_window(x, ball, opts);
    Outcome r;
    r.verdict = configs.size();
    r.witnesses["radius"] = o.radius;
    r.witnesses["count"] = configs.size();
    if (o.list) {
        Json all = Json::array();
        for (const auto& c : configs)
            all.push_back(window_json(g.rank(), x.alphabet(), c));
        r.witnesses["configs"] = std::move(all);
    }
    r.document = sft_json(x);
    r.code = configs.empty() ? 1 : 0;
    return r;
}

VertexId vertex_arg(const RauzyGraph& g, const std::string& name)
{
    if (name.empty())
        return 0;
    const auto v = g.find_vertex(name);
    if (!v)
        throw InputError("unknown vertex \"" + name + "\"");
    return *v;
}

Outcome cmd_cycle(Session& s, const Options& o)
{
    const auto g = graph_arg(s, o.graph);
    const auto v = vertex_arg(g, o.vertex);
    const auto c = find_cycle(g, v);
    Outcome r;
    r.verdict = "found";
    r.witnesses["vertex"] = g.vertex_name(v);
    r.witnesses["cycle"] = cycle_json(g, c);
    return r;
}

Outcome cmd_selector_synth(Session& s, const Options& o)
{
    const auto g = graph_arg(s, o.graph);
    Cycle c;
    if (o.cycle.empty()) {
        c = find_cycle(g, vertex_arg(g, o.vertex));
    } else {
        for (const auto& item : split_commas(o.cycle)) {
            try {
                std::size_t used = 0;
                const auto e = std::stoul(item, &used);
                if (used != item.size() || e >= g.edge_count())
                    throw std::invalid_argument(item);
                c.edges.push_back(e);
            } catch (const std::logic_error&) {
                throw InputError("--cycle: \"" + item + "\" is not an edge index");
            }
        }
    }
    if (!is_simple_reduced_cycle(g, c))
        throw InputError("--cycle is not a simple reduced cycle");
    const auto t = synthesize_recurrent(g, c);
    const auto violations = validate_recurrent(t, c);
    Outcome r;
    Json vs = Json::array();
    for (const auto& v : violations)
        vs.push_back(Json{{"condition", v.condition}, {"detail", v.detail}});
    r.witnesses["cycle"] = cycle_json(g, c);
    r.witnesses["violations"] = std::move(vs);
    r.verdict = violations.empty() ? "recurrent" : "not recurrent";
    r.code = violations.empty() ? 0 : 1;
    r.document = selector_json(t, c);
    return r;
}

Outcome cmd_selector_expand(Session& s, const Options& o)
{
    const auto doc = parse_selector_document(s.read(o.selector));
    if (o.radius < 0)
        throw InputError("--radius must be non-negative");
    const auto& g = doc.selector.graph();
    Outcome r;
    r.verdict = "expanded";
    r.witnesses["radius"] = o.radius;
    r.document = window_json(g.rank(), Alphabet(g.raw().vertices), x_t_window(doc.selector, o.radius));
    return r;
}

Outcome cmd_sofic_witness(Session& s, const Options& o)
{
    const auto doc = parse_selector_document(s.read(o.selector));
    const auto& t = doc.selector;
    const auto& g = t.graph();
    const auto w = sofic_witness(t);
    const bool admissible = w.z.admits(z0_window(t, o.radius));
    Outcome r;
    Json phi = Json::object();
    for (Symbol a = 0; a < w.z.alphabet().size(); ++a)
        phi[w.z.alphabet().name(a)] = g.vertex_name(w.phi[a]);
    Json range = Json::array();
    for (EdgeId e = 0; e < w.range.size(); ++e)
        if (w.range[e])
            range.push_back(e);
    r.witnesses["phi"] = std::move(phi);
    r.witnesses["z0_edges"] = std::move(range);
    r.witnesses["z0_admissible_radius"] = o.radius;
    r.verdict = admissible;
    r.code = admissible ? 0 : 1;
    r.document = sft_json(w.z);
    return r;
}

Outcome cmd_certify(Session& s, const Options& o)
{
    const auto doc = parse_selector_document(s.read(o.selector));
    if (!doc.cycle)
        throw InputError("selector document has no \"cycle\"");
    if (o.window < 0 || o.depth < 0)
        throw InputError("--window and --depth must be non-negative");
    const auto cert = certify_minimality(doc.selector, *doc.cycle, o.window, o.depth);
    Outcome r;
    r.witnesses = Json{{"window", cert.window},
                       {"depth", cert.depth},
                       {"cycle_length", cert.cycle_length},
                       {"probes", cert.probes},
                       {"max_gap", cert.max_gap},
                       {"max_w1_prime", cert.max_w1_prime},
                       {"gap_bound", cert.gap_bound}};
    if (cert.counterexample) {
        r.witnesses["counterexample"] = probe_json(*cert.counterexample);
        r.witnesses["offending_u"] = cert.offending_u.to_string();
    }
    r.verdict = cert.ok() ? "certified" : "counterexample";
    r.code = cert.ok() ? 0 : 1;
    return r;
}

Outcome cmd_measure(Session& s, const Options& o)
{
    const auto doc = parse_graph_document(s.read(o.graph));
    const RauzyGraph g(doc.raw);
    std::optional<MeasuredRauzyGraph> hint;
    if (o.hint)
        hint = measured_graph(doc);
    const auto sol = integer_solution(g, hint);
    Outcome r;
    r.witnesses["route"] = sol.route;
    r.witnesses["kernel_dimension"] = sol.kernel_dimension;
    if (sol.measured) {
        r.document = graph_json(*sol.measured);
        r.dot = graph_dot(g);
    }
    r.verdict = sol.measured ? "solved" : "no full-support solution";
    r.code = sol.measured ? 0 : 1;
    return r;
}

MeasuredRauzyGraph weights_or_solve(const GraphDocument& doc)
{
    if (doc.mu || doc.m)
        return measured_graph(doc);
    const auto sol = integer_solution(RauzyGraph(doc.raw));
    if (!sol.measured)
        throw InputError("graph has no full-support measure");
    return *sol.measured;
}

Outcome cmd_finite_action(Session& s, const Options& o)
{
    const auto mg = weights_or_solve(parse_graph_document(s.read(o.graph)));
    const auto& g = mg.graph;
    auto built = build_finite_action(mg);
    FiniteAction act = built.action;
    if (o.transitive)
        act = make_transitive(act, built.pi, g, parse_generator(o.generator, g.rank()).generator());
    Outcome r;
    Json pi = Json::object();
    for (Point w = 0; w < act.size(); ++w)
        pi[act.names()[w]] = g.vertex_name(built.pi.vertex_map[w]);
    const bool multiplicities = edge_multiplicities(act, built.pi, g) == mg.m;
    const auto orbit_count = orbits(act).size();
    r.witnesses["points"] = act.size();
    r.witnesses["orbits"] = orbit_count;
    r.witnesses["pi"] = std::move(pi);
    r.witnesses["multiplicities_match"] = multiplicities;
    r.witnesses["surjective"] = is_surjective(act.schreier_graph(), g, built.pi);
    r.verdict = multiplicities && (!o.transitive || orbit_count == 1);
    r.code = r.verdict.get<bool>() ? 0 : 1;
    r.document = action_json(act);
    r.dot = action_dot(act);
    return r;
}

ActionMorphism map_arg(const std::string& text, const FiniteAction& from, const FiniteAction& to, const char* flag)
{
    const auto items = split_commas(text);
    if (items.size() != from.size())
        throw InputError(std::string(flag) + ": expected " + std::to_string(from.size()) + " base point names");
    ActionMorphism f;
    for (const auto& name : items) {
        const auto it = std::find(to.names().begin(), to.names().end(), name);
        if (it == to.names().end())
            throw InputError(std::string(flag) + ": unknown base point \"" + name + "\"");
        f.map.push_back(static_cast<Point>(it - to.names().begin()));
    }
    return f;
}

Outcome cmd_fiber_product(Session& s, const Options& o)
{
    const auto a1 = parse_action_document(s.read(o.first));
    const auto a2 = parse_action_document(s.read(o.second));
    const auto base = parse_action_document(s.read(o.base));
    if (a1.rank() != base.rank() || a2.rank() != base.rank())
        throw InputError("actions have different ranks");
    const auto f1 = map_arg(o.f1, a1, base, "--f1");
    const auto f2 = map_arg(o.f2, a2, base, "--f2");
    const auto fp = fiber_product(a1, a2, base, f1, f2);
    bool square = is_equivariant(fp.action, a1, fp.first) && is_equivariant(fp.action, a2, fp.second);
    for (Point p = 0; p < fp.action.size(); ++p)
        square = square && f1.map[fp.first.map[p]] == f2.map[fp.second.map[p]];
    Outcome r;
    r.witnesses["points"] = fp.action.size();
    r.witnesses["orbits"] = orbits(fp.action).size();
    r.witnesses["square_commutes"] = square;
    r.verdict = square;
    r.code = square ? 0 : 1;
    r.document = action_json(fp.action);
    r.dot = action_dot(fp.action);
    return r;
}

Outcome cmd_special(Session&, const Options& o)
{
    if (o.rank < 2 || o.rank > 26)
        throw InputError("--rank must be in 2..26");
    if (o.radius < 0)
        throw InputError("--radius must be non-negative");
    const Letter s0 = parse_generator(o.generator, o.rank);
    const auto x = special_symbol_sft(o.rank, s0);
    const auto facts = special_symbol_facts(x, o.radius);
    const auto projected = projected_language(x, o.radius);
    const auto orbit = chi_orbit_language(o.rank, s0, o.radius, o.slack);
    Outcome r;
    r.witnesses["x0_admissible"] = x.x.admits(x0_window(x, o.radius));
    r.witnesses["fact_failures"] = facts;
    r.witnesses["projected_patterns"] = projected.patterns.size();
    r.witnesses["orbit_patterns"] = orbit.patterns.size();
    r.witnesses["languages_equal"] = projected == orbit;
    const bool ok = facts.empty() && projected == orbit;
    r.verdict = ok;
    r.code = ok ? 0 : 1;
    r.document = sft_json(x.x);
    return r;
}

Outcome cmd_return_set(Session& s, const Options& o)
{
    const auto doc = parse_window_document(s.read(o.graph));
    Json pattern_text;
    try {
        pattern_text = Json::parse(o.pattern);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("--pattern: ") + e.what());
    }
    const auto u = parse_pattern(pattern_text, doc.alphabet, "--pattern");
    if (o.depth < 0)
        throw InputError("--depth must be non-negative");
    const auto ret = return_set(doc.config, u, o.depth);
    Outcome r;
    Json elements = Json::array();
    for (const auto& g : ret)
        elements.push_back(g.to_string());
    r.witnesses["depth"] = o.depth;
    r.witnesses["count"] = ret.size();
    r.witnesses["elements"] = std::move(elements);
    r.verdict = ret.size();
    return r;
}

Outcome cmd_search(Session&, const Options& o)
{
    if (o.rank < 1 || o.rank > 2)
        throw InputError("--rank must be 1 or 2 for the exhaustive search");
    const auto w = search_condition_witnesses(o.rank, o.max_vertices);
    Outcome r;
    r.witnesses["graphs_searched"] = w.graphs_searched;
    r.witnesses["connected_not_minimal"] =
        w.vertex_connected_not_minimal ? graph_json(w.vertex_connected_not_minimal->raw()) : Json(nullptr);
    r.witnesses["minimal_not_edge_connected"] =
        w.minimal_not_edge_connected ? graph_json(w.minimal_not_edge_connected->raw()) : Json(nullptr);
    const bool found = w.vertex_connected_not_minimal && w.minimal_not_edge_connected;
    r.verdict = found;
    r.code = found ? 0 : 1;
    return r;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rauzy graphs, edge selectors and finite actions over free groups", "freeshift"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    bool timings = false;
    std::string emit, dot;
    app.add_flag("--timings", timings, "Add wall-clock timings to the report");
    app.add_option("--emit", emit, "Write the produced document to this file");
    app.add_option("--dot", dot, "Write a DOT drawing of the graph or action to this file");

    std::vector<std::pair<CLI::App*, std::function<Outcome(Session&, const Options&)>>> commands;
    auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
        auto* sub = parent->add_subcommand(name, help);
        commands.emplace_back(sub, fn);
        return sub;
    };
    auto graph_input = [&](CLI::App* sub) { sub->add_option("graph", o.graph, "Graph document")->required(); };
    auto selector_input = [&](CLI::App* sub) {
        sub->add_option("selector", o.selector, "Selector document")->required();
    };

    graph_input(add(&app, "validate", "Check the graph axioms and, if present, the balance equations", cmd_validate));
    graph_input(add(&app, "minimal", "Decide minimality", cmd_minimal));
    graph_input(add(&app, "conditions", "Evaluate the three connectivity conditions", cmd_conditions));
    {
        auto* sub = add(&app, "xg-window", "Count admissible configurations of X(G) on a ball", cmd_xg_window);
        graph_input(sub);
        sub->add_option("--radius", o.radius)->required();
        sub->add_option("--max-configs", o.max_configs);
        sub->add_flag("--list", o.list, "Include every configuration");
    }
    {
        auto* sub = add(&app, "cycle", "Find a simple reduced cycle through a vertex", cmd_cycle);
        graph_input(sub);
        sub->add_option("--vertex", o.vertex, "Vertex name (default: first vertex)");
    }
    {
        auto* sel = app.add_subcommand("selector", "Edge selectors");
        sel->require_subcommand(1);
        auto* synth = add(sel, "synth", "Synthesize a recurrent selector for a cycle", cmd_selector_synth);
        graph_input(synth);
        synth->add_option("--cycle", o.cycle, "Comma-separated edge indices (default: a found cycle)");
        synth->add_option("--vertex", o.vertex, "Vertex for the found cycle");
        auto* expand = add(sel, "expand", "Expand x_T on a ball", cmd_selector_expand);
        selector_input(expand);
        expand->add_option("--radius", o.radius)->required();
    }
    {
        auto* sub = add(&app, "sofic-witness", "Build the SFT whose image is the selector subshift", cmd_sofic_witness);
        selector_input(sub);
        sub->add_option("--radius", o.radius, "Radius for the z0 admissibility check");
    }
    {
        auto* sub = add(&app, "certify-minimal", "Certify syndetic returns of x_T", cmd_certify);
        selector_input(sub);
        sub->add_option("--window", o.window)->required();
        sub->add_option("--depth", o.depth)->required();
    }
    {
        auto* measure = app.add_subcommand("measure", "Measured graphs");
        measure->require_subcommand(1);
        auto* solve = add(measure, "solve", "Integer full-support solution of the balance equations", cmd_measure);
        graph_input(solve);
        solve->add_flag("--hint", o.hint, "Scale the weights given in the document");
    }
    {
        auto* sub = add(&app, "finite-action", "Finite action over a measured graph", cmd_finite_action);
        graph_input(sub);
        sub->add_flag("--transitive", o.transitive);
        sub->add_option("--generator", o.generator, "Generator whose cycles are merged");
    }
    {
        auto* sub = add(&app, "fiber-product", "Fiber product of two actions over a base", cmd_fiber_product);
        sub->add_option("first", o.first)->required();
        sub->add_option("second", o.second)->required();
        sub->add_option("base", o.base)->required();
        sub->add_option("--f1", o.f1, "Base point of each point of the first action")->required();
        sub->add_option("--f2", o.f2, "Base point of each point of the second action")->required();
    }
    {
        auto* sub = add(&app, "special-symbol", "Special-symbol SFT for a cyclic subgroup", cmd_special);
        sub->add_option("--rank", o.rank)->required();
        sub->add_option("--gen", o.generator)->required();
        sub->add_option("--radius", o.radius)->required();
        sub->add_option("--slack", o.slack, "Translate-scan slack (default: twice the radius)");
    }
    {
        auto* sub = add(&app, "return-set", "Return set of a window to a pattern", cmd_return_set);
        sub->add_option("window", o.graph, "Window document")->required();
        sub->add_option("--pattern", o.pattern, "JSON object word -> symbol")->required();
        sub->add_option("--depth", o.depth)->required();
    }
    {
        auto* sub = add(&app, "search-condition-witness", "Exhaustive search for separating graphs", cmd_search);
        sub->add_option("--max-vertices", o.max_vertices)->required();
        sub->add_option("--rank", o.rank);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::string> path;
    for (auto* sub = app.get_subcommands().front(); sub;) {
        path.push_back(sub->get_name());
        const auto subs = sub->get_subcommands();
        sub = subs.empty() ? nullptr : subs.front();
    }
    std::function<Outcome(Session&, const Options&)> handler;
    for (const auto& [sub, fn] : commands)
        if (sub->parsed())
            handler = fn;

    Session session;
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome outcome = handler(session, o);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::string command;
        for (const auto& p : path)
            command += (command.empty() ? "" : " ") + p;
        std::string digest_input = session.digest_bytes();
        for (const auto& a : args)
            if (a != "--timings")
                digest_input += a + '\0';

        Json report;
        report["command"] = command;
        report["inputs"] = Json{{"files", session.files()}, {"digest", "fnv1a64:" + fnv1a_hex(digest_input)}};
        report["verdict"] = outcome.verdict;
        report["witnesses"] = outcome.witnesses;
        if (outcome.document)
            report["document"] = *outcome.document;
        if (timings)
            report["timings"] = Json{{"seconds", seconds}};
        if (!emit.empty()) {
            if (!outcome.document)
                throw InputError("--emit: " + command + " produces no document");
            write_file(emit, outcome.document->dump(2) + "\n");
        }
        if (!dot.empty()) {
            if (!outcome.dot)
                throw InputError("--dot: " + command + " produces no graph");
            write_file(dot, *outcome.dot);
        }
        out << report.dump(2) << "\n";
        return outcome.code;
    } catch (const InvalidGraph& e) {
        err << "error: invalid graph\n";
        for (const auto& v : e.violations())
            err << "  " << v.axiom << ": " << v.detail << "\n";
    } catch (const UnbalancedHint& e) {
        err << "error: the hint is not balanced\n";
        for (const auto& v : e.violations())
            err << "  " << v.kind << " " << v.where << ": " << format_rational(v.lhs) << " != "
                << format_rational(v.rhs) << "\n";
    } catch (const CapExceeded& e) {
        err << "error: more than " << e.cap() << " configurations; raise --max-configs\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

} // namespace freeshift
