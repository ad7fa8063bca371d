#include "freeshift/documents.hpp"

#include <map>
#include <sstream>

namespace freeshift {

DocumentError::DocumentError(std::string location, const std::string& message)
    : std::runtime_error((location.empty() ? std::string("/") : location) + ": " + message),
      location_(std::move(location))
{
}

namespace {

// A JSON value together with its pointer, for error messages.
struct Node {
    const Json& j;
    std::string path;

    [[noreturn]] void fail(const std::string& message) const { throw DocumentError(path, message); }

    bool has(const std::string& key) const { return j.is_object() && j.contains(key); }

    Node at(const std::string& key) const
    {
        if (!j.is_object())
            fail("expected an object");
        if (!j.contains(key))
            fail("missing field \"" + key + "\"");
        return {j.at(key), path + "/" + key};
    }

    Node at(std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }

    std::size_t size() const
    {
        if (!j.is_array())
            fail("expected an array");
        return j.size();
    }

    const Json& object() const
    {
        if (!j.is_object())
            fail("expected an object");
        return j;
    }

    std::string str() const
    {
        if (!j.is_string())
            fail("expected a string");
        return j.get<std::string>();
    }

    std::int64_t integer() const
    {
        if (!j.is_number_integer())
            fail("expected an integer");
        return j.get<std::int64_t>();
    }

    std::size_t index(std::size_t bound) const
    {
        const auto v = integer();
        if (v < 0 || static_cast<std::size_t>(v) >= bound)
            fail("index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
        return static_cast<std::size_t>(v);
    }

    Letter letter(int rank) const
    {
        const auto s = str();
        if (s.size() != 1)
            fail("expected a single letter, got \"" + s + "\"");
        try {
            const Letter l = Letter::from_char(s[0]);
            if (!FreeGroup(rank).contains(l))
                fail("letter " + s + " is outside rank " + std::to_string(rank));
            return l;
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    Word word(int rank) const
    {
        try {
            auto w = Word::parse(str());
            if (!FreeGroup(rank).contains(w))
                fail("word " + w.to_string() + " is outside rank " + std::to_string(rank));
            return w;
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    Rational rational() const
    {
        if (j.is_number_integer())
            return Rational(j.get<std::int64_t>());
        try {
            return parse_rational(str());
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    int rank() const
    {
        const auto r = integer();
        if (r < 1 || r > 26)
            fail("rank must be in 1..26");
        return static_cast<int>(r);
    }
};

std::string letter_name(Letter s) { return std::string(1, s.to_char()); }

std::vector<std::string> string_list(const Node& n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n.size(); ++i)
        out.push_back(n.at(i).str());
    return out;
}

Json rational_list(const std::vector<Rational>& q)
{
    Json out = Json::array();
    for (const auto& x : q)
        out.push_back(format_rational(x));
    return out;
}

std::vector<Rational> parse_rationals(const Node& n, std::size_t expected)
{
    if (n.size() != expected)
        n.fail("expected " + std::to_string(expected) + " entries, got " + std::to_string(n.size()));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < expected; ++i)
        out.push_back(n.at(i).rational());
    return out;
}

void expect_kind(const Node& n, const std::string& kind)
{
    if (n.has("kind") && n.at("kind").str() != kind)
        n.at("kind").fail("expected kind \"" + kind + "\"");
}

Symbol symbol(const Node& n, const Alphabet& alphabet)
{
    const auto name = n.str();
    const auto s = alphabet.find(name);
    if (!s)
        n.fail("unknown symbol \"" + name + "\"");
    return *s;
}

} // namespace

GraphDocument parse_graph_document(const Json& j)
{
    const Node root{j, ""};
    root.object();
    expect_kind(root, "graph");
    GraphDocument doc;
    doc.raw.rank = root.at("rank").rank();
    const auto vertices = root.at("vertices");
    doc.raw.vertices = string_list(vertices);
    std::map<std::string, VertexId> by_name;
    for (std::size_t v = 0; v < doc.raw.vertices.size(); ++v)
        if (!by_name.emplace(doc.raw.vertices[v], v).second)
            vertices.at(v).fail("duplicate vertex name \"" + doc.raw.vertices[v] + "\"");
    auto vertex = [&](const Node& n) {
        const auto it = by_name.find(n.str());
        if (it == by_name.end())
            n.fail("unknown vertex \"" + n.str() + "\"");
        return it->second;
    };
    const auto edges = root.at("edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto e = edges.at(i);
        e.object();
        doc.raw.edges.push_back(EdgeRecord{vertex(e.at("source")), vertex(e.at("range")),
                                           e.at("label").letter(doc.raw.rank), e.at("bar").index(edges.size())});
    }
    if (root.has("mu"))
        doc.mu = parse_rationals(root.at("mu"), doc.raw.vertices.size());
    if (root.has("m"))
        doc.m = parse_rationals(root.at("m"), doc.raw.edges.size());
    return doc;
}

Json graph_json(const RawGraph& raw)
{
    Json out;
    out["kind"] = "graph";
    out["rank"] = raw.rank;
    out["vertices"] = raw.vertices;
    Json edges = Json::array();
    for (const auto& e : raw.edges)
        edges.push_back(Json{{"source", raw.vertices.at(e.source)},
                             {"range", raw.vertices.at(e.range)},
                             {"label", letter_name(e.label)},
                             {"bar", e.bar}});
    out["edges"] = std::move(edges);
    return out;
}

Json graph_json(const MeasuredRauzyGraph& g)
{
    Json out = graph_json(g.graph.raw());
    out["mu"] = rational_list(g.mu);
    out["m"] = rational_list(g.m);
    return out;
}

MeasuredRauzyGraph measured_graph(const GraphDocument& doc)
{
    if (!doc.mu || !doc.m)
        throw DocumentError("", "measured graph needs both \"mu\" and \"m\"");
    return {RauzyGraph(doc.raw), *doc.mu, *doc.m};
}

Json selector_json(const EdgeSelector& t, const std::optional<Cycle>& cycle)
{
    const auto& g = t.graph();
    const auto letters = g.group().letters();
    Json out;
    out["kind"] = "selector";
    out["graph"] = graph_json(g.raw());
    out["v0"] = g.vertex_name(t.v0());
    Json t0 = Json::object();
    for (Letter s : letters)
        t0[letter_name(s)] = t.t0(s);
    out["t0"] = std::move(t0);
    Json t1 = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Json row = Json::object();
        for (Letter s : letters)
            row[letter_name(s)] = t.t1(e, s);
        t1.push_back(std::move(row));
    }
    out["t1"] = std::move(t1);
    if (cycle)
        out["cycle"] = cycle->edges;
    return out;
}

SelectorDocument parse_selector_document(const Json& j)
{
    const Node root{j, ""};
    root.object();
    expect_kind(root, "selector");
    GraphDocument gdoc;
    try {
        gdoc = parse_graph_document(root.at("graph").j);
    } catch (const DocumentError& e) {
        throw DocumentError("/graph" + e.location(), std::string(e.what()).substr(e.location().size() + 2));
    }
    RauzyGraph g(gdoc.raw);
    const auto letters = g.group().letters();
    const auto v0_node = root.at("v0");
    const auto v0 = g.find_vertex(v0_node.str());
    if (!v0)
        v0_node.fail("unknown vertex \"" + v0_node.str() + "\"");

    const std::size_t n = letters.size();
    std::vector<EdgeId> t0(n);
    const auto t0_node = root.at("t0");
    for (Letter s : letters)
        t0[s.code()] = t0_node.at(letter_name(s)).index(g.edge_count());
    const auto t1_node = root.at("t1");
    if (t1_node.size() != g.edge_count())
        t1_node.fail("expected one row per edge");
    std::vector<EdgeId> t1(n * g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (Letter s : letters)
            t1[e * n + s.code()] = t1_node.at(e).at(letter_name(s)).index(g.edge_count());

    std::optional<Cycle> cycle;
    if (root.has("cycle")) {
        const auto c = root.at("cycle");
        cycle.emplace();
        for (std::size_t i = 0; i < c.size(); ++i)
            cycle->edges.push_back(c.at(i).index(g.edge_count()));
    }
    try {
        return {EdgeSelector(std::move(g), *v0, std::move(t0), std::move(t1)), std::move(cycle)};
    } catch (const std::invalid_argument& e) {
        throw DocumentError("", e.what());
    }
}

Json sft_json(const Sft& x)
{
    Json out;
    out["kind"] = "sft";
    out["rank"] = x.rank();
    out["alphabet"] = x.alphabet().names();
    Json window = Json::array();
    for (const auto& w : x.window())
        window.push_back(w.to_string());
    out["window"] = std::move(window);
    Json forbidden = Json::array();
    for (const auto& p : x.forbidden())
        forbidden.push_back(pattern_json(p, x.alphabet()));
    out["forbidden"] = std::move(forbidden);
    return out;
}

Sft parse_sft_document(const Json& j)
{
    const Node root{j, ""};
    root.object();
    expect_kind(root, "sft");
    const int rank = root.at("rank").rank();
    Alphabet alphabet(string_list(root.at("alphabet")));
    std::vector<Word> window;
    const auto wn = root.at("window");
    for (std::size_t i = 0; i < wn.size(); ++i)
        window.push_back(wn.at(i).word(rank));
    std::vector<Pattern> forbidden;
    const auto fn = root.at("forbidden");
    for (std::size_t i = 0; i < fn.size(); ++i)
        forbidden.push_back(parse_pattern(fn.at(i).j, alphabet, fn.at(i).path));
    try {
        return Sft(rank, std::move(alphabet), std::move(forbidden), std::move(window));
    } catch (const std::invalid_argument& e) {
        throw DocumentError("", e.what());
    }
}

Json action_json(const FiniteAction& act)
{
    Json out;
    out["kind"] = "action";
    out["rank"] = act.rank();
    out["points"] = act.names();
    Json step = Json::object();
    for (int g = 0; g < act.rank(); ++g)
        step[letter_name(Letter(g, false))] = act.perms()[g];
    out["step"] = std::move(step);
    return out;
}

FiniteAction parse_action_document(const Json& j)
{
    const Node root{j, ""};
    root.object();
    expect_kind(root, "action");
    const int rank = root.at("rank").rank();
    auto names = string_list(root.at("points"));
    std::vector<std::vector<Point>> perms;
    const auto step = root.at("step");
    for (int g = 0; g < rank; ++g) {
        const auto row = step.at(letter_name(Letter(g, false)));
        if (row.size() != names.size())
            row.fail("expected one image per point");
        std::vector<Point> perm;
        for (std::size_t w = 0; w < names.size(); ++w)
            perm.push_back(row.at(w).index(names.size()));
        perms.push_back(std::move(perm));
    }
    try {
        return FiniteAction(rank, std::move(names), std::move(perms));
    } catch (const std::invalid_argument& e) {
        step.fail(e.what());
    }
}

Json window_json(int rank, const Alphabet& alphabet, const WindowConfig& c)
{
    Json out;
    out["kind"] = "window";
    out["rank"] = rank;
    out["alphabet"] = alphabet.names();
    Json values = Json::object();
    const auto& words = c.domain()->words();
    for (std::size_t i = 0; i < words.size(); ++i)
        values[words[i].to_string()] = alphabet.name(c.values()[i]);
    out["values"] = std::move(values);
    return out;
}

WindowDocument parse_window_document(const Json& j)
{
    const Node root{j, ""};
    root.object();
    expect_kind(root, "window");
    const int rank = root.at("rank").rank();
    Alphabet alphabet(string_list(root.at("alphabet")));
    const auto values = root.at("values");
    std::vector<Word> words;
    std::vector<Symbol> symbols;
    for (const auto& [key, value] : values.object().items()) {
        const Json key_json(key);
        const Node k{key_json, values.path + "/" + key};
        words.push_back(k.word(rank));
        symbols.push_back(symbol(Node{value, k.path}, alphabet));
    }
    std::set<Word> distinct(words.begin(), words.end());
    if (distinct.size() != words.size())
        values.fail("two keys name the same reduced word");
    return {rank, std::move(alphabet), WindowConfig(make_domain(std::move(words)), std::move(symbols))};
}

Json pattern_json(const Pattern& p, const Alphabet& alphabet)
{
    Json out = Json::object();
    for (const auto& [w, s] : p.values)
        out[w.to_string()] = alphabet.name(s);
    return out;
}

Pattern parse_pattern(const Json& j, const Alphabet& alphabet, const std::string& location)
{
    const Node root{j, location};
    Pattern p;
    for (const auto& [key, value] : root.object().items()) {
        const Json key_json(key);
        const Node k{key_json, location + "/" + key};
        const auto w = k.word(26);
        if (!p.values.emplace(w, symbol(Node{value, k.path}, alphabet)).second)
            k.fail("two keys name the same reduced word");
    }
    return p;
}

std::string graph_dot(const RauzyGraph& g)
{
    std::ostringstream out;
    out << "digraph rauzy {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "  n" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
    for (const auto& e : g.edges())
        if (!e.label.inverted())
            out << "  n" << e.source << " -> n" << e.range << " [label=\"" << e.label.to_char() << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string action_dot(const FiniteAction& act)
{
    return graph_dot(act.schreier_graph());
}

} // namespace freeshift
