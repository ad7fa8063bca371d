#include "freeshift/rauzy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace freeshift {

namespace {

std::string edge_text(const RawGraph& raw, EdgeId e)
{
    const auto& r = raw.edges[e];
    std::ostringstream out;
    out << "edge " << e << " (";
    out << (r.source < raw.vertices.size() ? raw.vertices[r.source] : "?") << " -" << r.label.to_char() << "-> "
        << (r.range < raw.vertices.size() ? raw.vertices[r.range] : "?") << ")";
    return out.str();
}

} // namespace

std::vector<Violation> validate(const RawGraph& raw)
{
    std::vector<Violation> out;
    if (raw.rank < 1 || raw.rank > 26) {
        out.push_back({"rank", "rank " + std::to_string(raw.rank) + " outside 1..26"});
        return out;
    }
    if (raw.vertices.empty())
        out.push_back({"vertices", "graph has no vertices"});
    {
        std::set<std::string> names;
        for (const auto& n : raw.vertices)
            if (!names.insert(n).second)
                out.push_back({"vertices", "duplicate vertex name '" + n + "'"});
    }
    const std::size_t nv = raw.vertices.size();
    const std::size_t ne = raw.edges.size();
    bool indices_ok = true;
    for (EdgeId e = 0; e < ne; ++e) {
        const auto& r = raw.edges[e];
        if (r.source >= nv || r.range >= nv) {
            out.push_back({"indices", "edge " + std::to_string(e) + " has an endpoint outside the vertex list"});
            indices_ok = false;
        }
        if (r.label.generator() < 0 || r.label.generator() >= raw.rank) {
            out.push_back({"indices", "edge " + std::to_string(e) + " has a label outside the rank"});
            indices_ok = false;
        }
        if (r.bar >= ne) {
            out.push_back({"indices", "edge " + std::to_string(e) + " has bar outside the edge list"});
            indices_ok = false;
        }
    }
    if (!indices_ok)
        return out;

    for (EdgeId e = 0; e < ne; ++e) {
        const auto& r = raw.edges[e];
        const auto& b = raw.edges[r.bar];
        if (b.bar != e)
            out.push_back({"involution", edge_text(raw, e) + ": bar of bar is edge " + std::to_string(b.bar)});
        if (b.source != r.range || b.range != r.source)
            out.push_back({"bar-endpoints", edge_text(raw, e) + ": bar does not reverse endpoints"});
        if (b.label != r.label.inverse())
            out.push_back({"bar-label", edge_text(raw, e) + ": bar label is not the inverse letter"});
    }

    std::map<std::tuple<VertexId, VertexId, int>, EdgeId> seen;
    for (EdgeId e = 0; e < ne; ++e) {
        const auto& r = raw.edges[e];
        auto [it, fresh] = seen.emplace(std::make_tuple(r.source, r.range, r.label.code()), e);
        if (!fresh)
            out.push_back({"injective", edge_text(raw, e) + " duplicates edge " + std::to_string(it->second)});
    }

    std::set<std::pair<VertexId, int>> outgoing;
    for (const auto& r : raw.edges)
        outgoing.emplace(r.source, r.label.code());
    for (VertexId v = 0; v < nv; ++v)
        for (int c = 0; c < 2 * raw.rank; ++c)
            if (!outgoing.contains({v, c}))
                out.push_back({"total", "vertex " + raw.vertices[v] + ": no outgoing " +
                                            std::string(1, Letter::from_code(c).to_char())});
    return out;
}

namespace {

std::string summarize(const std::vector<Violation>& violations)
{
    std::string msg = "invalid Rauzy graph:";
    for (const auto& v : violations)
        msg += " [" + v.axiom + "] " + v.detail + ";";
    return msg;
}

} // namespace

InvalidGraph::InvalidGraph(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations))
{
}

RauzyGraph::RauzyGraph(RawGraph raw) : raw_(std::move(raw)), letters_(0)
{
    if (auto v = validate(raw_); !v.empty())
        throw InvalidGraph(std::move(v));
    letters_ = 2 * static_cast<std::size_t>(raw_.rank);
    out_.resize(raw_.vertices.size() * letters_);
    for (EdgeId e = 0; e < raw_.edges.size(); ++e)
        out_[raw_.edges[e].source * letters_ + raw_.edges[e].label.code()].push_back(e);
}

std::optional<VertexId> RauzyGraph::find_vertex(const std::string& name) const
{
    auto it = std::find(raw_.vertices.begin(), raw_.vertices.end(), name);
    if (it == raw_.vertices.end())
        return std::nullopt;
    return static_cast<VertexId>(it - raw_.vertices.begin());
}

std::optional<EdgeId> RauzyGraph::find_edge(VertexId from, VertexId to, Letter s) const
{
    for (EdgeId e : out_edges(from, s))
        if (raw_.edges[e].range == to)
            return e;
    return std::nullopt;
}

VertexId GraphBuilder::add_vertex(std::string name)
{
    raw_.vertices.push_back(std::move(name));
    return raw_.vertices.size() - 1;
}

std::pair<EdgeId, EdgeId> GraphBuilder::add_edge(VertexId from, VertexId to, Letter s)
{
    const EdgeId e = raw_.edges.size();
    raw_.edges.push_back({from, to, s, e + 1});
    raw_.edges.push_back({to, from, s.inverse(), e});
    return {e, e + 1};
}

bool is_deterministic(const RauzyGraph& g)
{
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (Letter s : g.group().letters())
            if (g.out_edges(v, s).size() != 1)
                return false;
    return true;
}

bool is_connected(const RauzyGraph& g)
{
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (Letter s : g.group().letters())
            for (EdgeId e : g.out_edges(v, s)) {
                VertexId w = g.edge(e).range;
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
    }
    return count == g.vertex_count();
}

std::vector<std::vector<bool>> reduced_reachability(const RauzyGraph& g)
{
    const std::size_t ne = g.edge_count();
    const auto letters = g.group().letters();
    std::vector<std::vector<EdgeId>> next(ne);
    for (EdgeId e = 0; e < ne; ++e) {
        const auto& r = g.edge(e);
        for (Letter s : letters) {
            if (s == r.label.inverse())
                continue;
            for (EdgeId f : g.out_edges(r.range, s))
                next[e].push_back(f);
        }
    }
    std::vector<std::vector<bool>> reach(ne, std::vector<bool>(ne, false));
    for (EdgeId e = 0; e < ne; ++e) {
        auto& row = reach[e];
        row[e] = true;
        std::vector<EdgeId> stack{e};
        while (!stack.empty()) {
            EdgeId x = stack.back();
            stack.pop_back();
            for (EdgeId y : next[x])
                if (!row[y]) {
                    row[y] = true;
                    stack.push_back(y);
                }
        }
    }
    return reach;
}

MinimalityResult is_minimal(const RauzyGraph& g)
{
    const auto reach = reduced_reachability(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f = 0; f < g.edge_count(); ++f)
            if (!reach[e][f] && !reach[e][g.edge(f).bar])
                return {false, std::make_pair(e, f)};
    return {true, std::nullopt};
}

Conditions check_conditions(const RauzyGraph& g)
{
    const auto reach = reduced_reachability(g);
    const std::size_t ne = g.edge_count();
    const std::size_t nv = g.vertex_count();
    Conditions c{true, true, true};

    std::vector<std::vector<bool>> vertex_reach(nv, std::vector<bool>(nv, false));
    for (EdgeId e = 0; e < ne; ++e)
        for (EdgeId f = 0; f < ne; ++f) {
            if (reach[e][f])
                vertex_reach[g.edge(e).source][g.edge(f).range] = true;
            else
                c.edge_connected = false;
            if (!reach[e][f] && !reach[e][g.edge(f).bar])
                c.minimal = false;
        }
    for (VertexId v = 0; v < nv; ++v)
        for (VertexId w = 0; w < nv; ++w)
            if (!vertex_reach[v][w])
                c.vertex_connected = false;
    return c;
}

Sft xg_sft(const RauzyGraph& g)
{
    const FreeGroup group = g.group();
    std::vector<Pattern> forbidden;
    for (Letter s : group.letters())
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId w = 0; w < g.vertex_count(); ++w)
                if (!g.find_edge(v, w, s))
                    forbidden.push_back(Pattern{{{Word(), static_cast<Symbol>(v)}, {Word::of(s), static_cast<Symbol>(w)}}});
    return Sft(g.rank(), Alphabet(g.raw().vertices), std::move(forbidden), group.ball(1));
}

RauzyGraph full_shift_graph(int rank, const PatternCodec& codec, const Alphabet& base)
{
    FreeGroup group(rank);
    GraphBuilder builder(rank);
    const auto names = codec.alphabet(base);
    const std::size_t n = codec.symbol_count();
    std::vector<Pattern> patterns;
    patterns.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        builder.add_vertex(names.name(static_cast<Symbol>(i)));
        patterns.push_back(codec.decode(static_cast<Symbol>(i)));
    }
    for (Letter s : group.generators()) {
        const Word sw = Word::of(s);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q)
                if (compatible(patterns[p], translate_pattern(sw, patterns[q])))
                    builder.add_edge(p, q, s);
        }
    }
    return builder.build();
}

WindowGraph graph_of_window(int rank, std::span<const WindowConfig> configs, std::span<const Word> support,
                            const Alphabet& base)
{
    const auto lang = restrict_language(configs, support);
    if (lang.patterns.empty())
        throw std::runtime_error("graph_of_window: empty window language");
    std::vector<Pattern> patterns(lang.patterns.begin(), lang.patterns.end());
    std::map<Pattern, VertexId> index;
    for (VertexId v = 0; v < patterns.size(); ++v)
        index.emplace(patterns[v], v);

    const FreeGroup group(rank);

    std::set<std::tuple<VertexId, VertexId, int>> triples;
    for (const auto& c : configs) {
        for (const auto& g : c.domain()->words()) {
            auto p1 = c.pattern_at(g, lang.support);
            if (!p1)
                continue;
            for (Letter s : group.generators()) {
                auto p2 = c.pattern_at(g * s, lang.support);
                if (p2)
                    triples.emplace(index.at(*p1), index.at(*p2), s.code());
            }
        }
    }
    GraphBuilder builder(rank);
    for (const auto& p : patterns) {
        std::string name = "{";
        bool first = true;
        for (const auto& [f, v] : p.values) {
            if (!first)
                name += ",";
            first = false;
            name += f.to_string() + ":" + base.name(v);
        }
        builder.add_vertex(name + "}");
    }
    for (const auto& [from, to, code] : triples)
        builder.add_edge(from, to, Letter::from_code(code));
    try {
        return {builder.build(), std::move(patterns)};
    } catch (const InvalidGraph& e) {
        throw std::runtime_error(std::string("graph_of_window: window data insufficient: ") + e.what());
    }
}

bool is_morphism(const RauzyGraph& from, const RauzyGraph& to, const GraphMorphism& pi)
{
    if (from.rank() != to.rank() || pi.vertex_map.size() != from.vertex_count())
        return false;
    for (VertexId v : pi.vertex_map)
        if (v >= to.vertex_count())
            return false;
    for (const auto& r : from.edges())
        if (!to.find_edge(pi.vertex_map[r.source], pi.vertex_map[r.range], r.label))
            return false;
    return true;
}

std::vector<EdgeId> induced_edge_map(const RauzyGraph& from, const RauzyGraph& to, const GraphMorphism& pi)
{
    if (!is_morphism(from, to, pi))
        throw std::invalid_argument("vertex map is not a graph morphism");
    std::vector<EdgeId> out;
    out.reserve(from.edge_count());
    for (const auto& r : from.edges())
        out.push_back(*to.find_edge(pi.vertex_map[r.source], pi.vertex_map[r.range], r.label));
    return out;
}

bool is_surjective(const RauzyGraph& from, const RauzyGraph& to, const GraphMorphism& pi)
{
    if (!is_morphism(from, to, pi))
        return false;
    std::vector<bool> hit(to.edge_count(), false);
    for (EdgeId e : induced_edge_map(from, to, pi))
        hit[e] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<std::tuple<std::size_t, std::size_t, int>> canonical_form(const RauzyGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("canonical_form supports at most 8 vertices");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::tuple<std::size_t, std::size_t, int>> best;
    bool have = false;
    std::vector<std::tuple<std::size_t, std::size_t, int>> current;
    do {
        current.clear();
        for (const auto& r : g.edges())
            current.emplace_back(perm[r.source], perm[r.range], r.label.code());
        std::sort(current.begin(), current.end());
        if (!have || current < best) {
            best = current;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool isomorphic(const RauzyGraph& x, const RauzyGraph& y)
{
    return x.rank() == y.rank() && x.vertex_count() == y.vertex_count() && x.edge_count() == y.edge_count() &&
           canonical_form(x) == canonical_form(y);
}

RauzyGraph graph_from_relations(int rank, std::size_t vertex_count,
                                const std::vector<std::vector<std::pair<VertexId, VertexId>>>& rel)
{
    if (rel.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("need one relation per generator");
    GraphBuilder builder(rank);
    for (std::size_t v = 0; v < vertex_count; ++v)
        builder.add_vertex("v" + std::to_string(v));
    for (int gen = 0; gen < rank; ++gen) {
        auto pairs = rel[gen];
        std::sort(pairs.begin(), pairs.end());
        for (auto [from, to] : pairs)
            builder.add_edge(from, to, Letter(gen, false));
    }
    return builder.build();
}

namespace {

using Relation = std::vector<std::pair<VertexId, VertexId>>;

Relation relation_from_mask(std::size_t n, std::uint64_t mask)
{
    Relation rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> (i * n + j) & 1u)
                rel.emplace_back(i, j);
    return rel;
}

bool full_rows_and_columns(std::size_t n, std::uint64_t mask)
{
    for (std::size_t i = 0; i < n; ++i) {
        bool row = false;
        bool col = false;
        for (std::size_t j = 0; j < n; ++j) {
            row = row || (mask >> (i * n + j) & 1u);
            col = col || (mask >> (j * n + i) & 1u);
        }
        if (!row || !col)
            return false;
    }
    return true;
}

} // namespace

RauzyGraph random_graph(int rank, std::size_t n, std::mt19937_64& rng)
{
    if (n == 0 || n > 8)
        throw std::invalid_argument("random_graph supports 1..8 vertices");
    std::bernoulli_distribution coin(0.5);
    std::vector<Relation> rels;
    for (int gen = 0; gen < rank; ++gen) {
        std::uint64_t mask = 0;
        do {
            mask = 0;
            for (std::size_t bit = 0; bit < n * n; ++bit)
                if (coin(rng))
                    mask |= std::uint64_t{1} << bit;
        } while (!full_rows_and_columns(n, mask));
        rels.push_back(relation_from_mask(n, mask));
    }
    return graph_from_relations(rank, n, rels);
}

std::size_t for_each_graph(int rank, std::size_t n, const std::function<void(const RauzyGraph&)>& visit)
{
    if (n == 0 || n > 4)
        throw std::invalid_argument("for_each_graph supports 1..4 vertices");
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask)
        if (full_rows_and_columns(n, mask))
            masks.push_back(mask);
    std::vector<std::size_t> choice(rank, 0);
    std::size_t count = 0;
    while (true) {
        std::vector<Relation> rels;
        for (int gen = 0; gen < rank; ++gen)
            rels.push_back(relation_from_mask(n, masks[choice[gen]]));
        visit(graph_from_relations(rank, n, rels));
        ++count;
        int pos = 0;
        while (pos < rank && ++choice[pos] == masks.size())
            choice[pos++] = 0;
        if (pos == rank)
            break;
    }
    return count;
}

ConditionWitnesses search_condition_witnesses(int rank, std::size_t max_vertices)
{
    ConditionWitnesses out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        out.graphs_searched += for_each_graph(rank, n, [&](const RauzyGraph& g) {
            if (out.vertex_connected_not_minimal && out.minimal_not_edge_connected)
                return;
            const auto c = check_conditions(g);
            if (c.vertex_connected && !c.minimal && !out.vertex_connected_not_minimal)
                out.vertex_connected_not_minimal = g;
            if (c.minimal && !c.edge_connected && !out.minimal_not_edge_connected)
                out.minimal_not_edge_connected = g;
        });
    }
    return out;
}

} // namespace freeshift
