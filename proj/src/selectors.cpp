#include "freeshift/selectors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace freeshift {

namespace {

std::string describe(const RauzyGraph& g, EdgeId e)
{
    const auto& r = g.edge(e);
    std::ostringstream out;
    out << "edge " << e << " (" << g.vertex_name(r.source) << " -" << r.label.to_char() << "-> "
        << g.vertex_name(r.range) << ")";
    return out.str();
}

EdgeId least_out(const RauzyGraph& g, VertexId v, Letter s) { return g.out_edges(v, s).front(); }

// Shortest reduced path (as edge list, starting with `start`) ending in `target`.
std::optional<std::vector<EdgeId>> shortest_path(const RauzyGraph& g, EdgeId start, const std::vector<bool>& target)
{
    const std::size_t ne = g.edge_count();
    constexpr EdgeId none = static_cast<EdgeId>(-1);
    std::vector<EdgeId> parent(ne, none);
    std::vector<bool> seen(ne, false);
    std::queue<EdgeId> todo;
    seen[start] = true;
    todo.push(start);
    const auto letters = g.group().letters();
    while (!todo.empty()) {
        const EdgeId x = todo.front();
        todo.pop();
        if (target[x]) {
            std::vector<EdgeId> path;
            for (EdgeId y = x; y != none; y = parent[y])
                path.push_back(y);
            std::reverse(path.begin(), path.end());
            return path;
        }
        const auto& r = g.edge(x);
        for (Letter s : letters) {
            if (s == r.label.inverse())
                continue;
            for (EdgeId y : g.out_edges(r.range, s))
                if (!seen[y]) {
                    seen[y] = true;
                    parent[y] = x;
                    todo.push(y);
                }
        }
    }
    return std::nullopt;
}

class SlotSets {
public:
    explicit SlotSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

EdgeSelector::EdgeSelector(RauzyGraph graph, VertexId v0, std::vector<EdgeId> t0, std::vector<EdgeId> t1)
    : graph_(std::move(graph)), v0_(v0), letters_(2 * static_cast<std::size_t>(graph_.rank())), t0_(std::move(t0)),
      t1_(std::move(t1))
{
    if (v0_ >= graph_.vertex_count())
        throw std::invalid_argument("selector base vertex out of range");
    if (t0_.size() != letters_ || t1_.size() != letters_ * graph_.edge_count())
        throw std::invalid_argument("selector tables have the wrong size");
    for (int c = 0; c < static_cast<int>(letters_); ++c)
        set_t0(Letter::from_code(c), t0_[c]);
    for (EdgeId e = 0; e < graph_.edge_count(); ++e)
        for (int c = 0; c < static_cast<int>(letters_); ++c)
            set_t1(e, Letter::from_code(c), t1_[e * letters_ + c]);
}

void EdgeSelector::set_t0(Letter s, EdgeId e)
{
    if (e >= graph_.edge_count() || graph_.edge(e).source != v0_ || graph_.edge(e).label != s)
        throw std::invalid_argument(std::string("T0(") + s.to_char() + ") must leave the base vertex with that label");
    t0_[s.code()] = e;
}

void EdgeSelector::set_t1(EdgeId from, Letter s, EdgeId to)
{
    if (from >= graph_.edge_count() || to >= graph_.edge_count())
        throw std::invalid_argument("T1 entry refers to an unknown edge");
    if (graph_.edge(to).source != graph_.edge(from).range || graph_.edge(to).label != s)
        throw std::invalid_argument("T1(" + std::to_string(from) + ", " + s.to_char() + ") must leave " +
                                    graph_.vertex_name(graph_.edge(from).range) + " with that label");
    t1_[from * letters_ + s.code()] = to;
}

EdgeId EdgeSelector::extend(EdgeId e, const Word& w) const
{
    for (Letter s : w.letters())
        e = t1(e, s);
    return e;
}

VertexId EdgeSelector::point(const Word& g) const
{
    if (g.empty())
        return v0_;
    return graph_.edge(extend(t0(g.first()), g.tail())).range;
}

bool is_simple_reduced_cycle(const RauzyGraph& g, const Cycle& c)
{
    if (c.edges.empty())
        return false;
    std::vector<bool> used(g.edge_count(), false);
    for (EdgeId e : c.edges) {
        if (e >= g.edge_count() || used[e])
            return false;
        used[e] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& x = g.edge(c.edges[i]);
        const auto& y = g.edge(c.edges[(i + 1) % c.size()]);
        if (x.range != y.source || y.label == x.label.inverse())
            return false;
    }
    return true;
}

Cycle reversed(const RauzyGraph& g, const Cycle& c)
{
    Cycle out;
    for (auto it = c.edges.rbegin(); it != c.edges.rend(); ++it)
        out.edges.push_back(g.edge(*it).bar);
    return out;
}

Word cycle_word(const RauzyGraph& g, const Cycle& c)
{
    std::vector<Letter> letters;
    for (EdgeId e : c.edges)
        letters.push_back(g.edge(e).label);
    return Word(letters);
}

WindowConfig x_t_window(const EdgeSelector& t, int radius)
{
    auto domain = make_domain(t.graph().group().ball(radius));
    return WindowConfig::tabulate(domain, [&](const Word& g) { return static_cast<Symbol>(t.point(g)); });
}

Cycle find_cycle(const RauzyGraph& g, VertexId v)
{
    if (g.rank() < 2)
        throw std::invalid_argument("cycle search needs at least two generators");
    if (v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    if (!is_minimal(g).minimal)
        throw std::invalid_argument("graph is not minimal");

    // A reduced path from v back to v that starts with s; `closed` tells whether
    // it already closes up into a reduced cycle.
    auto attempt = [&](Letter s) {
        const EdgeId e = least_out(g, v, s);
        EdgeId f = g.edge_count();
        for (EdgeId x = 0; x < g.edge_count(); ++x)
            if (g.edge(x).range == v && g.edge(x).label == s) {
                f = x;
                break;
            }
        std::vector<bool> target(g.edge_count(), false);
        target[f] = true;
        target[g.edge(f).bar] = true;
        auto path = shortest_path(g, e, target);
        if (!path)
            throw std::logic_error("minimal graph without a return path");
        if (path->back() == f)
            return std::make_pair(*path, true);
        path->pop_back();
        const bool closed = g.edge(path->back()).label != s.inverse();
        return std::make_pair(*path, closed);
    };

    auto [edges, closed] = attempt(Letter(0, false));
    if (!closed) {
        auto [second, second_closed] = attempt(Letter(1, false));
        if (second_closed)
            edges = second;
        else
            edges.insert(edges.end(), second.begin(), second.end());
    }

    // Cut out subcycles (e, ..., e) until every edge occurs once.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < edges.size() && !changed; ++i)
            for (std::size_t j = edges.size() - 1; j > i; --j)
                if (edges[i] == edges[j]) {
                    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                edges.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    changed = true;
                    break;
                }
    }
    Cycle out{edges};
    if (!is_simple_reduced_cycle(g, out))
        throw std::logic_error("cycle construction produced an invalid cycle");
    return out;
}

EdgeSelector synthesize_recurrent(const RauzyGraph& g, const Cycle& c)
{
    if (!is_simple_reduced_cycle(g, c))
        throw std::invalid_argument("not a simple reduced cycle");
    if (!is_minimal(g).minimal)
        throw std::invalid_argument("graph is not minimal");

    const auto letters = g.group().letters();
    const std::size_t nl = letters.size();
    const std::size_t ne = g.edge_count();
    const std::size_t n = c.size();
    const auto& e = c.edges;
    auto bar = [&](EdgeId x) { return g.edge(x).bar; };
    auto label = [&](EdgeId x) { return g.edge(x).label; };
    auto slot = [&](EdgeId x, Letter s) { return x * nl + s.code(); };

    const VertexId v0 = g.edge(e[0]).source;
    std::vector<EdgeId> t0(nl);
    for (Letter s : letters)
        t0[s.code()] = least_out(g, v0, s);
    t0[label(e[0]).code()] = e[0];
    t0[label(e[n - 1]).inverse().code()] = bar(e[n - 1]);

    // T1 on C and C̄: forced values from following both cycles, and equal slots
    // where consecutive edges of C and C̄ meet.
    constexpr EdgeId unset = static_cast<EdgeId>(-1);
    SlotSets sets(ne * nl);
    std::vector<std::pair<std::size_t, EdgeId>> forced;
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeId cur = e[i];
        const EdgeId nxt = e[(i + 1) % n];
        forced.emplace_back(slot(cur, label(nxt)), nxt);
        forced.emplace_back(slot(bar(nxt), label(cur).inverse()), bar(cur));
        for (Letter s : letters)
            if (s != label(cur).inverse() && s != label(nxt))
                sets.unite(slot(cur, s), slot(bar(nxt), s));
    }
    std::vector<EdgeId> class_value(ne * nl, unset);
    for (auto [sl, value] : forced) {
        auto& v = class_value[sets.find(sl)];
        if (v != unset && v != value)
            throw std::logic_error("cycle constraints on T1 clash at " + describe(g, sl / nl));
        v = value;
    }

    std::vector<EdgeId> t1(ne * nl, unset);
    std::vector<bool> in_e(ne, false);
    for (EdgeId x : e) {
        in_e[x] = true;
        in_e[bar(x)] = true;
    }
    for (EdgeId x = 0; x < ne; ++x) {
        if (!in_e[x])
            continue;
        for (Letter s : letters) {
            // never constrained; filled last
            if (s == label(x).inverse())
                continue;
            auto& v = class_value[sets.find(slot(x, s))];
            if (v == unset)
                v = least_out(g, g.edge(x).range, s);
            t1[slot(x, s)] = v;
        }
    }

    // Grow the steered set by shortest reduced paths into it.
    for (EdgeId x = 0; x < ne; ++x) {
        if (in_e[x])
            continue;
        auto path = shortest_path(g, x, in_e);
        if (!path)
            throw std::logic_error("minimal graph without a path into the cycle");
        for (std::size_t i = 0; i + 1 < path->size(); ++i) {
            const EdgeId f = (*path)[i];
            const EdgeId f_next = (*path)[i + 1];
            t1[slot(f, label(f_next))] = f_next;
            in_e[f] = true;
        }
    }

    for (EdgeId x = 0; x < ne; ++x)
        for (Letter s : letters)
            if (t1[slot(x, s)] == unset)
                t1[slot(x, s)] = least_out(g, g.edge(x).range, s);
    return EdgeSelector(g, v0, std::move(t0), std::move(t1));
}

std::optional<Word> steer_to(const EdgeSelector& t, EdgeId e, const std::vector<bool>& target)
{
    const auto& g = t.graph();
    const std::size_t ne = g.edge_count();
    constexpr EdgeId none = static_cast<EdgeId>(-1);
    std::vector<EdgeId> parent(ne, none);
    std::vector<bool> seen(ne, false);
    std::queue<EdgeId> todo;
    seen[e] = true;
    todo.push(e);
    const auto letters = g.group().letters();
    while (!todo.empty()) {
        const EdgeId x = todo.front();
        todo.pop();
        if (target[x]) {
            std::vector<Letter> word;
            for (EdgeId y = x; y != e; y = parent[y])
                word.push_back(g.edge(y).label);
            std::reverse(word.begin(), word.end());
            return Word(word);
        }
        for (Letter s : letters) {
            if (s == g.edge(x).label.inverse())
                continue;
            const EdgeId y = t.t1(x, s);
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = x;
                todo.push(y);
            }
        }
    }
    return std::nullopt;
}

std::vector<RecurrenceViolation> validate_recurrent(const EdgeSelector& t, const Cycle& c)
{
    const auto& g = t.graph();
    std::vector<RecurrenceViolation> out;
    if (!is_simple_reduced_cycle(g, c)) {
        out.push_back({"cycle", "not a simple reduced cycle"});
        return out;
    }
    const std::size_t n = c.size();
    const auto& e = c.edges;
    auto bar = [&](EdgeId x) { return g.edge(x).bar; };
    auto label = [&](EdgeId x) { return g.edge(x).label; };
    auto entry = [&](EdgeId x, Letter s) { return "T1(" + std::to_string(x) + ", " + s.to_char() + ")"; };

    for (std::size_t i = 0; i < n; ++i) {
        const EdgeId cur = e[i];
        const EdgeId nxt = e[(i + 1) % n];
        if (t.t1(cur, label(nxt)) != nxt)
            out.push_back({"follows", entry(cur, label(nxt)) + " is not " + describe(g, nxt)});
        if (t.t1(bar(nxt), label(bar(cur))) != bar(cur))
            out.push_back({"follows", entry(bar(nxt), label(bar(cur))) + " is not " + describe(g, bar(cur))});
    }
    if (t.v0() != g.edge(e[0]).source)
        out.push_back({"base", "base vertex " + g.vertex_name(t.v0()) + " is not the source of the first cycle edge"});
    if (t.t0(label(e[0])) != e[0])
        out.push_back({"initial", std::string("T0(") + label(e[0]).to_char() + ") is not the first cycle edge"});
    const Letter back = label(e[n - 1]).inverse();
    if (t.t0(back) != bar(e[n - 1]))
        out.push_back({"initial", std::string("T0(") + back.to_char() + ") is not the reversed last cycle edge"});
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeId cur = e[i];
        const EdgeId nxt = e[(i + 1) % n];
        for (Letter s : g.group().letters()) {
            if (s == label(cur).inverse() || s == label(nxt))
                continue;
            if (t.t1(cur, s) != t.t1(bar(nxt), s))
                out.push_back({"agree", entry(cur, s) + " differs from " + entry(bar(nxt), s)});
        }
    }
    std::vector<bool> target(g.edge_count(), false);
    for (EdgeId x : e) {
        target[x] = true;
        target[bar(x)] = true;
    }
    for (EdgeId x = 0; x < g.edge_count(); ++x)
        if (!steer_to(t, x, target))
            out.push_back({"reachable", describe(g, x) + " never reaches the cycle"});
    return out;
}

SoficWitness sofic_witness(const EdgeSelector& t)
{
    const auto& g = t.graph();
    const FreeGroup group = g.group();
    const auto letters = group.letters();
    const std::size_t ne = g.edge_count();
    const auto star = static_cast<Symbol>(ne);

    std::vector<bool> range(ne, false);
    std::vector<EdgeId> stack;
    for (Letter s : letters)
        if (!range[t.t0(s)]) {
            range[t.t0(s)] = true;
            stack.push_back(t.t0(s));
        }
    while (!stack.empty()) {
        const EdgeId x = stack.back();
        stack.pop_back();
        for (Letter s : letters) {
            if (s == g.edge(x).label.inverse())
                continue;
            const EdgeId y = t.t1(x, s);
            if (!range[y]) {
                range[y] = true;
                stack.push_back(y);
            }
        }
    }

    std::vector<std::string> names;
    for (EdgeId x = 0; x < ne; ++x)
        names.push_back("e" + std::to_string(x));
    names.push_back("*");

    std::vector<Pattern> forbidden;
    auto pair = [](Letter s, Symbol x, Symbol y) {
        return Pattern{{{Word(), x}, {Word::of(s), y}}};
    };
    for (EdgeId x = 0; x < ne; ++x)
        if (!range[x])
            forbidden.push_back(Pattern{{{Word(), static_cast<Symbol>(x)}}});
    for (Letter s : letters)
        for (Symbol y = 0; y <= star; ++y)
            if (y != t.t0(s))
                forbidden.push_back(pair(s, star, y));
    for (EdgeId x = 0; x < ne; ++x) {
        const Letter lx = g.edge(x).label;
        for (Letter s : letters)
            for (Symbol y = 0; y <= star; ++y) {
                const bool is_edge = y != star;
                bool bad = is_edge && g.edge(y).label == lx.inverse();
                if (s != lx.inverse())
                    bad = bad || y != t.t1(x, s);
                else
                    bad = bad || (is_edge && t.t1(y, lx) != x);
                if (bad)
                    forbidden.push_back(pair(s, static_cast<Symbol>(x), y));
            }
    }

    std::vector<VertexId> phi;
    for (EdgeId x = 0; x < ne; ++x)
        phi.push_back(g.edge(x).range);
    phi.push_back(t.v0());
    return SoficWitness{Sft(g.rank(), Alphabet(names), std::move(forbidden), group.ball(1)), std::move(phi), star,
                        std::move(range)};
}

WindowConfig z0_window(const EdgeSelector& t, int radius)
{
    const auto star = static_cast<Symbol>(t.graph().edge_count());
    auto domain = make_domain(t.graph().group().ball(radius));
    return WindowConfig::tabulate(domain, [&](const Word& w) {
        return w.empty() ? star : static_cast<Symbol>(t.extend(t.t0(w.first()), w.tail()));
    });
}

MinimalityCertificate certify_minimality(const EdgeSelector& t, const Cycle& c, int window, int depth)
{
    const auto& g = t.graph();
    if (!is_simple_reduced_cycle(g, c))
        throw std::invalid_argument("not a simple reduced cycle");
    if (window < 0 || depth < 0)
        throw std::invalid_argument("window and depth must be non-negative");
    const std::size_t ne = g.edge_count();
    const std::size_t n = c.size();
    const Cycle rc = reversed(g, c);
    const std::size_t k = (static_cast<std::size_t>(window) + n - 1) / n;

    std::vector<int> pos_c(ne, -1), pos_rc(ne, -1);
    std::vector<bool> target(ne, false);
    for (std::size_t i = 0; i < n; ++i) {
        pos_c[c.edges[i]] = static_cast<int>(i);
        pos_rc[rc.edges[i]] = static_cast<int>(i);
        target[c.edges[i]] = target[rc.edges[i]] = true;
    }

    // Per edge e: w1′ and which cycle (C or C̄) the return lands on.
    struct Return {
        Word w1_prime;
        bool reversed;
    };
    std::vector<Return> ret(ne);
    MinimalityCertificate cert;
    cert.window = window;
    cert.depth = depth;
    cert.cycle_length = n;
    for (EdgeId e = 0; e < ne; ++e) {
        auto w = steer_to(t, e, target);
        if (!w)
            throw std::invalid_argument("edge " + std::to_string(e) + " cannot be steered to the cycle");
        const EdgeId landing = t.extend(e, *w);
        const bool rev = pos_c[landing] < 0;
        const Cycle& d = rev ? rc : c;
        std::size_t j = static_cast<std::size_t>(rev ? pos_rc[landing] : pos_c[landing]);
        Word w1 = *w;
        while (w1.empty() || j != 0) {
            j = (j + 1) % n;
            w1 = w1 * g.edge(d.edges[j]).label;
        }
        std::vector<Letter> head(w1.letters().begin(), w1.letters().end() - 1);
        ret[e] = {Word(head), rev};
        cert.max_w1_prime = std::max(cert.max_w1_prime, ret[e].w1_prime.length());
    }
    cert.gap_bound = cert.max_w1_prime + n * k;

    auto power = [](const Word& w, std::size_t times) {
        Word out;
        for (std::size_t i = 0; i < times; ++i)
            out = out * w;
        return out;
    };
    const Word c_pow = power(cycle_word(g, c), k);
    const Word rc_pow = power(cycle_word(g, rc), k);
    const auto probe_ball = g.group().ball(window);

    for (const Word& g0 : g.group().ball(depth)) {
        MinimalityProbe probe;
        probe.g0 = g0;
        if (g0.empty()) {
            probe.h = c_pow;
        } else {
            const EdgeId e = t.extend(t.t0(g0.first()), g0.tail());
            probe.w1_prime = ret[e].w1_prime;
            probe.h = g0 * ret[e].w1_prime * (ret[e].reversed ? rc_pow : c_pow);
        }
        probe.gap = probe.h.length() - g0.length();
        ++cert.probes;
        cert.max_gap = std::max(cert.max_gap, probe.gap);
        for (const Word& u : probe_ball)
            if (t.point(probe.h * u) != t.point(u)) {
                cert.counterexample = probe;
                cert.offending_u = u;
                return cert;
            }
    }
    return cert;
}

} // namespace freeshift
