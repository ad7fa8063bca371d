#include "freeshift/actions.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace freeshift {

FiniteAction::FiniteAction(int rank, std::vector<std::string> names, std::vector<std::vector<Point>> perms)
    : rank_(rank), names_(std::move(names)), perms_(std::move(perms))
{
    if (rank_ < 1 || rank_ > 26)
        throw std::invalid_argument("rank must be in 1..26");
    if (perms_.size() != static_cast<std::size_t>(rank_))
        throw std::invalid_argument("need one permutation per generator");
    const std::size_t n = names_.size();
    for (std::size_t g = 0; g < perms_.size(); ++g) {
        if (perms_[g].size() != n)
            throw std::invalid_argument("permutation of the wrong size");
        std::vector<Point> inv(n, n);
        for (Point w = 0; w < n; ++w) {
            const Point x = perms_[g][w];
            if (x >= n || inv[x] != n)
                throw std::invalid_argument(std::string("generator ") + Letter(static_cast<int>(g), false).to_char() +
                                            " does not act by a bijection");
            inv[x] = w;
        }
        inverse_.push_back(std::move(inv));
    }
}

Point FiniteAction::step(Point w, Letter s) const
{
    const auto g = static_cast<std::size_t>(s.generator());
    return s.inverted() ? inverse_.at(g).at(w) : perms_.at(g).at(w);
}

Point FiniteAction::act(const Word& g, Point w) const
{
    for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it)
        w = step(w, it->inverse());
    return w;
}

RauzyGraph FiniteAction::schreier_graph() const
{
    GraphBuilder builder(rank_);
    for (const auto& name : names_)
        builder.add_vertex(name);
    for (int g = 0; g < rank_; ++g)
        for (Point w = 0; w < size(); ++w)
            builder.add_edge(w, perms_[g][w], Letter(g, false));
    return builder.build();
}

bool is_equivariant(const FiniteAction& from, const FiniteAction& to, const ActionMorphism& f)
{
    if (from.rank() != to.rank() || f.map.size() != from.size())
        return false;
    for (Point w = 0; w < from.size(); ++w) {
        if (f.map[w] >= to.size())
            return false;
        for (int g = 0; g < from.rank(); ++g)
            if (f.map[from.step(w, Letter(g, false))] != to.step(f.map[w], Letter(g, false)))
                return false;
    }
    return true;
}

std::vector<std::vector<Point>> orbits(const FiniteAction& act)
{
    const std::size_t n = act.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Point>> out;
    for (Point start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<Point> orbit{start};
        seen[start] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (int g = 0; g < act.rank(); ++g)
                for (bool inv : {false, true}) {
                    const Point x = act.step(orbit[i], Letter(g, inv));
                    if (!seen[x]) {
                        seen[x] = true;
                        orbit.push_back(x);
                    }
                }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

BuiltAction build_finite_action(const MeasuredRauzyGraph& mg)
{
    const auto& g = mg.graph;
    if (!validate_balance(mg).empty())
        throw std::invalid_argument("measured graph is not balanced");
    if (!mg.integral() || !mg.full_support())
        throw std::invalid_argument("finite actions need integer weights with full support");

    std::vector<std::string> names;
    std::vector<VertexId> fiber_of;
    std::vector<std::vector<Point>> fiber(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto count = static_cast<std::size_t>(numerator(mg.mu[v]));
        for (std::size_t i = 0; i < count; ++i) {
            fiber[v].push_back(names.size());
            fiber_of.push_back(v);
            names.push_back(g.vertex_name(v) + "." + std::to_string(i));
        }
    }
    const std::size_t n = names.size();
    constexpr Point unset = static_cast<Point>(-1);

    std::vector<std::vector<Point>> perms;
    for (int gen = 0; gen < g.rank(); ++gen) {
        const Letter s(gen, false);
        std::vector<Point> image(n, unset);
        std::vector<bool> hit(n, false);
        for (VertexId v1 = 0; v1 < g.vertex_count(); ++v1)
            for (VertexId v2 = 0; v2 < g.vertex_count(); ++v2) {
                const auto e = g.find_edge(v1, v2, s);
                if (!e)
                    continue;
                auto need = static_cast<std::size_t>(numerator(mg.m[*e]));
                auto w1 = fiber[v1].begin();
                auto w2 = fiber[v2].begin();
                for (; need > 0; --need) {
                    w1 = std::find_if(w1, fiber[v1].end(), [&](Point w) { return image[w] == unset; });
                    w2 = std::find_if(w2, fiber[v2].end(), [&](Point w) { return !hit[w]; });
                    if (w1 == fiber[v1].end() || w2 == fiber[v2].end())
                        throw std::logic_error("greedy edge matching stalled");
                    image[*w1] = *w2;
                    hit[*w2] = true;
                }
            }
        if (std::find(image.begin(), image.end(), unset) != image.end())
            throw std::logic_error("greedy edge matching left a point unmatched");
        perms.push_back(std::move(image));
    }
    return {FiniteAction(g.rank(), std::move(names), std::move(perms)), GraphMorphism{fiber_of}};
}

std::vector<Rational> edge_multiplicities(const FiniteAction& act, const GraphMorphism& pi, const RauzyGraph& g)
{
    std::vector<Rational> out(g.edge_count(), 0);
    for (Point w = 0; w < act.size(); ++w)
        for (Letter s : g.group().letters()) {
            const auto e = g.find_edge(pi.vertex_map.at(w), pi.vertex_map.at(act.step(w, s)), s);
            if (!e)
                throw std::invalid_argument("point map is not a graph morphism");
            out[*e] += 1;
        }
    return out;
}

FiniteAction make_transitive(const FiniteAction& act, const GraphMorphism& pi, const RauzyGraph& g, int generator)
{
    if (!is_connected(g))
        throw std::invalid_argument("graph is disconnected; no transitive action lies over it");
    if (generator < 0 || generator >= act.rank())
        throw std::invalid_argument("generator out of range");
    const std::size_t n = act.size();
    auto perms = act.perms();
    auto& tau = perms[static_cast<std::size_t>(generator)];

    auto cycle_ids = [&] {
        std::vector<std::size_t> id(n, n);
        std::size_t next = 0;
        for (Point w = 0; w < n; ++w) {
            if (id[w] != n)
                continue;
            for (Point x = w; id[x] == n; x = tau[x])
                id[x] = next;
            ++next;
        }
        return id;
    };

    for (bool merged = true; merged;) {
        merged = false;
        const auto id = cycle_ids();
        std::map<VertexId, Point> first_in_fiber;
        for (Point w = 0; w < n && !merged; ++w) {
            const VertexId v = pi.vertex_map.at(w);
            auto [it, fresh] = first_in_fiber.emplace(v, w);
            if (!fresh && id[it->second] != id[w]) {
                std::swap(tau[it->second], tau[w]);
                merged = true;
            }
        }
    }
    FiniteAction out(act.rank(), act.names(), std::move(perms));
    if (orbits(out).size() != 1)
        throw std::logic_error("fibers share a cycle but the action is not transitive");
    return out;
}

FiberProduct fiber_product(const FiniteAction& a1, const FiniteAction& a2, const FiniteAction& base,
                           const ActionMorphism& f1, const ActionMorphism& f2)
{
    if (!is_equivariant(a1, base, f1) || !is_equivariant(a2, base, f2))
        throw std::invalid_argument("fiber product needs equivariant maps to the common base");
    std::vector<std::pair<Point, Point>> pairs;
    for (Point y1 = 0; y1 < a1.size(); ++y1)
        for (Point y2 = 0; y2 < a2.size(); ++y2)
            if (f1.map[y1] == f2.map[y2])
                pairs.emplace_back(y1, y2);
    if (pairs.empty())
        throw std::runtime_error("fiber product is empty");
    std::map<std::pair<Point, Point>, Point> index;
    std::vector<std::string> names;
    FiberProduct out{FiniteAction(a1.rank(), {}, std::vector<std::vector<Point>>(a1.rank())), {}, {}};
    for (const auto& [y1, y2] : pairs) {
        index[{y1, y2}] = names.size();
        names.push_back("(" + a1.names()[y1] + "," + a2.names()[y2] + ")");
        out.first.map.push_back(y1);
        out.second.map.push_back(y2);
    }
    std::vector<std::vector<Point>> perms(a1.rank());
    for (int g = 0; g < a1.rank(); ++g)
        for (const auto& [y1, y2] : pairs)
            perms[g].push_back(index.at({a1.step(y1, Letter(g, false)), a2.step(y2, Letter(g, false))}));
    out.action = FiniteAction(a1.rank(), std::move(names), std::move(perms));
    return out;
}

WindowConfig periodic_window(const FiniteAction& act, Point base, int radius)
{
    if (base >= act.size())
        throw std::invalid_argument("base point out of range");
    auto domain = make_domain(FreeGroup(act.rank()).ball(radius));
    return WindowConfig::tabulate(domain, [&](const Word& g) { return static_cast<Symbol>(act.act(g.inverse(), base)); });
}

bool OccurrenceReport::complete() const
{
    return std::all_of(vertices.begin(), vertices.end(), [](bool b) { return b; }) &&
           std::all_of(edges.begin(), edges.end(), [](bool b) { return b; });
}

Realization realize_minimal_neighborhood(const MeasuredRauzyGraph& mg)
{
    const auto& g = mg.graph;
    auto built = build_finite_action(mg);
    FiniteAction action = make_transitive(built.action, built.pi, g);

    // eccentricity of point 0 in the Schreier graph
    std::vector<int> dist(action.size(), -1);
    std::queue<Point> todo;
    dist[0] = 0;
    todo.push(0);
    int ecc = 0;
    while (!todo.empty()) {
        const Point w = todo.front();
        todo.pop();
        ecc = std::max(ecc, dist[w]);
        for (Letter s : g.group().letters()) {
            const Point x = action.step(w, s);
            if (dist[x] < 0) {
                dist[x] = dist[w] + 1;
                todo.push(x);
            }
        }
    }
    const int radius = ecc + 1;
    WindowConfig window = periodic_window(action, 0, radius);

    OccurrenceReport report{std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.edge_count(), false)};
    const auto& pi = built.pi.vertex_map;
    for (const auto& w : window.domain()->words()) {
        const VertexId v = pi[window.at(w)];
        report.vertices[v] = true;
        for (Letter s : g.group().letters()) {
            const auto next = window.find(w * s);
            if (!next)
                continue;
            if (const auto e = g.find_edge(v, pi[*next], s))
                report.edges[*e] = true;
        }
    }
    return {std::move(action), built.pi, radius, std::move(window), std::move(report)};
}

} // namespace freeshift
