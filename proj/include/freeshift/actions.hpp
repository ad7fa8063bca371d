#pragma once

#include "freeshift/measured.hpp"
#include "freeshift/patterns.hpp"
#include "freeshift/rauzy.hpp"

#include <string>
#include <vector>

namespace freeshift {

using Point = std::size_t;

/// A finite set with one permutation per generator. The Schreier graph has an
/// edge w →s→ step(w, s); the group acts by s·w = step(w, s⁻¹).
class FiniteAction {
public:
    /// perms[g][w] = step(w, g-th generator). Throws std::invalid_argument
    /// unless every map is a bijection of {0..n-1} and names has length n.
    FiniteAction(int rank, std::vector<std::string> names, std::vector<std::vector<Point>> perms);

    int rank() const { return rank_; }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<Point>>& perms() const { return perms_; }

    Point step(Point w, Letter s) const;
    /// g·w for a word g, rightmost letter first.
    Point act(const Word& g, Point w) const;
    RauzyGraph schreier_graph() const;

    friend bool operator==(const FiniteAction&, const FiniteAction&) = default;

private:
    int rank_;
    std::vector<std::string> names_;
    std::vector<std::vector<Point>> perms_;
    std::vector<std::vector<Point>> inverse_;
};

/// An equivariant point map between actions.
struct ActionMorphism {
    std::vector<Point> map;
    friend bool operator==(const ActionMorphism&, const ActionMorphism&) = default;
};

bool is_equivariant(const FiniteAction& from, const FiniteAction& to, const ActionMorphism& f);

/// Connected components under all generators, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(const FiniteAction& act);

struct BuiltAction {
    FiniteAction action;
    /// Schreier graph of `action` onto the measured graph.
    GraphMorphism pi;
};

/// W = ⊔ {v} × [μ(v)], matched greedily per (s, v1, v2) in canonical order with
/// lowest free points first. Requires an integral, balanced, full-support input.
BuiltAction build_finite_action(const MeasuredRauzyGraph& g);

/// Number of edges w →s→ w′ of the action lying over each edge of the graph.
std::vector<Rational> edge_multiplicities(const FiniteAction& act, const GraphMorphism& pi, const RauzyGraph& g);

/// Swaps t-images of same-fiber points in distinct t-cycles until every fiber
/// lies in a single t-cycle. Fibers and multiplicities are unchanged. Throws
/// std::invalid_argument if the graph is disconnected.
FiniteAction make_transitive(const FiniteAction& act, const GraphMorphism& pi, const RauzyGraph& g,
                             int generator = 0);

struct FiberProduct {
    FiniteAction action;
    ActionMorphism first;
    ActionMorphism second;
};
/// {(y1, y2) : f1(y1) = f2(y2)} with the coordinatewise action. Throws
/// std::invalid_argument on non-equivariant maps, std::runtime_error if empty.
FiberProduct fiber_product(const FiniteAction& a1, const FiniteAction& a2, const FiniteAction& base,
                           const ActionMorphism& f1, const ActionMorphism& f2);

/// g ↦ g⁻¹·base on B_k, over the point names.
WindowConfig periodic_window(const FiniteAction& act, Point base, int radius);

struct OccurrenceReport {
    std::vector<bool> vertices;
    std::vector<bool> edges;
    bool complete() const;
};

struct Realization {
    FiniteAction action;
    GraphMorphism pi;
    int radius = 0;
    WindowConfig window;
    OccurrenceReport report;
};

/// build_finite_action, make_transitive, then the periodic window of point 0 at
/// radius (eccentricity + 1), scanned for every vertex and edge of g.
Realization realize_minimal_neighborhood(const MeasuredRauzyGraph& g);

} // namespace freeshift
