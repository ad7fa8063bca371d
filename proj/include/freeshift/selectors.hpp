#pragma once

#include "freeshift/patterns.hpp"
#include "freeshift/rauzy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freeshift {

/// (v0, T0, T1) for a Rauzy graph. T0(s) leaves v0 with label s; T1(e, s) leaves
/// ρ(e) with label s. Entries T1(e, ℓ(e)⁻¹) are stored but never consulted.
class EdgeSelector {
public:
    /// Checks every entry; throws std::invalid_argument on a mismatch.
    EdgeSelector(RauzyGraph graph, VertexId v0, std::vector<EdgeId> t0, std::vector<EdgeId> t1);

    const RauzyGraph& graph() const { return graph_; }
    VertexId v0() const { return v0_; }
    EdgeId t0(Letter s) const { return t0_.at(s.code()); }
    EdgeId t1(EdgeId e, Letter s) const { return t1_.at(e * letters_ + s.code()); }
    /// Flat tables: t0 indexed by letter code, t1 by edge * 2d + letter code.
    const std::vector<EdgeId>& t0_table() const { return t0_; }
    const std::vector<EdgeId>& t1_table() const { return t1_; }

    void set_t0(Letter s, EdgeId e);
    void set_t1(EdgeId from, Letter s, EdgeId to);

    /// T1 along a reduced word, left to right.
    EdgeId extend(EdgeId e, const Word& w) const;
    /// x_T(g): v0 at the identity, ρ(T1(T0(s), w)) at g = s·w.
    VertexId point(const Word& g) const;

    friend bool operator==(const EdgeSelector&, const EdgeSelector&) = default;

private:
    RauzyGraph graph_;
    VertexId v0_;
    std::size_t letters_;
    std::vector<EdgeId> t0_;
    std::vector<EdgeId> t1_;
};

/// Simple reduced cycle: distinct edges, consecutive (cyclically) and never
/// followed by an inverse label.
struct Cycle {
    std::vector<EdgeId> edges;

    std::size_t size() const { return edges.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

bool is_simple_reduced_cycle(const RauzyGraph& g, const Cycle& c);
/// (ē_{n−1}, …, ē_0).
Cycle reversed(const RauzyGraph& g, const Cycle& c);
/// Labels of the cycle as a word.
Word cycle_word(const RauzyGraph& g, const Cycle& c);

inline EdgeId extend_t1(const EdgeSelector& t, EdgeId e, const Word& w) { return t.extend(e, w); }

/// x_T on B_k, over the vertex alphabet.
WindowConfig x_t_window(const EdgeSelector& t, int radius);

/// A simple reduced cycle through v, for minimal graphs of rank at least 2.
/// Throws std::invalid_argument on rank 1 or a non-minimal graph.
Cycle find_cycle(const RauzyGraph& g, VertexId v);

/// A selector recurrent for c. Throws std::invalid_argument if c is not a simple
/// reduced cycle or g is not minimal, std::logic_error if the cycle constraints
/// clash.
EdgeSelector synthesize_recurrent(const RauzyGraph& g, const Cycle& c);

struct RecurrenceViolation {
    /// One of "follows", "base", "initial", "agree", "reachable", "cycle".
    std::string condition;
    std::string detail;
};
std::vector<RecurrenceViolation> validate_recurrent(const EdgeSelector& t, const Cycle& c);

/// Shortest reduced word w (ℓ(e)w reduced) steering e into the target set under
/// T1, or nullopt.
std::optional<Word> steer_to(const EdgeSelector& t, EdgeId e, const std::vector<bool>& target);

/// The SFT Z over E ∪ {*} whose φ-image is X(T), and the distinguished point z0.
struct SoficWitness {
    Sft z;
    /// phi[symbol] is the vertex; symbol i < |E| is edge i, the last symbol is *.
    std::vector<VertexId> phi;
    Symbol star;
    /// Edges occurring in z0.
    std::vector<bool> range;
};
SoficWitness sofic_witness(const EdgeSelector& t);
/// z0 on B_k.
WindowConfig z0_window(const EdgeSelector& t, int radius);

struct MinimalityProbe {
    Word g0;
    Word h;
    /// |h| − |g0|.
    std::size_t gap = 0;
    /// Prolonged return word without its last letter; empty for g0 = ε.
    Word w1_prime;
};

struct MinimalityCertificate {
    int window = 0;
    int depth = 0;
    std::size_t cycle_length = 0;
    std::size_t probes = 0;
    std::size_t max_gap = 0;
    /// max over edges e of |w1′(e)|.
    std::size_t max_w1_prime = 0;
    /// The bound max|w1′| + n·⌈m/n⌉.
    std::size_t gap_bound = 0;
    /// Set when some probe fails: then x_T(h·u) ≠ x_T(u) for `offending_u`.
    std::optional<MinimalityProbe> counterexample;
    Word offending_u;

    bool ok() const { return !counterexample.has_value(); }
};

/// For every g0 ∈ B_depth, builds a return h with |h| − |g0| bounded and checks
/// x_T(h·u) = x_T(u) on B_window. Throws std::invalid_argument if some edge
/// cannot be steered to the cycle (the selector is then not recurrent).
MinimalityCertificate certify_minimality(const EdgeSelector& t, const Cycle& c, int window, int depth);

} // namespace freeshift
