#pragma once

#include "freeshift/patterns.hpp"
#include "freeshift/words.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace freeshift {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct EdgeRecord {
    VertexId source = 0;
    VertexId range = 0;
    Letter label;
    EdgeId bar = 0;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Unchecked graph data, as read from a document or assembled by hand.
struct RawGraph {
    int rank = 2;
    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;

    friend bool operator==(const RawGraph&, const RawGraph&) = default;
};

struct Violation {
    std::string axiom;
    std::string detail;
};

/// Checks the four Rauzy-graph axioms (bar involution with swapped endpoints,
/// inverse labels under bar, injective (source, range, label), and an outgoing
/// edge for every (vertex, letter)); also reports malformed indices.
std::vector<Violation> validate(const RawGraph& raw);

class InvalidGraph : public std::runtime_error {
public:
    explicit InvalidGraph(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// A validated Rauzy graph. Vertices and edges are identified by index.
class RauzyGraph {
public:
    /// Throws InvalidGraph when `validate` reports anything.
    explicit RauzyGraph(RawGraph raw);

    int rank() const { return raw_.rank; }
    FreeGroup group() const { return FreeGroup(raw_.rank); }
    std::size_t vertex_count() const { return raw_.vertices.size(); }
    std::size_t edge_count() const { return raw_.edges.size(); }
    const std::string& vertex_name(VertexId v) const { return raw_.vertices.at(v); }
    std::optional<VertexId> find_vertex(const std::string& name) const;
    const std::vector<EdgeRecord>& edges() const { return raw_.edges; }
    const EdgeRecord& edge(EdgeId e) const { return raw_.edges.at(e); }
    const RawGraph& raw() const { return raw_; }

    /// Edge ids leaving v with label s, ascending.
    const std::vector<EdgeId>& out_edges(VertexId v, Letter s) const { return out_[v * letters_ + s.code()]; }
    std::optional<EdgeId> find_edge(VertexId from, VertexId to, Letter s) const;

    friend bool operator==(const RauzyGraph& x, const RauzyGraph& y) { return x.raw_ == y.raw_; }

private:
    RawGraph raw_;
    std::size_t letters_;
    std::vector<std::vector<EdgeId>> out_;
};

/// Incremental construction; every edge is added together with its bar.
class GraphBuilder {
public:
    explicit GraphBuilder(int rank) { raw_.rank = rank; }

    VertexId add_vertex(std::string name);
    /// Adds from →s→ to and its bar to →s⁻¹→ from; returns (edge, bar).
    std::pair<EdgeId, EdgeId> add_edge(VertexId from, VertexId to, Letter s);
    /// A loop labeled s and its bar (labeled s⁻¹) at v.
    std::pair<EdgeId, EdgeId> add_loop(VertexId v, Letter s) { return add_edge(v, v, s); }

    const RawGraph& raw() const { return raw_; }
    RauzyGraph build() const { return RauzyGraph(raw_); }

private:
    RawGraph raw_;
};

bool is_deterministic(const RauzyGraph& g);
/// Underlying undirected connectivity.
bool is_connected(const RauzyGraph& g);

/// reach[e][f]: some reduced path starts with e and ends with f (reflexive).
/// Computed by BFS in the edge-transition automaton.
std::vector<std::vector<bool>> reduced_reachability(const RauzyGraph& g);

struct MinimalityResult {
    bool minimal = false;
    /// An ordered pair (e, f) with no reduced path from e to f or f̄.
    std::optional<std::pair<EdgeId, EdgeId>> witness;
};
MinimalityResult is_minimal(const RauzyGraph& g);

/// The three connectivity notions: (1) vertex-to-vertex reduced paths,
/// (2) minimality, (3) edge-to-exact-edge reduced paths. (3) ⇒ (2) ⇒ (1).
struct Conditions {
    bool vertex_connected = false;
    bool minimal = false;
    bool edge_connected = false;

    friend bool operator==(const Conditions&, const Conditions&) = default;
};
Conditions check_conditions(const RauzyGraph& g);

/// X(𝒢): colorings by vertices that are morphisms Cay(G) → 𝒢. Forbids every
/// {ε, s}-pattern with no edge p(ε) →s→ p(s); window B_1.
Sft xg_sft(const RauzyGraph& g);

/// 𝒢(A^G, A^F): vertex i is the F-pattern with code i under `codec`,
/// p₁ →s→ p₂ iff p₁ and s·p₂ are compatible.
RauzyGraph full_shift_graph(int rank, const PatternCodec& codec, const Alphabet& base);

struct WindowGraph {
    RauzyGraph graph;
    /// Vertex v is the F-pattern patterns[v].
    std::vector<Pattern> patterns;
};
/// 𝒢(X, A^F) read off window configs: vertices are the occurring F-patterns, and
/// p₁ →s→ p₂ whenever p₁ ∪ s·p₂ occurs. Throws std::runtime_error when the result
/// is not total (the windows are too small to see every transition).
WindowGraph graph_of_window(int rank, std::span<const WindowConfig> configs, std::span<const Word> support,
                            const Alphabet& base);

/// A vertex map between graphs.
struct GraphMorphism {
    std::vector<VertexId> vertex_map;
};
bool is_morphism(const RauzyGraph& from, const RauzyGraph& to, const GraphMorphism& pi);
/// Induced edge map; requires is_morphism.
std::vector<EdgeId> induced_edge_map(const RauzyGraph& from, const RauzyGraph& to, const GraphMorphism& pi);
bool is_surjective(const RauzyGraph& from, const RauzyGraph& to, const GraphMorphism& pi);

/// Lexicographically least sorted (source, range, label) list over all vertex
/// relabelings. Exponential; intended for at most 8 vertices.
std::vector<std::tuple<std::size_t, std::size_t, int>> canonical_form(const RauzyGraph& g);
bool isomorphic(const RauzyGraph& x, const RauzyGraph& y);

/// Graph with one s-relation per generator: rel[g] lists (from, to) pairs.
RauzyGraph graph_from_relations(int rank, std::size_t vertex_count,
                                const std::vector<std::vector<std::pair<VertexId, VertexId>>>& rel);
/// Uniformly random valid graph on n vertices (each generator relation has full
/// rows and columns).
RauzyGraph random_graph(int rank, std::size_t n, std::mt19937_64& rng);
/// Calls visit on every valid graph with exactly n vertices. Returns the count.
std::size_t for_each_graph(int rank, std::size_t n, const std::function<void(const RauzyGraph&)>& visit);

struct ConditionWitnesses {
    std::optional<RauzyGraph> vertex_connected_not_minimal;
    std::optional<RauzyGraph> minimal_not_edge_connected;
    std::size_t graphs_searched = 0;
};
/// Exhaustive search over valid graphs with 1..max_vertices vertices for graphs
/// separating the three connectivity conditions.
ConditionWitnesses search_condition_witnesses(int rank, std::size_t max_vertices);

} // namespace freeshift
