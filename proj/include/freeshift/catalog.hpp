#pragma once

#include "freeshift/rauzy.hpp"

namespace freeshift::catalog {

/// One vertex with an a-loop and a b-loop.
RauzyGraph rose1();
/// Vertices u, v; a-edges u→v and v→u; b-loops at both.
RauzyGraph cyc2();
/// Vertices u, v, w; a-edges u→v, u→w, v→u, w→u; b-loops at all three.
RauzyGraph star3();
/// Two disjoint copies of rose1.
RauzyGraph two_roses();
/// cyc2 plus a second a-edge u→u (not deterministic).
RauzyGraph cyc2_extra_loop();

/// Four vertices; every vertex is joined to every other by a reduced path, but
/// the graph is not minimal.
RauzyGraph connected_not_minimal();
/// Four vertices; minimal, but some edge cannot reach another edge in its own
/// orientation.
RauzyGraph minimal_not_edge_connected();

} // namespace freeshift::catalog
