#include "freeshift/catalog.hpp"

namespace freeshift::catalog {

namespace {

constexpr Letter a(0, false);
constexpr Letter b(1, false);

// Vertices qa, qA, qb, qB. An edge entering qx along a reduced path from the
// trap region always carries the label x, so the a-edges qA→qa are never
// crossed in either direction once inside.
RauzyGraph trap_graph(bool with_cross_edge)
{
    GraphBuilder g(2);
    const VertexId qa = g.add_vertex("qa");
    const VertexId qA = g.add_vertex("qA");
    const VertexId qb = g.add_vertex("qb");
    const VertexId qB = g.add_vertex("qB");
    g.add_edge(qa, qa, a);
    g.add_edge(qb, qa, a);
    g.add_edge(qB, qa, a);
    g.add_edge(qA, qA, a);
    g.add_edge(qA, qb, a);
    g.add_edge(qA, qB, a);
    if (with_cross_edge)
        g.add_edge(qA, qa, a);
    g.add_edge(qb, qb, b);
    g.add_edge(qa, qb, b);
    g.add_edge(qA, qb, b);
    g.add_edge(qB, qB, b);
    g.add_edge(qB, qa, b);
    g.add_edge(qB, qA, b);
    if (with_cross_edge)
        g.add_edge(qB, qb, b);
    return g.build();
}

} // namespace

RauzyGraph rose1()
{
    GraphBuilder g(2);
    const VertexId x = g.add_vertex("x");
    g.add_loop(x, a);
    g.add_loop(x, b);
    return g.build();
}

RauzyGraph cyc2()
{
    GraphBuilder g(2);
    const VertexId u = g.add_vertex("u");
    const VertexId v = g.add_vertex("v");
    g.add_edge(u, v, a);
    g.add_edge(v, u, a);
    g.add_loop(u, b);
    g.add_loop(v, b);
    return g.build();
}

RauzyGraph star3()
{
    GraphBuilder g(2);
    const VertexId u = g.add_vertex("u");
    const VertexId v = g.add_vertex("v");
    const VertexId w = g.add_vertex("w");
    g.add_edge(u, v, a);
    g.add_edge(u, w, a);
    g.add_edge(v, u, a);
    g.add_edge(w, u, a);
    g.add_loop(u, b);
    g.add_loop(v, b);
    g.add_loop(w, b);
    return g.build();
}

RauzyGraph two_roses()
{
    GraphBuilder g(2);
    const VertexId x = g.add_vertex("x");
    const VertexId y = g.add_vertex("y");
    g.add_loop(x, a);
    g.add_loop(x, b);
    g.add_loop(y, a);
    g.add_loop(y, b);
    return g.build();
}

RauzyGraph cyc2_extra_loop()
{
    GraphBuilder g(2);
    const VertexId u = g.add_vertex("u");
    const VertexId v = g.add_vertex("v");
    g.add_edge(u, v, a);
    g.add_edge(v, u, a);
    g.add_loop(u, b);
    g.add_loop(v, b);
    g.add_loop(u, a);
    return g.build();
}

RauzyGraph connected_not_minimal() { return trap_graph(true); }

RauzyGraph minimal_not_edge_connected() { return trap_graph(false); }

} // namespace freeshift::catalog
