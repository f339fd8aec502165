#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "signed_circular/coloring.hpp"
#include "signed_circular/signed_graph.hpp"

namespace sc {

/// One +1/-1 entry per vertex.
struct VertexSignMap {
    std::vector<Sign> signs;

    Sign operator[](VertexId v) const { return signs.at(static_cast<std::size_t>(v)); }
    std::size_t size() const noexcept { return signs.size(); }
    bool operator==(const VertexSignMap&) const = default;

    /// "0:+,1:-,..." (CLI syntax).
    std::string str() const;
    /// Parses "0:+,1:-" for a graph of `order` vertices; every vertex must be
    /// listed exactly once. Throws std::invalid_argument.
    static VertexSignMap parse(const std::string& text, int order);
};

/// Row-major pairing (u, x) -> u * right + x.
struct ProductIndex {
    int left = 0;
    int right = 0;

    int order() const noexcept { return left * right; }
    VertexId pair(VertexId u, VertexId x) const noexcept { return u * right + x; }
    std::pair<VertexId, VertexId> unpair(VertexId w) const noexcept { return {w / right, w % right}; }
};

/// Type 1: every edge copies its factor edge's sign. Edge order: for each x
/// of B, the edges of A; then for each u of A, the edges of B.
SignedGraph cartesian_type1(const SignedGraph& a, const SignedGraph& b);

/// Product of the signs of all incident edges (isolated vertices: +).
/// Orientation exponents drop out since s^{-1} = s for s = +-1.
VertexSignMap default_vertex_signs(const SignedGraph& g);

/// Type 2: A-edge (u,x)(v,x) gets sigma(uv) * sb(x), B-edge (u,x)(u,y) gets
/// sa(u) * tau(xy). Same vertex and edge order as Type 1.
SignedGraph cartesian_type2(const SignedGraph& a, const SignedGraph& b, const VertexSignMap& sa,
                            const VertexSignMap& sb);

inline SignedGraph cartesian_type2(const SignedGraph& a, const SignedGraph& b)
{
    return cartesian_type2(a, b, default_vertex_signs(a), default_vertex_signs(b));
}

/// Collapses parallel edges (first occurrence order), then emits each simple
/// edge as a + edge followed by a - edge.
SignedGraph digon(const SignedGraph& g);

/// Simple underlying graph, all +, first occurrence order.
SignedGraph simple_underlying(const SignedGraph& g);

/// Induced subgraph on {(u, x) : u in A}, reindexed by u.
SignedGraph g_layer(const SignedGraph& product, const ProductIndex& idx, VertexId x);
/// Induced subgraph on {(u, x) : x in B}, reindexed by x.
SignedGraph h_layer(const SignedGraph& product, const ProductIndex& idx, VertexId u);

/// (u, x) -> c_A(u) + c_B(x) mod p. Both colorings must share one grid.
DiscreteColoring product_coloring(const DiscreteColoring& ca, const DiscreteColoring& cb,
                                  const ProductIndex& idx);

struct PositiveVertex {
    SignedGraph graph;
    VertexSignMap signs;
    VertexId vertex = 0;
    VertexSet switched;
};

/// Returns g unchanged with its first +1 vertex when `s` has one; otherwise
/// switches g at a smallest vertex set (then lexicographically first) that
/// gives some vertex default sign +1. Throws std::runtime_error when no
/// switching works (e.g. digon graphs with all vertices of odd digon degree)
/// and BudgetExceeded above `max_order` vertices.
PositiveVertex ensure_positive_vertex(const SignedGraph& g, const VertexSignMap& s, int max_order = 16);

} // namespace sc
