#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "signed_circular/rate.hpp"
#include "signed_circular/signed_graph.hpp"

namespace sc {

/// Vertex v sits at colors[v] / q on the circle of circumference p / q.
struct DiscreteColoring {
    ColorGrid grid;
    std::vector<int> colors;

    CircularRate rate() const { return grid.rate(); }
    bool operator==(const DiscreteColoring&) const = default;
};

/// Cyclic distance on Z_p.
constexpr int cyclic_distance(int a, int b, int p) noexcept
{
    const int d = ((a - b) % p + p) % p;
    return d < p - d ? d : p - d;
}

/// Exact validity check: d_p(c_u, c_v) >= q on positive edges and
/// d_p(c_u, c_v + p/2) >= q on negative edges. Throws std::invalid_argument
/// when the coloring does not cover V(g), a color is outside [0, p), or g has
/// a negative edge and p is odd.
bool check_coloring(const SignedGraph& g, const DiscreteColoring& c);

inline constexpr std::uint64_t kDefaultColoringBudget = 20'000'000;

/// Visits every valid coloring of g on `grid` in lexicographic order (vertex 0
/// most significant). Throws BudgetExceeded when p^n > budget.
void for_each_coloring(const SignedGraph& g, ColorGrid grid,
                       const std::function<void(const DiscreteColoring&)>& visit,
                       std::uint64_t budget = kDefaultColoringBudget);

std::vector<DiscreteColoring> all_colorings(const SignedGraph& g, ColorGrid grid,
                                            std::uint64_t budget = kDefaultColoringBudget);

enum class Arc : std::uint8_t { None, Forward, Backward, Both };

struct OrientedEdge {
    int edge_id = 0;
    VertexId u = 0;
    VertexId v = 0;
    Arc arc = Arc::None;

    bool operator==(const OrientedEdge&) const = default;
};

/// Partial orientation of the edges that a coloring meets with equality.
/// `Both` only happens on the grid p = 2q (rate 2), where the step q and its
/// reverse coincide; it counts as a directed 2-cycle.
struct TightOrientation {
    int order = 0;
    std::vector<OrientedEdge> edges;
};

/// Positive uv is u->v iff (c_v - c_u) mod p = q; negative uv is u->v iff
/// (c_v - c_u) mod p = p/2 + q (mod p). Throws if c is not a valid coloring.
TightOrientation tight_orientation(const SignedGraph& g, const DiscreteColoring& c);

bool has_tight_cycle(const TightOrientation& t);

/// v -> 2 c(v) on the circle of twice the circumference. Valid for the
/// positive signature of the underlying graph; a negative edge uv survives
/// only when |2 ((c_u - c_v) mod p) - p| >= q.
DiscreteColoring double_coloring(const DiscreteColoring& c);

/// For a digon graph colored on an even grid (p, q): v -> c(v) mod p/2 on the
/// grid (p/2, q), a valid coloring of the underlying unsigned graph. Throws on
/// odd p, p < 4q, or when g is not a digon graph.
DiscreteColoring quotient_coloring(const SignedGraph& g, const DiscreteColoring& c);

/// c(v) + shift for every vertex.
DiscreteColoring rotate(const DiscreteColoring& c, int shift);

/// Antipodal move c(v) + p/2 on the vertices of `s`; valid for switch_at(g, s)
/// whenever c is valid for g. Requires an even grid.
DiscreteColoring switch_coloring(const DiscreteColoring& c, std::span<const VertexId> s);

/// True iff every underlying edge appears exactly as one + and one - edge.
bool is_digon_graph(const SignedGraph& g);

} // namespace sc
