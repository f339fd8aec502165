#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signed_circular/coloring.hpp"
#include "signed_circular/rate.hpp"
#include "signed_circular/signed_graph.hpp"

namespace sc {

/// Backtracking with forward checking over Z_p. The first vertex of each
/// connected component is fixed to color 0; the next vertex is the one with
/// the fewest remaining colors (ties: higher degree, then lower index).
/// `node_budget` 0 means unlimited; otherwise BudgetExceeded is thrown.
std::optional<DiscreteColoring> find_coloring(const SignedGraph& g, ColorGrid grid,
                                              std::uint64_t node_budget = 0);

enum class CandidateOrder {
    /// Binary search over the sorted candidate list (relies on monotonicity).
    Bisect,
    /// First success in ascending order.
    Ascending,
};

struct SolverOptions {
    CandidateOrder order = CandidateOrder::Bisect;
    std::uint64_t node_budget = 0;
};

/// The grids chi_c searches for g, ascending by rate, one grid per rate.
/// Edge-free graphs: {2/1}. Balanced graphs: lowest-terms p/q with q <= n and
/// 2 <= p/q <= min(n, greedy color count) (searched on the all-positive
/// switching). Otherwise: p even, q <= n, 2 <= p/q <= 2 * greedy color count,
/// smallest q per rate.
std::vector<ColorGrid> candidate_grids(const SignedGraph& g);

struct ChiCResult {
    CircularRate value{2, 1};
    /// Valid coloring of the input graph at `value`.
    DiscreteColoring witness;
    std::size_t searches = 0;
};

/// Exact circular chromatic number with a certificate. Throws
/// std::invalid_argument on the empty graph.
ChiCResult solve_chi_c(const SignedGraph& g, const SolverOptions& options = {});

CircularRate chi_c(const SignedGraph& g, const SolverOptions& options = {});

/// A coloring of g at `rate` on ColorGrid::for_rate(rate, g.has_negative_edge()).
std::optional<DiscreteColoring> color_at(const SignedGraph& g, const CircularRate& rate,
                                         std::uint64_t node_budget = 0);

struct OracleOptions {
    /// Largest numerator tried; 0 means 4n.
    int max_numerator = 0;
    std::uint64_t node_budget = 4'000'000'000ULL;
};

/// Independent reference for chi_c: every grid (p, q) with 2q <= p <=
/// max_numerator (p even when g has a negative edge), sorted by exact rate,
/// each decided by plain chronological backtracking in vertex order with no
/// heuristics, symmetry breaking, or bounds from theory.
CircularRate chi_c_oracle(const SignedGraph& g, const OracleOptions& options = {});

/// Exact chromatic number of the underlying simple graph (parallel edges
/// collapsed). Throws BudgetExceeded above `max_order` vertices.
int chi_underlying(const SignedGraph& g, int max_order = 10);

/// Colors used by a DSATUR greedy coloring; an upper bound on chi_underlying.
int greedy_color_count(const SignedGraph& g);

struct TightCharacterization {
    CircularRate chi_c{2, 1};
    ColorGrid grid;
    std::size_t colorings = 0;
    std::size_t colorings_without_tight_cycle = 0;
    /// Edge-free graph: chi_c = 2 by convention, nothing to orient.
    bool vacuous = false;
    /// Next candidate rate above chi_c and whether some coloring there has no
    /// tight cycle. Reported only; unset when out of budget.
    std::optional<ColorGrid> next_grid;
    std::optional<bool> next_has_tight_free_coloring;

    bool holds() const { return vacuous || (colorings > 0 && colorings_without_tight_cycle == 0); }
};

/// Every coloring at chi_c(g) must contain a tight cycle.
TightCharacterization verify_tight_characterization(const SignedGraph& g,
                                                    std::uint64_t budget = kDefaultColoringBudget);

} // namespace sc
