#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sc {

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept
{
    return a == b ? Sign::Positive : Sign::Negative;
}

constexpr Sign operator-(Sign s) noexcept
{
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

using VertexId = int;
using VertexSet = std::vector<VertexId>;

struct SignedEdge {
    int id = 0;
    VertexId u = 0;
    VertexId v = 0;
    Sign sign = Sign::Positive;

    bool operator==(const SignedEdge&) const = default;
};

/// Undirected signed multigraph on vertices [0, n). Parallel edges are
/// allowed, loops are not. Edge ids are the positions in the edge list.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int order);

    /// Appends an edge and returns its id. Throws std::invalid_argument for
    /// loops or endpoints out of range.
    int add_edge(VertexId u, VertexId v, Sign sign);

    int order() const noexcept { return order_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    std::span<const SignedEdge> edges() const noexcept { return edges_; }
    const SignedEdge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

    bool has_negative_edge() const noexcept;
    std::vector<int> degrees() const;

    /// Copy with every edge sign replaced by +.
    SignedGraph all_positive() const;
    /// Copy with every edge sign negated.
    SignedGraph negated() const;
    /// Copy keeping only the edges whose id is in `edge_ids` (reindexed in order).
    SignedGraph edge_subgraph(std::span<const int> edge_ids) const;

    bool operator==(const SignedGraph&) const = default;

private:
    int order_ = 0;
    std::vector<SignedEdge> edges_;
};

struct HararyPartition {
    VertexSet part1;
    VertexSet part2;
};

/// Negates every edge with exactly one endpoint in `s`.
SignedGraph switch_at(const SignedGraph& g, std::span<const VertexId> s);

/// +1/-1 potential with sign(uv) = phi(u) * phi(v) on every edge, or nullopt
/// when some cycle (digons included) carries an odd number of negative edges.
std::optional<std::vector<Sign>> balancing_potential(const SignedGraph& g);

bool is_balanced(const SignedGraph& g);

std::optional<HararyPartition> harary_partition(const SignedGraph& g);

/// True iff g2 is a switching of g1. Both must share n and the edge-id to
/// endpoint map; throws std::invalid_argument otherwise.
bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

enum class FamilyKind { Path, Cycle, Complete, DigonPair };

struct SignPattern {
    enum class Kind { AllPositive, AllNegative, OneNegative, Explicit };
    Kind kind = Kind::AllPositive;
    std::vector<Sign> signs;

    static SignPattern all_positive() { return {Kind::AllPositive, {}}; }
    static SignPattern all_negative() { return {Kind::AllNegative, {}}; }
    static SignPattern one_negative() { return {Kind::OneNegative, {}}; }
    static SignPattern explicit_signs(std::vector<Sign> s) { return {Kind::Explicit, std::move(s)}; }
};

/// Named families. Edge orders: path (i, i+1); cycle (i, i+1) then (n-1, 0);
/// complete lexicographic (i < j); digon pair is a path whose consecutive
/// vertices are joined by a + and a - edge. OneNegative makes edge 0 negative.
SignedGraph make_family(FamilyKind kind, int n, const SignPattern& signs);

/// Compact identifier, e.g. "3|0:1+|0:2+|1:2-".
std::string describe(const SignedGraph& g);

} // namespace sc
