#include "signed_circular/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sc {

SignedGraph::SignedGraph(int order) : order_(order)
{
    if (order < 0) {
        throw std::invalid_argument("negative vertex count");
    }
}

int SignedGraph::add_edge(VertexId u, VertexId v, Sign sign)
{
    if (u < 0 || v < 0 || u >= order_ || v >= order_) {
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
    }
    if (u == v) {
        throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
    }
    const int id = size();
    edges_.push_back({id, u, v, sign});
    return id;
}

bool SignedGraph::has_negative_edge() const noexcept
{
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const SignedEdge& e) { return e.sign == Sign::Negative; });
}

std::vector<int> SignedGraph::degrees() const
{
    std::vector<int> deg(static_cast<std::size_t>(order_), 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

SignedGraph SignedGraph::all_positive() const
{
    SignedGraph out = *this;
    for (auto& e : out.edges_) {
        e.sign = Sign::Positive;
    }
    return out;
}

SignedGraph SignedGraph::negated() const
{
    SignedGraph out = *this;
    for (auto& e : out.edges_) {
        e.sign = -e.sign;
    }
    return out;
}

SignedGraph SignedGraph::edge_subgraph(std::span<const int> edge_ids) const
{
    SignedGraph out(order_);
    for (int id : edge_ids) {
        const auto& e = edge(id);
        out.add_edge(e.u, e.v, e.sign);
    }
    return out;
}

SignedGraph switch_at(const SignedGraph& g, std::span<const VertexId> s)
{
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (VertexId v : s) {
        if (v < 0 || v >= g.order()) {
            throw std::invalid_argument("switching vertex out of range: " + std::to_string(v));
        }
        in[v] = true;
    }
    SignedGraph out(g.order());
    for (const auto& e : g.edges()) {
        out.add_edge(e.u, e.v, in[e.u] != in[e.v] ? -e.sign : e.sign);
    }
    return out;
}

std::optional<std::vector<Sign>> balancing_potential(const SignedGraph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<std::pair<VertexId, Sign>>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].emplace_back(e.v, e.sign);
        adj[e.v].emplace_back(e.u, e.sign);
    }

    std::vector<Sign> phi(n, Sign::Positive);
    std::vector<bool> seen(n, false);
    std::queue<VertexId> frontier;
    for (VertexId root = 0; root < g.order(); ++root) {
        if (seen[root]) {
            continue;
        }
        seen[root] = true;
        frontier.push(root);
        while (!frontier.empty()) {
            const VertexId u = frontier.front();
            frontier.pop();
            for (auto [v, s] : adj[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    phi[v] = phi[u] * s;
                    frontier.push(v);
                }
            }
        }
    }
    // Every edge, tree or not, parallel or not, must agree with the potential.
    for (const auto& e : g.edges()) {
        if (phi[e.u] * phi[e.v] != e.sign) {
            return std::nullopt;
        }
    }
    return phi;
}

bool is_balanced(const SignedGraph& g) { return balancing_potential(g).has_value(); }

std::optional<HararyPartition> harary_partition(const SignedGraph& g)
{
    auto phi = balancing_potential(g);
    if (!phi) {
        return std::nullopt;
    }
    HararyPartition part;
    for (VertexId v = 0; v < g.order(); ++v) {
        ((*phi)[v] == Sign::Positive ? part.part1 : part.part2).push_back(v);
    }
    return part;
}

bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2)
{
    if (g1.order() != g2.order() || g1.size() != g2.size()) {
        throw std::invalid_argument("switching_equivalent: underlying graphs differ in size");
    }
    SignedGraph product(g1.order());
    for (int id = 0; id < g1.size(); ++id) {
        const auto& a = g1.edge(id);
        const auto& b = g2.edge(id);
        const bool same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
        if (!same) {
            throw std::invalid_argument("switching_equivalent: edge " + std::to_string(id) +
                                        " has different endpoints");
        }
        product.add_edge(a.u, a.v, a.sign * b.sign);
    }
    return is_balanced(product);
}

namespace {

std::vector<Sign> resolve_signs(const SignPattern& pattern, int edge_count)
{
    const auto m = static_cast<std::size_t>(edge_count);
    switch (pattern.kind) {
    case SignPattern::Kind::AllPositive:
        return std::vector<Sign>(m, Sign::Positive);
    case SignPattern::Kind::AllNegative:
        return std::vector<Sign>(m, Sign::Negative);
    case SignPattern::Kind::OneNegative: {
        if (m == 0) {
            throw std::invalid_argument("one-negative pattern needs at least one edge");
        }
        std::vector<Sign> s(m, Sign::Positive);
        s[0] = Sign::Negative;
        return s;
    }
    case SignPattern::Kind::Explicit:
        if (pattern.signs.size() != m) {
            throw std::invalid_argument("explicit sign list has " +
                                        std::to_string(pattern.signs.size()) + " entries, expected " +
                                        std::to_string(m));
        }
        return pattern.signs;
    }
    return {};
}

} // namespace

SignedGraph make_family(FamilyKind kind, int n, const SignPattern& signs)
{
    if (n < 1) {
        throw std::invalid_argument("family needs n >= 1");
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    switch (kind) {
    case FamilyKind::Path:
        for (int i = 0; i + 1 < n; ++i) {
            pairs.emplace_back(i, i + 1);
        }
        break;
    case FamilyKind::Cycle:
        if (n < 3) {
            throw std::invalid_argument("cycle needs n >= 3");
        }
        for (int i = 0; i + 1 < n; ++i) {
            pairs.emplace_back(i, i + 1);
        }
        pairs.emplace_back(n - 1, 0);
        break;
    case FamilyKind::Complete:
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                pairs.emplace_back(i, j);
            }
        }
        break;
    case FamilyKind::DigonPair: {
        if (n < 2) {
            throw std::invalid_argument("digon pair needs n >= 2");
        }
        if (signs.kind != SignPattern::Kind::AllPositive) {
            throw std::invalid_argument("digon pair has a fixed signature");
        }
        SignedGraph g(n);
        for (int i = 0; i + 1 < n; ++i) {
            g.add_edge(i, i + 1, Sign::Positive);
            g.add_edge(i, i + 1, Sign::Negative);
        }
        return g;
    }
    }

    const auto s = resolve_signs(signs, static_cast<int>(pairs.size()));
    SignedGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        g.add_edge(pairs[i].first, pairs[i].second, s[i]);
    }
    return g;
}

std::string describe(const SignedGraph& g)
{
    std::string out = std::to_string(g.order());
    for (const auto& e : g.edges()) {
        out += '|';
        out += std::to_string(e.u);
        out += ':';
        out += std::to_string(e.v);
        out += sign_char(e.sign);
    }
    return out;
}

} // namespace sc
