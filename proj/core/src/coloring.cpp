#include "signed_circular/coloring.hpp"

#include <map>
#include <stdexcept>

#include "signed_circular/errors.hpp"

namespace sc {

namespace {

void check_shape(const SignedGraph& g, const DiscreteColoring& c)
{
    if (static_cast<int>(c.colors.size()) != g.order()) {
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) +
                                    " vertices, graph has " + std::to_string(g.order()));
    }
    for (int color : c.colors) {
        if (color < 0 || color >= c.grid.p) {
            throw std::invalid_argument("color " + std::to_string(color) + " outside [0, " +
                                        std::to_string(c.grid.p) + ")");
        }
    }
    if (!c.grid.has_antipode() && g.has_negative_edge()) {
        throw std::invalid_argument("odd numerator " + std::to_string(c.grid.p) +
                                    " cannot color a graph with negative edges");
    }
}

bool edge_ok(const SignedEdge& e, const std::vector<int>& colors, ColorGrid grid)
{
    const int a = colors[e.u];
    const int b = e.sign == Sign::Positive ? colors[e.v] : colors[e.v] + grid.p / 2;
    return cyclic_distance(a, b, grid.p) >= grid.q;
}

int mod(int a, int p) { return ((a % p) + p) % p; }

} // namespace

bool check_coloring(const SignedGraph& g, const DiscreteColoring& c)
{
    check_shape(g, c);
    for (const auto& e : g.edges()) {
        if (!edge_ok(e, c.colors, c.grid)) {
            return false;
        }
    }
    return true;
}

void for_each_coloring(const SignedGraph& g, ColorGrid grid,
                       const std::function<void(const DiscreteColoring&)>& visit, std::uint64_t budget)
{
    const int n = g.order();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / static_cast<std::uint64_t>(grid.p)) {
            throw BudgetExceeded("enumerating " + std::to_string(grid.p) + "^" + std::to_string(n) +
                                 " color maps exceeds budget " + std::to_string(budget));
        }
        total *= static_cast<std::uint64_t>(grid.p);
    }
    DiscreteColoring c{grid, std::vector<int>(static_cast<std::size_t>(n), 0)};
    check_shape(g, c);
    while (true) {
        if (check_coloring(g, c)) {
            visit(c);
        }
        int i = n - 1;
        while (i >= 0 && ++c.colors[i] == grid.p) {
            c.colors[i] = 0;
            --i;
        }
        if (i < 0) {
            return;
        }
    }
}

std::vector<DiscreteColoring> all_colorings(const SignedGraph& g, ColorGrid grid, std::uint64_t budget)
{
    std::vector<DiscreteColoring> out;
    for_each_coloring(g, grid, [&](const DiscreteColoring& c) { out.push_back(c); }, budget);
    return out;
}

TightOrientation tight_orientation(const SignedGraph& g, const DiscreteColoring& c)
{
    if (!check_coloring(g, c)) {
        throw std::invalid_argument("tight_orientation needs a valid coloring");
    }
    const int p = c.grid.p;
    const int q = c.grid.q;
    TightOrientation t{g.order(), {}};
    for (const auto& e : g.edges()) {
        const int step = e.sign == Sign::Positive ? q : mod(p / 2 + q, p);
        const bool forward = mod(c.colors[e.v] - c.colors[e.u], p) == step;
        const bool backward = mod(c.colors[e.u] - c.colors[e.v], p) == step;
        Arc arc = Arc::None;
        if (forward && backward) {
            arc = Arc::Both;
        } else if (forward) {
            arc = Arc::Forward;
        } else if (backward) {
            arc = Arc::Backward;
        }
        t.edges.push_back({e.id, e.u, e.v, arc});
    }
    return t;
}

bool has_tight_cycle(const TightOrientation& t)
{
    const auto n = static_cast<std::size_t>(t.order);
    std::vector<std::vector<VertexId>> out(n);
    for (const auto& e : t.edges) {
        if (e.arc == Arc::Both) {
            return true;
        }
        if (e.arc == Arc::Forward) {
            out[e.u].push_back(e.v);
        } else if (e.arc == Arc::Backward) {
            out[e.v].push_back(e.u);
        }
    }

    enum class Mark : std::uint8_t { White, Grey, Black };
    std::vector<Mark> mark(n, Mark::White);
    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (VertexId root = 0; root < t.order; ++root) {
        if (mark[root] != Mark::White) {
            continue;
        }
        stack.emplace_back(root, 0);
        mark[root] = Mark::Grey;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next == out[u].size()) {
                mark[u] = Mark::Black;
                stack.pop_back();
                continue;
            }
            const VertexId w = out[u][next++];
            if (mark[w] == Mark::Grey) {
                return true;
            }
            if (mark[w] == Mark::White) {
                mark[w] = Mark::Grey;
                stack.emplace_back(w, 0);
            }
        }
    }
    return false;
}

DiscreteColoring double_coloring(const DiscreteColoring& c)
{
    // Point i/q on C^{p/q} maps to 2i/q on C^{2p/q}.
    int p = 2 * c.grid.p;
    int q = c.grid.q;
    int scale = 2;
    if (q % 2 == 0) {
        p /= 2;
        q /= 2;
        scale = 1;
    }
    DiscreteColoring out{ColorGrid(p, q), {}};
    out.colors.reserve(c.colors.size());
    for (int color : c.colors) {
        out.colors.push_back(scale * color);
    }
    return out;
}

bool is_digon_graph(const SignedGraph& g)
{
    std::map<std::pair<VertexId, VertexId>, std::pair<int, int>> counts;
    for (const auto& e : g.edges()) {
        auto& [pos, neg] = counts[std::minmax(e.u, e.v)];
        (e.sign == Sign::Positive ? pos : neg) += 1;
    }
    for (const auto& [pair, c] : counts) {
        if (c.first != 1 || c.second != 1) {
            return false;
        }
    }
    return true;
}

DiscreteColoring quotient_coloring(const SignedGraph& g, const DiscreteColoring& c)
{
    if (!c.grid.has_antipode()) {
        throw std::invalid_argument("quotient_coloring needs an even numerator");
    }
    if (!is_digon_graph(g)) {
        throw std::invalid_argument("quotient_coloring needs a digon graph");
    }
    check_shape(g, c);
    const int half = c.grid.p / 2;
    DiscreteColoring out{ColorGrid(half, c.grid.q), {}};
    out.colors.reserve(c.colors.size());
    for (int color : c.colors) {
        out.colors.push_back(color % half);
    }
    return out;
}

DiscreteColoring rotate(const DiscreteColoring& c, int shift)
{
    DiscreteColoring out = c;
    for (auto& color : out.colors) {
        color = mod(color + shift, c.grid.p);
    }
    return out;
}

DiscreteColoring switch_coloring(const DiscreteColoring& c, std::span<const VertexId> s)
{
    if (!c.grid.has_antipode()) {
        throw std::invalid_argument("switch_coloring needs an even numerator");
    }
    DiscreteColoring out = c;
    for (VertexId v : s) {
        out.colors.at(static_cast<std::size_t>(v)) = mod(c.colors[v] + c.grid.p / 2, c.grid.p);
    }
    return out;
}

} // namespace sc
