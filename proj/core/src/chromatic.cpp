#include <algorithm>
#include <bit>
#include <stdexcept>

#include "signed_circular/errors.hpp"
#include "signed_circular/solver.hpp"

namespace sc {

namespace {

std::vector<std::vector<VertexId>> simple_adjacency(const SignedGraph& g)
{
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.order()));
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

// DSATUR branch and bound on at most 64 colors.
class ChromaticSearch {
public:
    explicit ChromaticSearch(const SignedGraph& g)
        : n_(g.order()), adj_(simple_adjacency(g)), colors_(static_cast<std::size_t>(n_), -1),
          neighbor_colors_(static_cast<std::size_t>(n_), 0)
    {
    }

    int solve(int upper)
    {
        best_ = upper;
        branch(0, 0);
        return best_;
    }

private:
    VertexId pick() const
    {
        VertexId best = -1;
        int best_sat = -1;
        for (VertexId v = 0; v < n_; ++v) {
            if (colors_[v] >= 0) {
                continue;
            }
            const int sat = std::popcount(neighbor_colors_[v]);
            if (sat > best_sat ||
                (sat == best_sat && adj_[v].size() > adj_[best].size())) {
                best = v;
                best_sat = sat;
            }
        }
        return best;
    }

    void branch(int assigned, int used)
    {
        if (used >= best_) {
            return;
        }
        if (assigned == n_) {
            best_ = used;
            return;
        }
        const VertexId v = pick();
        for (int c = 0; c <= used; ++c) {
            if ((neighbor_colors_[v] >> c) & 1U) {
                continue;
            }
            const int next_used = std::max(used, c + 1);
            if (next_used >= best_) {
                continue;
            }
            std::vector<std::uint64_t> saved;
            saved.reserve(adj_[v].size());
            for (VertexId w : adj_[v]) {
                saved.push_back(neighbor_colors_[w]);
                neighbor_colors_[w] |= std::uint64_t{1} << c;
            }
            colors_[v] = c;
            branch(assigned + 1, next_used);
            colors_[v] = -1;
            for (std::size_t i = 0; i < adj_[v].size(); ++i) {
                neighbor_colors_[adj_[v][i]] = saved[i];
            }
        }
    }

    int n_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<int> colors_;
    std::vector<std::uint64_t> neighbor_colors_;
    int best_ = 0;
};

} // namespace

int greedy_color_count(const SignedGraph& g)
{
    const int n = g.order();
    const auto adj = simple_adjacency(g);
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n));
    int used = 0;
    for (int step = 0; step < n; ++step) {
        VertexId best = -1;
        int best_sat = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (colors[v] >= 0) {
                continue;
            }
            const int sat = static_cast<int>(std::count(seen[v].begin(), seen[v].end(), true));
            if (sat > best_sat || (sat == best_sat && adj[v].size() > adj[best].size())) {
                best = v;
                best_sat = sat;
            }
        }
        int c = 0;
        while (c < static_cast<int>(seen[best].size()) && seen[best][c]) {
            ++c;
        }
        colors[best] = c;
        used = std::max(used, c + 1);
        for (VertexId w : adj[best]) {
            if (static_cast<int>(seen[w].size()) <= c) {
                seen[w].resize(static_cast<std::size_t>(c) + 1, false);
            }
            seen[w][c] = true;
        }
    }
    return used;
}

int chi_underlying(const SignedGraph& g, int max_order)
{
    if (g.order() > max_order) {
        throw BudgetExceeded("chromatic number limited to " + std::to_string(max_order) + " vertices");
    }
    if (g.order() == 0) {
        return 0;
    }
    const int upper = greedy_color_count(g);
    if (upper > 63) {
        throw BudgetExceeded("chromatic number search limited to 63 colors");
    }
    ChromaticSearch search(g);
    return search.solve(upper + 1);
}

} // namespace sc
