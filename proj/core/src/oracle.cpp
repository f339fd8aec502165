#include <algorithm>
#include <stdexcept>

#include "signed_circular/errors.hpp"
#include "signed_circular/solver.hpp"

namespace sc {

namespace {

struct BackEdge {
    VertexId other;
    Sign sign;
};

class PlainBacktracker {
public:
    PlainBacktracker(const SignedGraph& g, std::uint64_t budget, std::uint64_t& nodes)
        : n_(g.order()), back_(static_cast<std::size_t>(n_)), budget_(budget), nodes_(nodes)
    {
        for (const auto& e : g.edges()) {
            const auto [lo, hi] = std::minmax(e.u, e.v);
            back_[hi].push_back({lo, e.sign});
        }
    }

    bool colorable(int p, int q)
    {
        p_ = p;
        q_ = q;
        colors_.assign(static_cast<std::size_t>(n_), 0);
        return extend(0);
    }

private:
    bool fits(VertexId v, int color) const
    {
        for (const auto& b : back_[v]) {
            const int other = b.sign == Sign::Positive ? colors_[b.other] : colors_[b.other] + p_ / 2;
            if (cyclic_distance(color, other, p_) < q_) {
                return false;
            }
        }
        return true;
    }

    bool extend(VertexId v)
    {
        if (v == n_) {
            return true;
        }
        for (int color = 0; color < p_; ++color) {
            if (++nodes_ > budget_) {
                throw BudgetExceeded("oracle exceeded " + std::to_string(budget_) + " nodes");
            }
            if (fits(v, color)) {
                colors_[v] = color;
                if (extend(v + 1)) {
                    return true;
                }
            }
        }
        return false;
    }

    int n_;
    std::vector<std::vector<BackEdge>> back_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    int p_ = 2;
    int q_ = 1;
    std::vector<int> colors_;
};

} // namespace

CircularRate chi_c_oracle(const SignedGraph& g, const OracleOptions& options)
{
    if (g.order() == 0) {
        throw std::invalid_argument("chi_c of the empty graph is undefined");
    }
    const int max_p = options.max_numerator > 0 ? options.max_numerator : 4 * g.order();
    const bool even_only = g.has_negative_edge();

    std::vector<std::pair<int, int>> grids;
    for (int p = 2; p <= max_p; ++p) {
        if (even_only && p % 2 != 0) {
            continue;
        }
        for (int q = 1; 2 * q <= p; ++q) {
            grids.emplace_back(p, q);
        }
    }
    std::stable_sort(grids.begin(), grids.end(), [](const auto& a, const auto& b) {
        const long long lhs = static_cast<long long>(a.first) * b.second;
        const long long rhs = static_cast<long long>(b.first) * a.second;
        return lhs != rhs ? lhs < rhs : a.first < b.first;
    });

    std::uint64_t nodes = 0;
    PlainBacktracker search(g, options.node_budget, nodes);
    for (const auto& [p, q] : grids) {
        if (search.colorable(p, q)) {
            return {p, q};
        }
    }
    throw BudgetExceeded("no coloring with numerator <= " + std::to_string(max_p));
}

} // namespace sc
