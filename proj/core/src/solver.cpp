#include "signed_circular/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "signed_circular/errors.hpp"

namespace sc {

namespace {

class ColoringSearch {
public:
    ColoringSearch(const SignedGraph& g, ColorGrid grid, std::uint64_t budget)
        : n_(g.order()),
          grid_(grid),
          words_((grid.p + 63) / 64),
          budget_(budget),
          adj_(static_cast<std::size_t>(n_)),
          degree_(g.degrees()),
          component_(static_cast<std::size_t>(n_), -1),
          colors_(static_cast<std::size_t>(n_), -1)
    {
        if (g.has_negative_edge() && !grid.has_antipode()) {
            throw std::invalid_argument("odd numerator cannot color a graph with negative edges");
        }
        for (const auto& e : g.edges()) {
            adj_[e.u].emplace_back(e.v, e.sign);
            adj_[e.v].emplace_back(e.u, e.sign);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        label_components();

        // forbid_[c] = colors within cyclic distance < q of c.
        forbid_.assign(static_cast<std::size_t>(grid.p) * words_, 0);
        for (int c = 0; c < grid.p; ++c) {
            for (int d = -(grid.q - 1); d <= grid.q - 1; ++d) {
                const int b = ((c + d) % grid.p + grid.p) % grid.p;
                forbid_[c * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
            }
        }
        full_.assign(words_, 0);
        for (int b = 0; b < grid.p; ++b) {
            full_[b / 64] |= std::uint64_t{1} << (b % 64);
        }
    }

    std::optional<std::vector<int>> run()
    {
        std::vector<std::uint64_t> domains;
        domains.reserve(static_cast<std::size_t>(n_) * words_);
        for (int v = 0; v < n_; ++v) {
            domains.insert(domains.end(), full_.begin(), full_.end());
        }
        component_started_.assign(static_cast<std::size_t>(components_), false);
        if (search(domains, 0)) {
            return colors_;
        }
        return std::nullopt;
    }

private:
    void label_components()
    {
        components_ = 0;
        std::vector<VertexId> stack;
        for (VertexId root = 0; root < n_; ++root) {
            if (component_[root] >= 0) {
                continue;
            }
            component_[root] = components_;
            stack.push_back(root);
            while (!stack.empty()) {
                const VertexId u = stack.back();
                stack.pop_back();
                for (auto [w, s] : adj_[u]) {
                    if (component_[w] < 0) {
                        component_[w] = components_;
                        stack.push_back(w);
                    }
                }
            }
            ++components_;
        }
    }

    int popcount(const std::uint64_t* d) const
    {
        int count = 0;
        for (int w = 0; w < words_; ++w) {
            count += std::popcount(d[w]);
        }
        return count;
    }

    VertexId pick(const std::vector<std::uint64_t>& domains) const
    {
        VertexId best = -1;
        int best_size = 0;
        for (VertexId v = 0; v < n_; ++v) {
            if (colors_[v] >= 0) {
                continue;
            }
            const int size = popcount(&domains[static_cast<std::size_t>(v) * words_]);
            if (best < 0 || size < best_size || (size == best_size && degree_[v] > degree_[best])) {
                best = v;
                best_size = size;
            }
        }
        return best;
    }

    bool search(std::vector<std::uint64_t>& domains, int assigned)
    {
        if (assigned == n_) {
            return true;
        }
        const VertexId v = pick(domains);
        const bool opens_component = !component_started_[component_[v]];
        if (opens_component) {
            component_started_[component_[v]] = true;
        }
        const std::uint64_t* dv = &domains[static_cast<std::size_t>(v) * words_];
        std::vector<int> choices;
        for (int w = 0; w < words_; ++w) {
            for (std::uint64_t bits = dv[w]; bits != 0; bits &= bits - 1) {
                choices.push_back(w * 64 + std::countr_zero(bits));
            }
        }
        if (opens_component) {
            // Rotations act independently on each component.
            choices.assign(1, 0);
        }

        std::vector<std::uint64_t> next;
        for (int color : choices) {
            if (budget_ != 0 && ++nodes_ > budget_) {
                throw BudgetExceeded("coloring search exceeded " + std::to_string(budget_) + " nodes");
            }
            next = domains;
            bool wiped = false;
            for (auto [w, s] : adj_[v]) {
                if (colors_[w] >= 0) {
                    continue;
                }
                const int center = s == Sign::Positive ? color : (color + grid_.p / 2) % grid_.p;
                std::uint64_t* dw = &next[static_cast<std::size_t>(w) * words_];
                const std::uint64_t* f = &forbid_[static_cast<std::size_t>(center) * words_];
                std::uint64_t any = 0;
                for (int k = 0; k < words_; ++k) {
                    dw[k] &= ~f[k];
                    any |= dw[k];
                }
                if (any == 0) {
                    wiped = true;
                    break;
                }
            }
            if (wiped) {
                continue;
            }
            colors_[v] = color;
            if (search(next, assigned + 1)) {
                return true;
            }
            colors_[v] = -1;
        }
        if (opens_component) {
            component_started_[component_[v]] = false;
        }
        return false;
    }

    int n_;
    ColorGrid grid_;
    int words_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::pair<VertexId, Sign>>> adj_;
    std::vector<int> degree_;
    std::vector<int> component_;
    int components_ = 0;
    std::vector<bool> component_started_;
    std::vector<int> colors_;
    std::vector<std::uint64_t> forbid_;
    std::vector<std::uint64_t> full_;
};

std::vector<ColorGrid> unsigned_candidates(int n, int upper)
{
    std::vector<ColorGrid> out;
    for (int q = 1; q <= n; ++q) {
        for (int p = 2 * q; p <= upper * q; ++p) {
            if (std::gcd(p, q) == 1) {
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

std::vector<ColorGrid> even_candidates(int n, int upper)
{
    // One grid per rate: the even-numerator representation with smallest q.
    std::map<std::pair<int, int>, ColorGrid> by_rate;
    for (int q = 1; q <= n; ++q) {
        for (int p = 2 * q; p <= upper * q; p += 2) {
            const int g = std::gcd(p, q);
            by_rate.try_emplace({p / g, q / g}, p, q);
        }
    }
    std::vector<ColorGrid> out;
    out.reserve(by_rate.size());
    for (const auto& [key, grid] : by_rate) {
        out.push_back(grid);
    }
    return out;
}

void sort_by_rate(std::vector<ColorGrid>& grids)
{
    std::sort(grids.begin(), grids.end(), [](const ColorGrid& a, const ColorGrid& b) {
        return static_cast<long long>(a.p) * b.q < static_cast<long long>(b.p) * a.q;
    });
}

} // namespace

std::optional<DiscreteColoring> find_coloring(const SignedGraph& g, ColorGrid grid, std::uint64_t node_budget)
{
    ColoringSearch search(g, grid, node_budget);
    if (auto colors = search.run()) {
        return DiscreteColoring{grid, std::move(*colors)};
    }
    return std::nullopt;
}

std::vector<ColorGrid> candidate_grids(const SignedGraph& g)
{
    if (g.size() == 0) {
        return {ColorGrid(2, 1)};
    }
    const int n = g.order();
    const int greedy = greedy_color_count(g);
    std::vector<ColorGrid> out;
    if (is_balanced(g)) {
        out = unsigned_candidates(n, std::min(n, greedy));
    } else {
        out = even_candidates(n, 2 * greedy);
    }
    sort_by_rate(out);
    return out;
}

ChiCResult solve_chi_c(const SignedGraph& g, const SolverOptions& options)
{
    if (g.order() == 0) {
        throw std::invalid_argument("chi_c of the empty graph is undefined");
    }
    ChiCResult result;
    if (g.size() == 0) {
        result.witness = DiscreteColoring{ColorGrid(2, 1), std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
        return result;
    }

    // Balanced graphs are colored as their all-positive switching.
    const auto partition = harary_partition(g);
    const SignedGraph searched = partition ? switch_at(g, partition->part2) : g;
    const auto candidates = candidate_grids(g);

    std::optional<DiscreteColoring> found;
    auto attempt = [&](std::size_t i) {
        ++result.searches;
        return find_coloring(searched, candidates[i], options.node_budget);
    };

    if (options.order == CandidateOrder::Ascending) {
        for (std::size_t i = 0; i < candidates.size() && !found; ++i) {
            found = attempt(i);
        }
    } else {
        std::size_t lo = 0;
        std::size_t hi = candidates.size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (auto c = attempt(mid)) {
                found = std::move(c);
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
    }
    if (!found) {
        throw std::logic_error("no candidate rate admits a coloring of " + describe(g));
    }

    result.value = found->rate();
    if (partition && g.has_negative_edge()) {
        // Lift to an even grid and undo the switching antipodally.
        DiscreteColoring lifted{found->grid, found->colors};
        if (!lifted.grid.has_antipode()) {
            lifted.grid = ColorGrid(2 * lifted.grid.p, 2 * lifted.grid.q);
            for (auto& c : lifted.colors) {
                c *= 2;
            }
        }
        result.witness = switch_coloring(lifted, partition->part2);
    } else {
        result.witness = std::move(*found);
    }
    return result;
}

CircularRate chi_c(const SignedGraph& g, const SolverOptions& options) { return solve_chi_c(g, options).value; }

std::optional<DiscreteColoring> color_at(const SignedGraph& g, const CircularRate& rate, std::uint64_t node_budget)
{
    return find_coloring(g, ColorGrid::for_rate(rate, g.has_negative_edge()), node_budget);
}

TightCharacterization verify_tight_characterization(const SignedGraph& g, std::uint64_t budget)
{
    TightCharacterization out;
    if (g.size() == 0) {
        out.vacuous = true;
        out.grid = ColorGrid(2, 1);
        return out;
    }
    const bool signed_grid = g.has_negative_edge();
    out.chi_c = chi_c(g);
    out.grid = ColorGrid::for_rate(out.chi_c, signed_grid);
    for_each_coloring(
        g, out.grid,
        [&](const DiscreteColoring& c) {
            ++out.colorings;
            if (!has_tight_cycle(tight_orientation(g, c))) {
                ++out.colorings_without_tight_cycle;
            }
        },
        budget);

    for (const auto& grid : candidate_grids(g)) {
        if (grid.rate() > out.chi_c) {
            out.next_grid = ColorGrid::for_rate(grid.rate(), signed_grid);
            break;
        }
    }
    if (out.next_grid) {
        try {
            bool tight_free = false;
            for_each_coloring(
                g, *out.next_grid,
                [&](const DiscreteColoring& c) {
                    tight_free = tight_free || !has_tight_cycle(tight_orientation(g, c));
                },
                budget);
            out.next_has_tight_free_coloring = tight_free;
        } catch (const BudgetExceeded&) {
            // reported as unknown
        }
    }
    return out;
}

} // namespace sc
