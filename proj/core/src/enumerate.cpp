#include "signed_circular/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sc {

namespace {

void check_order_guard(int max_n)
{
    if (max_n < 1 || max_n > kMaxEnumerationOrder) {
        throw std::invalid_argument("enumeration order must be in [1, " +
                                    std::to_string(kMaxEnumerationOrder) + "], got " +
                                    std::to_string(max_n));
    }
}

struct PairTable {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> index; // index[u][v] = bit position

    explicit PairTable(int n) : index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1))
    {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                index[u][v] = index[v][u] = static_cast<int>(pairs.size());
                pairs.emplace_back(u, v);
            }
        }
    }
};

bool connected(int n, const PairTable& table, std::uint32_t mask)
{
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    int components = n;
    for (std::size_t b = 0; b < table.pairs.size(); ++b) {
        if ((mask >> b) & 1U) {
            const int a = find(table.pairs[b].first);
            const int c = find(table.pairs[b].second);
            if (a != c) {
                parent[a] = c;
                --components;
            }
        }
    }
    return components == 1;
}

std::vector<SignedGraph> underlying_of_order(int n, bool connected_only)
{
    const PairTable table(n);
    const auto m = table.pairs.size();

    // For every permutation, where each pair bit moves to.
    std::vector<std::vector<int>> bit_maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> map(m);
        for (std::size_t b = 0; b < m; ++b) {
            map[b] = table.index[perm[table.pairs[b].first]][perm[table.pairs[b].second]];
        }
        bit_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<SignedGraph> out;
    const std::uint32_t limit = 1U << m;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (connected_only && !connected(n, table, mask)) {
            continue;
        }
        bool minimal = true;
        for (const auto& map : bit_maps) {
            std::uint32_t image = 0;
            for (std::size_t b = 0; b < m; ++b) {
                if ((mask >> b) & 1U) {
                    image |= 1U << map[b];
                }
            }
            if (image < mask) {
                minimal = false;
                break;
            }
        }
        if (!minimal) {
            continue;
        }
        SignedGraph g(n);
        for (std::size_t b = 0; b < m; ++b) {
            if ((mask >> b) & 1U) {
                g.add_edge(table.pairs[b].first, table.pairs[b].second, Sign::Positive);
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

// Bit (m-1-i) holds edge i so that numeric order is lexicographic order.
std::uint32_t sign_mask(const SignedGraph& g)
{
    std::uint32_t mask = 0;
    const int m = g.size();
    for (int i = 0; i < m; ++i) {
        if (g.edge(i).sign == Sign::Negative) {
            mask |= 1U << (m - 1 - i);
        }
    }
    return mask;
}

std::vector<std::uint32_t> cut_masks_of(const SignedGraph& g)
{
    const int n = g.order();
    const int m = g.size();
    std::vector<std::uint32_t> cuts(std::size_t{1} << n, 0);
    for (std::uint32_t s = 0; s < cuts.size(); ++s) {
        for (int i = 0; i < m; ++i) {
            const auto& e = g.edge(i);
            if (((s >> e.u) & 1U) != ((s >> e.v) & 1U)) {
                cuts[s] |= 1U << (m - 1 - i);
            }
        }
    }
    return cuts;
}

// Edge permutations induced by the automorphisms of g, in sign-mask bit
// coordinates: map[bit] is where that bit moves.
std::vector<std::vector<int>> automorphism_bit_maps(const SignedGraph& g)
{
    const int n = g.order();
    const int m = g.size();
    std::vector<std::vector<int>> edge_at(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < m; ++i) {
        const auto& e = g.edge(i);
        edge_at[e.u][e.v] = edge_at[e.v][e.u] = i;
    }
    std::vector<std::vector<int>> maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> map(static_cast<std::size_t>(m));
        bool automorphism = true;
        for (int i = 0; i < m && automorphism; ++i) {
            const auto& e = g.edge(i);
            const int j = edge_at[perm[e.u]][perm[e.v]];
            automorphism = j >= 0;
            map[m - 1 - i] = m - 1 - j;
        }
        if (automorphism) {
            maps.push_back(std::move(map));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

SignedGraph with_sign_mask(const SignedGraph& g, std::uint32_t mask)
{
    SignedGraph out(g.order());
    const int m = g.size();
    for (int i = 0; i < m; ++i) {
        const auto& e = g.edge(i);
        out.add_edge(e.u, e.v, ((mask >> (m - 1 - i)) & 1U) ? Sign::Negative : Sign::Positive);
    }
    return out;
}

} // namespace

std::vector<SignedGraph> enumerate_underlying_graphs(int max_n, bool connected_only)
{
    check_order_guard(max_n);
    std::vector<SignedGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto graphs = underlying_of_order(n, connected_only);
        std::move(graphs.begin(), graphs.end(), std::back_inserter(out));
    }
    return out;
}

SignedGraph canonical_switching(const SignedGraph& g)
{
    if (g.order() > 20 || g.size() > 32) {
        throw std::invalid_argument("canonical_switching supports at most 20 vertices and 32 edges");
    }
    const auto cuts = cut_masks_of(g);
    const std::uint32_t mask = sign_mask(g);
    std::uint32_t best = mask;
    for (auto cut : cuts) {
        best = std::min(best, mask ^ cut);
    }
    return with_sign_mask(g, best);
}

SignedGraphStream::SignedGraphStream(int max_n, bool connected_only)
    : underlying_(enumerate_underlying_graphs(max_n, connected_only))
{
    load_underlying();
}

void SignedGraphStream::load_underlying()
{
    next_mask_ = 0;
    cut_masks_.clear();
    automorphisms_.clear();
    if (current_ < underlying_.size()) {
        cut_masks_ = cut_masks_of(underlying_[current_]);
        automorphisms_ = automorphism_bit_maps(underlying_[current_]);
    }
}

bool SignedGraphStream::is_canonical(std::uint32_t mask) const
{
    for (const auto& map : automorphisms_) {
        std::uint32_t image = 0;
        for (std::size_t b = 0; b < map.size(); ++b) {
            if ((mask >> b) & 1U) {
                image |= 1U << map[b];
            }
        }
        for (auto cut : cut_masks_) {
            if ((image ^ cut) < mask) {
                return false;
            }
        }
    }
    return true;
}

std::optional<SignedGraph> SignedGraphStream::next()
{
    while (current_ < underlying_.size()) {
        const auto& g = underlying_[current_];
        const std::uint32_t limit = 1U << g.size();
        while (next_mask_ < limit) {
            const std::uint32_t mask = next_mask_++;
            if (is_canonical(mask)) {
                return with_sign_mask(g, mask);
            }
        }
        ++current_;
        load_underlying();
    }
    return std::nullopt;
}

std::vector<SignedGraph> enumerate_signed_graphs(int max_n, bool connected_only)
{
    SignedGraphStream stream(max_n, connected_only);
    std::vector<SignedGraph> out;
    while (auto g = stream.next()) {
        out.push_back(std::move(*g));
    }
    return out;
}

} // namespace sc
