#include "signed_circular/products.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "signed_circular/errors.hpp"

namespace sc {

std::string VertexSignMap::str() const
{
    std::string out;
    for (std::size_t v = 0; v < signs.size(); ++v) {
        if (v != 0) {
            out += ',';
        }
        out += std::to_string(v);
        out += ':';
        out += sign_char(signs[v]);
    }
    return out;
}

VertexSignMap VertexSignMap::parse(const std::string& text, int order)
{
    std::vector<int> seen(static_cast<std::size_t>(order), 0);
    VertexSignMap map{std::vector<Sign>(static_cast<std::size_t>(order), Sign::Positive)};
    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos || colon + 2 != item.size() ||
            (item.back() != '+' && item.back() != '-')) {
            throw std::invalid_argument("bad vertex sign entry `" + item + "` (expected v:+ or v:-)");
        }
        int v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(item.substr(0, colon), &used);
            if (used != colon) {
                v = -1;
            }
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0 || v >= order) {
            throw std::invalid_argument("vertex sign entry `" + item + "` out of range");
        }
        if (seen[v]++ != 0) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " signed twice");
        }
        map.signs[v] = item.back() == '+' ? Sign::Positive : Sign::Negative;
    }
    for (int v = 0; v < order; ++v) {
        if (seen[v] == 0) {
            throw std::invalid_argument("vertex sign map is missing vertex " + std::to_string(v));
        }
    }
    return map;
}

namespace {

void require_nonempty(const SignedGraph& a, const SignedGraph& b)
{
    if (a.order() == 0 || b.order() == 0) {
        throw std::invalid_argument("product factors must be nonempty");
    }
}

void require_total(const VertexSignMap& s, const SignedGraph& g, const char* which)
{
    if (static_cast<int>(s.size()) != g.order()) {
        throw std::invalid_argument(std::string("vertex sign map ") + which + " covers " +
                                    std::to_string(s.size()) + " of " + std::to_string(g.order()) +
                                    " vertices");
    }
}

template <typename SignA, typename SignB>
SignedGraph build_product(const SignedGraph& a, const SignedGraph& b, SignA&& sign_a, SignB&& sign_b)
{
    const ProductIndex idx{a.order(), b.order()};
    SignedGraph out(idx.order());
    for (VertexId x = 0; x < b.order(); ++x) {
        for (const auto& e : a.edges()) {
            out.add_edge(idx.pair(e.u, x), idx.pair(e.v, x), sign_a(e, x));
        }
    }
    for (VertexId u = 0; u < a.order(); ++u) {
        for (const auto& e : b.edges()) {
            out.add_edge(idx.pair(u, e.u), idx.pair(u, e.v), sign_b(e, u));
        }
    }
    return out;
}

SignedGraph induced(const SignedGraph& g, const std::vector<VertexId>& new_index, int order)
{
    SignedGraph out(order);
    for (const auto& e : g.edges()) {
        if (new_index[e.u] >= 0 && new_index[e.v] >= 0) {
            out.add_edge(new_index[e.u], new_index[e.v], e.sign);
        }
    }
    return out;
}

void require_index(const SignedGraph& product, const ProductIndex& idx)
{
    if (idx.left <= 0 || idx.right <= 0 || product.order() != idx.order()) {
        throw std::invalid_argument("product index " + std::to_string(idx.left) + "x" +
                                    std::to_string(idx.right) + " does not match a graph of order " +
                                    std::to_string(product.order()));
    }
}

} // namespace

SignedGraph cartesian_type1(const SignedGraph& a, const SignedGraph& b)
{
    require_nonempty(a, b);
    return build_product(
        a, b, [](const SignedEdge& e, VertexId) { return e.sign; },
        [](const SignedEdge& e, VertexId) { return e.sign; });
}

VertexSignMap default_vertex_signs(const SignedGraph& g)
{
    VertexSignMap map{std::vector<Sign>(static_cast<std::size_t>(g.order()), Sign::Positive)};
    for (const auto& e : g.edges()) {
        map.signs[e.u] = map.signs[e.u] * e.sign;
        map.signs[e.v] = map.signs[e.v] * e.sign;
    }
    return map;
}

SignedGraph cartesian_type2(const SignedGraph& a, const SignedGraph& b, const VertexSignMap& sa,
                            const VertexSignMap& sb)
{
    require_nonempty(a, b);
    require_total(sa, a, "A");
    require_total(sb, b, "B");
    return build_product(
        a, b, [&](const SignedEdge& e, VertexId x) { return e.sign * sb[x]; },
        [&](const SignedEdge& e, VertexId u) { return sa[u] * e.sign; });
}

SignedGraph simple_underlying(const SignedGraph& g)
{
    SignedGraph out(g.order());
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : g.edges()) {
        if (seen.insert(std::minmax(e.u, e.v)).second) {
            out.add_edge(e.u, e.v, Sign::Positive);
        }
    }
    return out;
}

SignedGraph digon(const SignedGraph& g)
{
    SignedGraph out(g.order());
    const auto simple = simple_underlying(g);
    for (const auto& e : simple.edges()) {
        out.add_edge(e.u, e.v, Sign::Positive);
        out.add_edge(e.u, e.v, Sign::Negative);
    }
    return out;
}

SignedGraph g_layer(const SignedGraph& product, const ProductIndex& idx, VertexId x)
{
    require_index(product, idx);
    if (x < 0 || x >= idx.right) {
        throw std::invalid_argument("layer vertex out of range");
    }
    std::vector<VertexId> new_index(static_cast<std::size_t>(idx.order()), -1);
    for (VertexId u = 0; u < idx.left; ++u) {
        new_index[idx.pair(u, x)] = u;
    }
    return induced(product, new_index, idx.left);
}

SignedGraph h_layer(const SignedGraph& product, const ProductIndex& idx, VertexId u)
{
    require_index(product, idx);
    if (u < 0 || u >= idx.left) {
        throw std::invalid_argument("layer vertex out of range");
    }
    std::vector<VertexId> new_index(static_cast<std::size_t>(idx.order()), -1);
    for (VertexId x = 0; x < idx.right; ++x) {
        new_index[idx.pair(u, x)] = x;
    }
    return induced(product, new_index, idx.right);
}

DiscreteColoring product_coloring(const DiscreteColoring& ca, const DiscreteColoring& cb, const ProductIndex& idx)
{
    if (!(ca.grid == cb.grid)) {
        throw std::invalid_argument("factor colorings use different grids");
    }
    if (static_cast<int>(ca.colors.size()) != idx.left || static_cast<int>(cb.colors.size()) != idx.right) {
        throw std::invalid_argument("factor colorings do not match the product index");
    }
    DiscreteColoring out{ca.grid, std::vector<int>(static_cast<std::size_t>(idx.order()))};
    for (VertexId u = 0; u < idx.left; ++u) {
        for (VertexId x = 0; x < idx.right; ++x) {
            out.colors[idx.pair(u, x)] = (ca.colors[u] + cb.colors[x]) % ca.grid.p;
        }
    }
    return out;
}

PositiveVertex ensure_positive_vertex(const SignedGraph& g, const VertexSignMap& s, int max_order)
{
    if (g.order() == 0) {
        throw std::invalid_argument("ensure_positive_vertex needs a nonempty graph");
    }
    require_total(s, g, "");
    for (VertexId v = 0; v < g.order(); ++v) {
        if (s[v] == Sign::Positive) {
            return {g, s, v, {}};
        }
    }
    if (g.order() > max_order) {
        throw BudgetExceeded("switching search limited to " + std::to_string(max_order) + " vertices");
    }
    const int n = g.order();
    for (int size = 1; size <= n; ++size) {
        // Subsets of the given size in lexicographic order.
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            VertexSet set;
            for (VertexId v = 0; v < n; ++v) {
                if (pick[v]) {
                    set.push_back(v);
                }
            }
            auto switched = switch_at(g, set);
            auto signs = default_vertex_signs(switched);
            for (VertexId v = 0; v < n; ++v) {
                if (signs[v] == Sign::Positive) {
                    return {std::move(switched), std::move(signs), v, std::move(set)};
                }
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    throw std::runtime_error("no switching of " + describe(g) + " has a positive vertex");
}

} // namespace sc
