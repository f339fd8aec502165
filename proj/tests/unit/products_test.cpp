#include <gtest/gtest.h>

#include "generators.hpp"
#include "signed_circular/errors.hpp"
#include "signed_circular/products.hpp"
#include "signed_circular/solver.hpp"

namespace sc {
namespace {

SignedGraph path(int n, SignPattern s) { return make_family(FamilyKind::Path, n, s); }
SignedGraph cycle(int n, SignPattern s) { return make_family(FamilyKind::Cycle, n, s); }

TEST(VertexSignMap, ParseAndPrint)
{
    const auto m = VertexSignMap::parse("1:-,0:+,2:-", 3);
    EXPECT_EQ(m.str(), "0:+,1:-,2:-");
    EXPECT_EQ(VertexSignMap::parse(m.str(), 3), m);
    EXPECT_THROW(VertexSignMap::parse("0:+", 2), std::invalid_argument);
    EXPECT_THROW(VertexSignMap::parse("0:+,0:-", 2), std::invalid_argument);
    EXPECT_THROW(VertexSignMap::parse("0:+,1:x", 2), std::invalid_argument);
    EXPECT_THROW(VertexSignMap::parse("0:+,2:+", 2), std::invalid_argument);
}

TEST(ProductIndex, PairUnpair)
{
    const ProductIndex idx{3, 4};
    EXPECT_EQ(idx.order(), 12);
    for (VertexId w = 0; w < 12; ++w) {
        const auto [u, x] = idx.unpair(w);
        EXPECT_EQ(idx.pair(u, x), w);
    }
}

TEST(Products, SizesAndType1Signs)
{
    testing::Gen gen(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = gen.multigraph(gen.between(1, 5));
        const auto b = gen.multigraph(gen.between(1, 5));
        const auto p = cartesian_type1(a, b);
        EXPECT_EQ(p.order(), a.order() * b.order());
        EXPECT_EQ(p.size(), a.size() * b.order() + b.size() * a.order());
        int negatives = 0;
        for (const auto& e : p.edges()) {
            negatives += e.sign == Sign::Negative ? 1 : 0;
        }
        int expected = 0;
        for (const auto& e : a.edges()) {
            expected += (e.sign == Sign::Negative ? 1 : 0) * b.order();
        }
        for (const auto& e : b.edges()) {
            expected += (e.sign == Sign::Negative ? 1 : 0) * a.order();
        }
        EXPECT_EQ(negatives, expected);
    }
}

TEST(Products, Type2Signs)
{
    const auto a = path(2, SignPattern::all_negative());
    const auto b = cycle(3, SignPattern::one_negative());
    const auto sa = VertexSignMap::parse("0:+,1:-", 2);
    const auto sb = VertexSignMap::parse("0:-,1:+,2:+", 3);
    const auto p = cartesian_type2(a, b, sa, sb);
    const ProductIndex idx{2, 3};
    for (const auto& e : p.edges()) {
        const auto [u1, x1] = idx.unpair(e.u);
        const auto [u2, x2] = idx.unpair(e.v);
        if (x1 == x2) {
            EXPECT_EQ(e.sign, Sign::Negative * sb[x1]);
        } else {
            ASSERT_EQ(u1, u2);
            const auto& be = b.edge(x1 + x2 == 1 ? 0 : (x1 + x2 == 3 ? 1 : 2));
            EXPECT_EQ(e.sign, be.sign * sa[u1]);
        }
    }
}

TEST(Products, DefaultVertexSigns)
{
    EXPECT_EQ(default_vertex_signs(path(3, SignPattern::all_negative())).str(), "0:-,1:+,2:-");
    EXPECT_EQ(default_vertex_signs(SignedGraph(2)).str(), "0:+,1:+");
    EXPECT_EQ(default_vertex_signs(digon(path(2, SignPattern::all_positive()))).str(), "0:-,1:-");
}

TEST(Products, AllPositiveVertexSignsGiveType1)
{
    testing::Gen gen(52);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = gen.graph(gen.between(1, 4));
        const auto b = gen.graph(gen.between(1, 4));
        VertexSignMap sa{std::vector<Sign>(static_cast<std::size_t>(a.order()), Sign::Positive)};
        VertexSignMap sb{std::vector<Sign>(static_cast<std::size_t>(b.order()), Sign::Positive)};
        EXPECT_EQ(cartesian_type2(a, b, sa, sb), cartesian_type1(a, b));
    }
}

TEST(Products, Layers)
{
    testing::Gen gen(53);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = gen.multigraph(gen.between(1, 4));
        const auto b = gen.multigraph(gen.between(1, 4));
        const ProductIndex idx{a.order(), b.order()};
        const auto p1 = cartesian_type1(a, b);
        for (VertexId x = 0; x < b.order(); ++x) {
            EXPECT_EQ(g_layer(p1, idx, x), a);
        }
        for (VertexId u = 0; u < a.order(); ++u) {
            EXPECT_EQ(h_layer(p1, idx, u), b);
        }
        const auto sa = gen.vertex_signs(a.order());
        const auto sb = gen.vertex_signs(b.order());
        const auto p2 = cartesian_type2(a, b, sa, sb);
        for (VertexId x = 0; x < b.order(); ++x) {
            EXPECT_EQ(g_layer(p2, idx, x), sb[x] == Sign::Positive ? a : a.negated());
        }
        EXPECT_THROW(g_layer(p2, {idx.left + 1, idx.right}, 0), std::invalid_argument);
        EXPECT_THROW(h_layer(p2, idx, idx.left), std::invalid_argument);
    }
}

TEST(Products, ProductColoringIsValidForType1)
{
    testing::Gen gen(54);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = gen.multigraph(gen.between(1, 4));
        const auto b = gen.multigraph(gen.between(1, 4));
        const auto p = cartesian_type1(a, b);
        const auto rate = std::max(chi_c(a), chi_c(b));
        const auto grid = ColorGrid::for_rate(rate, p.has_negative_edge());
        const auto ca = find_coloring(a, grid);
        const auto cb = find_coloring(b, grid);
        ASSERT_TRUE(ca && cb);
        EXPECT_TRUE(check_coloring(p, product_coloring(*ca, *cb, {a.order(), b.order()})));
    }
    EXPECT_THROW(product_coloring({ColorGrid(4, 1), {0}}, {ColorGrid(5, 2), {0}}, {1, 1}),
                 std::invalid_argument);
}

TEST(Products, DigonConstruction)
{
    SignedGraph g(3);
    g.add_edge(0, 1, Sign::Negative);
    g.add_edge(0, 1, Sign::Positive);
    g.add_edge(1, 2, Sign::Positive);
    const auto d = digon(g);
    EXPECT_EQ(d.size(), 4);
    EXPECT_TRUE(is_digon_graph(d));
    EXPECT_EQ(simple_underlying(g).size(), 2);
}

TEST(Products, EnsurePositiveVertex)
{
    const auto c4 = cycle(4, SignPattern::one_negative());
    const auto s = default_vertex_signs(c4);
    const auto r = ensure_positive_vertex(c4, s);
    EXPECT_EQ(r.signs[r.vertex], Sign::Positive);
    EXPECT_TRUE(switching_equivalent(c4, r.graph));

    const auto k2m = path(2, SignPattern::all_negative());
    const auto forced = ensure_positive_vertex(k2m, default_vertex_signs(k2m));
    EXPECT_EQ(forced.switched, VertexSet{0});
    EXPECT_EQ(forced.signs[forced.vertex], Sign::Positive);

    // Every switching keeps both digon vertices at sign -1.
    const auto d = digon(path(2, SignPattern::all_positive()));
    EXPECT_THROW(ensure_positive_vertex(d, default_vertex_signs(d)), std::runtime_error);
}

} // namespace
} // namespace sc
