#include <gtest/gtest.h>

#include "generators.hpp"
#include "signed_circular/enumerate.hpp"
#include "signed_circular/solver.hpp"

namespace sc {
namespace {

TEST(SolverProperties, AgreesWithOracleOnSmallClasses)
{
    for (const auto& g : enumerate_signed_graphs(3, false)) {
        EXPECT_EQ(chi_c(g), chi_c_oracle(g)) << describe(g);
    }
}

TEST(SolverProperties, AgreesWithOracleOnRandomMultigraphs)
{
    testing::Gen gen(41);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.multigraph(gen.between(1, 5));
        EXPECT_EQ(chi_c(g), chi_c_oracle(g)) << describe(g);
    }
}

TEST(SolverProperties, BisectMatchesAscending)
{
    testing::Gen gen(42);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = gen.multigraph(gen.between(1, 7));
        EXPECT_EQ(chi_c(g), chi_c(g, {CandidateOrder::Ascending, 0})) << describe(g);
    }
}

TEST(SolverProperties, MonotoneOverCandidates)
{
    testing::Gen gen(43);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.multigraph(gen.between(2, 6));
        const auto value = chi_c(g);
        bool seen_feasible = false;
        for (const auto& grid : candidate_grids(g)) {
            const bool feasible = color_at(g, grid.rate()).has_value();
            EXPECT_EQ(feasible, !(grid.rate() < value)) << describe(g) << " at " << grid.rate().str();
            if (seen_feasible) {
                EXPECT_TRUE(feasible);
            }
            seen_feasible = seen_feasible || feasible;
        }
    }
}

TEST(SolverProperties, SubgraphMonotone)
{
    testing::Gen gen(44);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.multigraph(gen.between(2, 6), 60);
        std::vector<int> keep;
        for (int i = 0; i < g.size(); ++i) {
            if (gen.coin(70)) {
                keep.push_back(i);
            }
        }
        EXPECT_LE(chi_c(g.edge_subgraph(keep)), chi_c(g)) << describe(g);
    }
}

TEST(SolverProperties, SwitchingInvariant)
{
    testing::Gen gen(45);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.multigraph(gen.between(1, 6));
        EXPECT_EQ(chi_c(switch_at(g, gen.subset(g.order()))), chi_c(g)) << describe(g);
    }
}

TEST(SolverProperties, AtMostTwiceThePositiveValue)
{
    testing::Gen gen(46);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.multigraph(gen.between(1, 6));
        const auto positive = chi_c(g.all_positive());
        EXPECT_LE(chi_c(g), positive.scaled(2)) << describe(g);
        EXPECT_LE(chi_c(g).numerator(), 2 * chi_underlying(g) * chi_c(g).denominator()) << describe(g);
    }
}

TEST(SolverProperties, BalancedEqualsPositive)
{
    testing::Gen gen(47);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.graph(gen.between(1, 7));
        if (is_balanced(g)) {
            EXPECT_EQ(chi_c(g), chi_c(g.all_positive())) << describe(g);
        }
    }
}

TEST(SolverProperties, WitnessIsValidAtValue)
{
    testing::Gen gen(48);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = gen.multigraph(gen.between(1, 8));
        const auto r = solve_chi_c(g);
        EXPECT_EQ(r.witness.rate(), r.value);
        EXPECT_TRUE(check_coloring(g, r.witness)) << describe(g);
    }
}

TEST(SolverProperties, PositiveValueWithinOneOfChromatic)
{
    testing::Gen gen(49);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.graph(gen.between(2, 7)).all_positive();
        const auto value = chi_c(g);
        const int chi = chi_underlying(g);
        if (chi <= 2) {
            EXPECT_EQ(value, CircularRate(2, 1)) << describe(g);
            continue;
        }
        EXPECT_LE(value, CircularRate(chi, 1)) << describe(g);
        EXPECT_LT(CircularRate(chi - 1, 1), value) << describe(g);
    }
}

} // namespace
} // namespace sc
