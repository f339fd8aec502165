#include <gtest/gtest.h>

#include <filesystem>

#include "generators.hpp"
#include "signed_circular/col_format.hpp"
#include "signed_circular/errors.hpp"
#include "signed_circular/sg_format.hpp"

namespace sc {
namespace {

void expect_parse_error(std::string_view text, int line, int column)
{
    try {
        parse_sg(text);
        ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

TEST(SgFormat, ParsesCommentsAndBlankLines)
{
    const auto doc = parse_sg("# five cycle\n\nsg 3   # header\n0 1 +\n1 2 -\n\n2 0 +\n");
    EXPECT_EQ(doc.graph.order(), 3);
    EXPECT_EQ(doc.graph.size(), 3);
    EXPECT_EQ(doc.graph.edge(1).sign, Sign::Negative);
    EXPECT_EQ(doc.comments, (std::vector<std::string>{"five cycle", "header"}));
}

TEST(SgFormat, ErrorsCarryLineAndColumn)
{
    expect_parse_error("graph 3\n", 1, 1);
    expect_parse_error("sg 2\n0 1 *\n", 2, 5);
    expect_parse_error("sg 3\n0 1 +\n1 x -\n", 3, 3);
    expect_parse_error("sg 2\n0 0 +\n", 2, 5);
    expect_parse_error("sg 2\n0 5 +\n", 2, 3);
    expect_parse_error("sg 2\n0 1 + extra\n", 2, 7);
    expect_parse_error("", 1, 1);
}

TEST(SgFormat, RoundTripRandom)
{
    testing::Gen gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = gen.multigraph(gen.between(1, 8));
        const std::vector<std::string> comments = {"trial " + std::to_string(trial)};
        const auto text = emit_sg(g, comments);
        const auto doc = parse_sg(text);
        EXPECT_EQ(doc.graph, g);
        EXPECT_EQ(doc.comments, comments);
        EXPECT_EQ(emit_sg(doc.graph, doc.comments), text);
    }
}

TEST(SgFormat, FixtureCorpusRoundTrips)
{
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(SC_FIXTURE_DIR "/sg")) {
        const auto doc = read_sg_file(entry.path().string());
        const auto text = emit_sg(doc.graph, doc.comments);
        EXPECT_EQ(parse_sg(text).graph, doc.graph) << entry.path();
        EXPECT_EQ(emit_sg(parse_sg(text).graph, parse_sg(text).comments), text) << entry.path();
        ++files;
    }
    EXPECT_EQ(files, 20);
}

TEST(ColFormat, RoundTripKeepsGridVerbatim)
{
    const DiscreteColoring c{ColorGrid(6, 2), {0, 3, 5}};
    const auto text = emit_col(c);
    EXPECT_EQ(text, "rate 6 2\ncolor 0 0\ncolor 1 3\ncolor 2 5\n");
    EXPECT_EQ(parse_col(text), c);
}

TEST(ColFormat, AcceptsAnyVertexOrder)
{
    const auto c = parse_col("# cert\nrate 5 2\ncolor 1 2\ncolor 0 4\n");
    EXPECT_EQ(c.colors, (std::vector<int>{4, 2}));
}

TEST(ColFormat, Rejects)
{
    EXPECT_THROW(parse_col("rate 5 2\ncolor 0 1\ncolor 0 2\n"), ParseError);
    EXPECT_THROW(parse_col("rate 5 2\ncolor 0 5\n"), ParseError);
    EXPECT_THROW(parse_col("rate 5 2\ncolor 1 0\n"), ParseError);
    EXPECT_THROW(parse_col("rate 3 2\ncolor 0 0\n"), ParseError);
    EXPECT_THROW(parse_col("color 0 0\n"), ParseError);
}

TEST(ColFormat, RoundTripRandom)
{
    testing::Gen gen(22);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = gen.between(1, 5);
        const ColorGrid grid(gen.between(2 * q, 4 * q + 3), q);
        DiscreteColoring c{grid, {}};
        const int n = gen.between(1, 9);
        for (int v = 0; v < n; ++v) {
            c.colors.push_back(gen.below(grid.p));
        }
        EXPECT_EQ(parse_col(emit_col(c)), c);
    }
}

} // namespace
} // namespace sc
