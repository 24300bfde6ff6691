#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"

namespace orthocol {
namespace {

/// Counts, by enumeration over blocks, how often each cross-group pair occurs.
std::map<std::pair<Point, Point>, std::size_t> pair_coverage(const TransversalDesign& d)
{
    std::map<std::pair<Point, Point>, std::size_t> seen;
    for (const auto& block : d.blocks)
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                if (block[a].group != block[b].group)
                    ++seen[std::minmax(block[a], block[b])];
    return seen;
}

TEST(ToTransversalDesign, FigureOne)
{
    const auto fig1 = testing::load_fixture("figure1_k3xk3.json");
    const auto d = to_transversal_design(fig1.graph, fig1.colouring);
    EXPECT_EQ(d.n, 3u);
    EXPECT_EQ(d.k, 2u);
    ASSERT_EQ(d.blocks.size(), 9u);
    for (Colour i = 0; i < 3; ++i)
        for (Colour j = 0; j < 3; ++j)
            EXPECT_EQ(d.blocks[3 * i + j], (Block{{0, i}, {1, j}}));
    EXPECT_TRUE(verify_design(d));

    const auto coverage = pair_coverage(d);
    EXPECT_EQ(coverage.size(), 9u);
    for (const auto& [pair, hits] : coverage)
        EXPECT_EQ(hits, 1u);
}

TEST(ToTransversalDesign, MolsTwoThree)
{
    const auto mols = mols_colourings(2, 3);
    const auto d = to_transversal_design(mols.graph, mols.colouring);
    EXPECT_EQ(d.blocks.size(), 4u);
    EXPECT_TRUE(verify_design(d));
    const auto coverage = pair_coverage(d);
    // every one of the 3 group pairs × 2² colour pairs
    EXPECT_EQ(coverage.size(), 12u);
    for (const auto& [pair, hits] : coverage)
        EXPECT_EQ(hits, 1u);
}

TEST(ToTransversalDesign, SingleVertex)
{
    const auto d = to_transversal_design(edgeless_graph(1), KOrthogonalColouring(1, {{0}, {0}}));
    EXPECT_EQ(d.blocks.size(), 1u);
    EXPECT_TRUE(verify_design(d));
}

TEST(ToTransversalDesign, RejectsNonPerfect)
{
    const auto fig2 = testing::load_fixture("figure2_c9xk2.json");
    EXPECT_THROW((void)to_transversal_design(fig2.graph, fig2.colouring), PreconditionError);
}

TEST(TransversalDesign, Groups)
{
    const TransversalDesign d{2, 3, {}};
    const auto groups = d.groups();
    ASSERT_EQ(groups.size(), 3u);
    for (std::size_t r = 0; r < 3; ++r)
        EXPECT_EQ(groups[r], (std::vector<Point>{{r, 0}, {r, 1}}));
}

TEST(VerifyDesign, StructuralFailures)
{
    const auto fig1 = testing::load_fixture("figure1_k3xk3.json");
    const auto good = to_transversal_design(fig1.graph, fig1.colouring);

    auto duplicated = good;
    duplicated.blocks[1] = duplicated.blocks[0];
    EXPECT_FALSE(verify_design(duplicated));

    auto missing_group = good;
    missing_group.blocks[4].pop_back();
    EXPECT_FALSE(verify_design(missing_group));

    auto same_group = good;
    same_group.blocks[4][1] = {0, 2};
    EXPECT_FALSE(verify_design(same_group));

    auto short_list = good;
    short_list.blocks.pop_back();
    EXPECT_FALSE(verify_design(short_list));

    auto out_of_range = good;
    out_of_range.blocks[0][0].colour = 3;
    EXPECT_FALSE(verify_design(out_of_range));
}

// The correspondence holds for every perfect colouring produced by the
// constructions; coverage totals n²·k(k−1)/2.
TEST(VerifyDesign, EveryConstructionYieldsADesign)
{
    std::vector<ColouredGraph> perfect;
    for (std::size_t n = 1; n <= 5; ++n)
        perfect.push_back(knkn_perfect_colouring(n));
    for (std::size_t p : {2, 3, 5})
        for (std::size_t k = 2; k <= p + 1; ++k) {
            perfect.push_back(mols_colourings(p, k));
            perfect.push_back(caro_yuster_graph(p, k));
        }
    const auto fig1 = knkn_perfect_colouring(3);
    perfect.push_back(thm2_compose(fig1.graph, fig1.colouring, cycle_graph(4)));
    perfect.push_back(product_compose_k(fig1.graph, fig1.colouring, fig1.graph, fig1.colouring, ProductKind::Strong));
    const auto grid3 = testing::grid9(3);
    perfect.push_back(thm5_compose(grid3.graph, grid3.colouring, cycle_graph(9), 3));

    for (const auto& [g, col] : perfect) {
        const auto d = to_transversal_design(g, col);
        ASSERT_EQ(d.blocks.size(), g.num_vertices());
        ASSERT_TRUE(verify_design(d));
        std::size_t total = 0;
        for (const auto& [pair, hits] : pair_coverage(d)) {
            ASSERT_EQ(hits, 1u);
            total += hits;
        }
        ASSERT_EQ(total, d.n * d.n * d.k * (d.k - 1) / 2);
    }
}

}  // namespace
}  // namespace orthocol
