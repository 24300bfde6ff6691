#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace orthocol {
namespace {

std::string error_of(const std::string& text)
{
    try {
        (void)io::graph_from_json(io::parse_text(text, "input"), "graph");
    } catch (const FormatError& e) {
        return e.what();
    }
    return "";
}

TEST(GraphJson, CanonicalText)
{
    const Graph g(3, {{2, 1}, {1, 0}});
    EXPECT_EQ(io::to_json(g).dump(), R"({"num_vertices":3,"edges":[[0,1],[1,2]]})");
    EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
}

TEST(GraphJson, ErrorsNameTheField)
{
    EXPECT_NE(error_of(R"({"edges":[]})").find("num_vertices"), std::string::npos);
    EXPECT_NE(error_of(R"({"num_vertices":-1,"edges":[]})").find("num_vertices"), std::string::npos);
    EXPECT_NE(error_of(R"({"num_vertices":3})").find("edges"), std::string::npos);
    EXPECT_NE(error_of(R"({"num_vertices":3,"edges":[[0,1],[2]]})").find("edges[1]"), std::string::npos);
    EXPECT_NE(error_of(R"({"num_vertices":3,"edges":[[0,3]]})").find("edges[0]"), std::string::npos);
    EXPECT_NE(error_of(R"({"num_vertices":3,"edges":[[1,1]]})").find("self-loop"), std::string::npos);
    EXPECT_NE(error_of(R"({"num_vertices":3,"edges":[[0,1],[1,0]]})").find("duplicate"), std::string::npos);
    EXPECT_NE(error_of(R"({"num_vertices":3,"edges":[["a",1]]})").find("edges[0]"), std::string::npos);
    EXPECT_NE(error_of("{not json").find("invalid JSON"), std::string::npos);
}

TEST(CertificateJson, FieldOrderAndShape)
{
    const auto cert = io::certify(complete_graph(2), KOrthogonalColouring(2, {{0, 1}, {1, 0}}));
    EXPECT_EQ(io::to_json(cert).dump(),
              R"({"graph":{"num_vertices":2,"edges":[[0,1]]},"k":2,"palette":2,)"
              R"("colourings":[[0,1],[1,0]],"claims":{"proper":true,"orthogonal":true,"perfect":false}})");
}

TEST(CertificateJson, RejectsInconsistentShapes)
{
    const auto base = io::to_json(io::certify(complete_graph(2), KOrthogonalColouring(2, {{0, 1}, {1, 0}})));
    auto bad_k = base;
    bad_k["k"] = 3;
    EXPECT_THROW((void)io::certificate_from_json(bad_k), FormatError);
    auto short_row = base;
    short_row["colourings"][0] = io::Json::array({0});
    EXPECT_THROW((void)io::certificate_from_json(short_row), FormatError);
    auto big_colour = base;
    big_colour["colourings"][1][0] = 2;
    EXPECT_THROW((void)io::certificate_from_json(big_colour), FormatError);
    auto no_claims = base;
    no_claims.erase("claims");
    EXPECT_THROW((void)io::certificate_from_json(no_claims), FormatError);
    auto bad_flag = base;
    bad_flag["claims"]["perfect"] = "yes";
    EXPECT_THROW((void)io::certificate_from_json(bad_flag), FormatError);
}

TEST(CertificateJson, RoundTripProperty)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 12;
        const std::size_t palette = 1 + rng() % 4;
        const std::size_t k = 1 + rng() % 3;
        std::vector<std::vector<Colour>> cols(k, std::vector<Colour>(n));
        for (auto& row : cols)
            for (auto& c : row)
                c = static_cast<Colour>(rng() % palette);
        const auto cert = io::certify(testing::random_graph(rng, n, 0.3), KOrthogonalColouring(palette, cols));
        const std::string text = io::to_json(cert).dump();
        const auto back = io::certificate_from_json(io::parse_text(text, "t"));
        ASSERT_EQ(back.graph, cert.graph);
        ASSERT_EQ(back.colouring, cert.colouring);
        ASSERT_EQ(back.claims, cert.claims);
        ASSERT_EQ(io::to_json(back).dump(), text);
    }
}

TEST(CertificateJson, ShippedFixturesAreCanonical)
{
    for (const char* name : {"figure1_k3xk3.json", "figure2_c9xk2.json"}) {
        const auto cert = testing::load_fixture(name);
        const auto raw = io::read_file(testing::fixture_path(name));
        EXPECT_EQ(io::to_json(cert).dump(), raw.dump()) << name;
    }
}

TEST(DesignJson, SortedBlocks)
{
    const auto fig1 = knkn_perfect_colouring(2);
    TransversalDesign d = to_transversal_design(fig1.graph, fig1.colouring);
    std::reverse(d.blocks.begin(), d.blocks.end());
    EXPECT_EQ(io::to_json(d).dump(), R"({"n":2,"k":2,"blocks":[[0,0],[0,1],[1,0],[1,1]]})");
    const auto back = io::design_from_json(io::to_json(d));
    EXPECT_TRUE(verify_design(back));
    EXPECT_THROW((void)io::design_from_json(io::parse_text(R"({"n":2,"k":2,"blocks":[[0]]})", "d")), FormatError);
}

TEST(SolveResultJson, Shape)
{
    const Graph k2 = complete_graph(2);
    const auto result = solve_exact(k2, 2);
    const auto j = io::to_json(k2, result);
    EXPECT_EQ(j["status"], "Optimal");
    EXPECT_EQ(j["value"], 2);
    EXPECT_TRUE(j["witness"].is_object());
    EXPECT_EQ(j["witness"]["claims"]["proper"], true);

    const auto none = io::to_json(k2, decide_k_orthogonal(edgeless_graph(5), 2, 2));
    EXPECT_EQ(none["status"], "Infeasible");
    EXPECT_TRUE(none["value"].is_null());
    EXPECT_TRUE(none["witness"].is_null());
}

}  // namespace
}  // namespace orthocol
