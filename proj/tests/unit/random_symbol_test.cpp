#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <ncres/random_symbol.hpp>

using namespace ncres;

namespace
{

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(RandomSymbol, Golden)
{
    RandomSymbolParams p;
    p.dim = 2;
    p.order = 1;
    p.depth = 4;
    const auto text = format_symbol(random_symbol(42, p));
    const auto golden = read_file(std::string(NCRES_TEST_DATA) + "/random_seed42_dim2_order1_depth4.txt");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(text + "\n", golden);
}

TEST(RandomSymbol, Deterministic)
{
    RandomSymbolParams p;
    p.dim = 3;
    p.depth = 5;
    EXPECT_TRUE(random_symbol(7, p) == random_symbol(7, p));
    EXPECT_FALSE(random_symbol(7, p) == random_symbol(8, p));
    p.theta = make_rational(1, 3);
    p.dim = 2;
    EXPECT_TRUE(random_symbol(7, p) == random_symbol(7, p));
}

TEST(RandomSymbol, DepthZeroIsSingleComponent)
{
    RandomSymbolParams p;
    p.depth = 0;
    p.order = -1;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_classical_symbol(seed, p);
        EXPECT_LE(s.components().size(), 1u);
        EXPECT_EQ(s.trusted_floor(), -1);
    }
}

TEST(RandomSymbol, RespectsBounds)
{
    RandomSymbolParams p;
    p.dim = 3;
    p.order = 2;
    p.depth = 4;
    p.max_mode = 1;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = random_classical_symbol(seed, p);
        EXPECT_EQ(s.order(), 2);
        EXPECT_EQ(s.trusted_floor(), -2);
        for (const auto &[d, c] : s.components()) {
            for (const auto &[k, v] : c.terms()) {
                for (int m : k.mode) {
                    EXPECT_LE(std::abs(m), 1);
                }
            }
        }
    }
}

TEST(RandomSymbol, InvalidParams)
{
    RandomSymbolParams p;
    p.dim = 1;
    EXPECT_THROW(random_symbol(0, p), validation_error);
    p = {};
    p.depth = -1;
    EXPECT_THROW(random_symbol(0, p), validation_error);
    p = {};
    p.dim = 3;
    p.theta = make_rational(1, 2);
    EXPECT_THROW(random_symbol(0, p), validation_error);
    p = {};
    p.max_terms = 0;
    EXPECT_THROW(random_symbol(0, p), validation_error);
}
