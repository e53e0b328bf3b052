#include <gtest/gtest.h>

#include <ncres/dsl.hpp>
#include <ncres/random_symbol.hpp>

using namespace ncres;

namespace
{

parse_error_kind kind_of(const std::string &text)
{
    try {
        parse_symbol(text);
    } catch (const parse_error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return parse_error_kind::structure;
}

parse_error error_of(const std::string &text)
{
    try {
        parse_symbol(text);
    } catch (const parse_error &e) {
        return e;
    }
    throw std::runtime_error("accepted: " + text);
}

} // namespace

TEST(Parse, WorkedExamples)
{
    const auto s = parse_classical_symbol("dim 2 order 0 floor -2 deg -2 { xi1^2 * r^-4 }");
    EXPECT_EQ(s.order(), 0);
    EXPECT_EQ(s.trusted_floor(), -2);
    EXPECT_EQ(s.component(-2), make_component(2, ComplexRational(1), {0, 0}, {2, 0}, -4));
    EXPECT_EQ(format_symbol(s), "dim 2 order 0 floor -2\ndeg -2 { xi1^2 * r^-4 }");

    const auto nc = parse_nc_symbol("dim 2 order -2 floor -2 theta 1/4 deg -2 { r^-2 * U * V }");
    EXPECT_EQ(nc.theta(), ThetaParameter::exact(make_rational(1, 4)));
    EXPECT_EQ(nc.coefficient(-2, {0, 0}, -2), NCPolynomial::monomial(nc.theta(), 1, 1, CyclotomicScalar(1)));

    EXPECT_EQ(format_symbol(ClassicalSymbol(2, 0, 0)), "dim 2 order 0 floor 0");
}

TEST(Parse, Canonicalizes)
{
    const auto a = parse_symbol("dim 2 order 0 floor 0 deg 0 { xi1^2 * r^-2 + xi2^2*r^-2 }");
    EXPECT_EQ(format_symbol(a), "dim 2 order 0 floor 0\ndeg 0 { 1 }");
}

TEST(Parse, NCProductsAreOrdered)
{
    // V U = w U V
    const auto a = parse_nc_symbol("dim 2 order 0 floor 0 theta 1/3 deg 0 { V * U }");
    EXPECT_EQ(format_symbol(a), "dim 2 order 0 floor 0 theta 1/3\ndeg 0 { w * U * V }");
    const auto b = parse_nc_symbol("dim 2 order 0 floor 0 theta 1/3 deg 0 { w * U * V }");
    EXPECT_EQ(a, b);
}

TEST(Parse, Errors)
{
    EXPECT_EQ(kind_of("dim 2 order 0 floor -2 deg 0 { xi1 * r^-2 }"), parse_error_kind::homogeneity);
    EXPECT_EQ(kind_of("dim 2 order 0 floor 0 deg 0 { e(1,0) * U }"), parse_error_kind::mixed_generators);
    EXPECT_EQ(kind_of("dim 2 order 0 floor 0 theta 1/2 deg 0 { xi1 * r^-1 }"),
              parse_error_kind::theta_without_generators);
    EXPECT_EQ(kind_of("dim 2 order 0 floor 0 deg 0 { xi1 * }"), parse_error_kind::syntax);
    EXPECT_EQ(kind_of("dim 2 order 0 floor 0 deg 0 { 1 } deg 0 { 2 }"), parse_error_kind::structure);
    EXPECT_EQ(kind_of("dim 2 order 0 floor 0 deg 1 { xi1 }"), parse_error_kind::structure);
    EXPECT_EQ(kind_of("dim 3 order 0 floor 0 deg 0 { U }"), parse_error_kind::structure);
    EXPECT_EQ(kind_of("dim 2 order 0 floor 0 deg 0 { xi3 * r^-1 }"), parse_error_kind::structure);
    EXPECT_EQ(kind_of("dim 2 order 0 floor 0 deg 0 { 1/0 }"), parse_error_kind::syntax);
    EXPECT_EQ(kind_of("dim 2 order 0 deg 0 { 1 }"), parse_error_kind::syntax);
}

TEST(Parse, ErrorPositions)
{
    const auto e = error_of("dim 2 order 0 floor 0\ndeg 0 { xi1 $ }");
    EXPECT_EQ(e.kind(), parse_error_kind::syntax);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 13u);
}

TEST(Parse, CommentsAndWhitespace)
{
    const auto s = parse_symbol("# leading comment\ndim 2 order -2 floor -2\n  deg -2 {\n -r^-2 # tail\n }\n");
    EXPECT_EQ(format_symbol(s), "dim 2 order -2 floor -2\ndeg -2 { -r^-2 }");
}

TEST(NCElement, ParseAndFormat)
{
    const auto t = ThetaParameter::exact(make_rational(1, 4));
    const auto a = parse_nc_element("2 + U*V - 1/2 * V^-1", t);
    EXPECT_EQ(a.coeff(0, 0), CyclotomicScalar(2));
    EXPECT_EQ(a.coeff(0, -1), CyclotomicScalar(ComplexRational(make_rational(-1, 2))));
    EXPECT_EQ(parse_nc_element(format_nc_element(a), t), a);
    EXPECT_EQ(format_nc_element(NCPolynomial(t)), "0");
    EXPECT_THROW(parse_nc_element("xi1", t), parse_error);
}

TEST(Json, RoundTrip)
{
    for (const char *text : {"dim 3 order 1 floor -2 deg 1 { (1 + 2*i) * e(1,0,-1) * xi3 } deg -2 { -3/4 * r^-2 }",
                             "dim 2 order 0 floor -1 theta 2/5 deg 0 { w^3 * U^2 * V^-1 - i * U^0 } deg -1 { xi2 * r^-2 * V }"}) {
        const auto s = parse_symbol(text);
        const auto j = to_json(s);
        EXPECT_EQ(format_symbol(parse_json_symbol(j)), format_symbol(s)) << j;
        EXPECT_EQ(format_symbol(parse_symbol_auto(to_json(s, 2))), format_symbol(s));
    }
}

TEST(Json, Errors)
{
    auto json_kind = [](const std::string &text) {
        try {
            parse_json_symbol(text);
        } catch (const parse_error &e) {
            return e.kind();
        }
        ADD_FAILURE() << text;
        return parse_error_kind::syntax;
    };
    EXPECT_EQ(json_kind("{"), parse_error_kind::syntax);
    EXPECT_EQ(json_kind(R"({"dim":2,"order":0})"), parse_error_kind::structure);
    EXPECT_EQ(json_kind(R"({"dim":2,"order":0,"floor":0,"blocks":[{"deg":0,"terms":[{"coeff":{"re":"1"},"alpha":[1,0],"npow":0}]}]})"),
              parse_error_kind::homogeneity);
    EXPECT_EQ(json_kind(R"({"dim":2,"order":0,"floor":0,"blocks":[{"deg":0,"terms":[
        {"coeff":{"re":"1"},"mode":[1,0],"alpha":[0,0],"npow":0},{"coeff":{"re":"1"},"nc":[1,0],"alpha":[0,0],"npow":0}]}]})"),
              parse_error_kind::mixed_generators);
}

TEST(RoundTrip, RandomSymbols)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomSymbolParams p;
        p.dim = 2 + static_cast<int>(seed % 3);
        p.order = static_cast<int>(seed % 5) - 2;
        p.depth = 3;
        if (seed % 4 == 0) {
            p.dim = 2;
            p.theta = make_rational(static_cast<long>(seed % 7), 7);
        }
        const auto s = random_symbol(seed, p);
        const auto text = format_symbol(s);
        const auto back = parse_symbol(text);
        EXPECT_EQ(format_symbol(back), text);
        EXPECT_EQ(back.index(), s.index());
        EXPECT_TRUE(back == s) << text;
    }
}
