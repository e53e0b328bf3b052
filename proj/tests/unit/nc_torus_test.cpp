#include <gtest/gtest.h>

#include <ncres/dsl.hpp>
#include <ncres/nc_torus.hpp>
#include <ncres/random_symbol.hpp>
#include <ncres/residue_calculus.hpp>

using namespace ncres;

namespace
{

ThetaParameter th(long p, long q)
{
    return ThetaParameter::exact(make_rational(p, q));
}

NCPolynomial mono(const ThetaParameter &t, int m, int n, const CyclotomicScalar &c = CyclotomicScalar(1))
{
    return NCPolynomial::monomial(t, m, n, c);
}

NCSymbol parse_nc(const std::string &text)
{
    return parse_nc_symbol(text);
}

} // namespace

TEST(NCPolynomial, TwistedRelation)
{
    for (auto t : {th(0, 1), th(1, 4), th(2, 5)}) {
        const auto u = NCPolynomial::U(t), v = NCPolynomial::V(t);
        EXPECT_EQ(nc_mul(v, u), nc_scale(nc_phase<CyclotomicScalar>::eval(t, 1), nc_mul(u, v)));
    }
    const auto t = th(1, 4);
    const auto uv = mono(t, 1, 1);
    EXPECT_EQ(nc_mul(uv, uv), mono(t, 2, 2, CyclotomicScalar(ComplexRational::imaginary_unit())));
    EXPECT_THROW(nc_mul(NCPolynomial::U(t), NCPolynomial::U(th(1, 3))), validation_error);
}

TEST(NCPolynomial, Adjoint)
{
    const auto t = th(1, 3);
    EXPECT_EQ(nc_adjoint(NCPolynomial::U(t)), mono(t, -1, 0));
    EXPECT_EQ(nc_adjoint(mono(t, 1, 1)), mono(t, -1, -1, cyclotomic_phase(1, 3, 1)));
    const auto z = th(0, 1);
    const auto a = nc_add(nc_add(mono(z, 1, 2, 3), mono(z, -1, -2, 3)), mono(z, 0, 0, 5));
    EXPECT_EQ(nc_adjoint(a), a);
    EXPECT_EQ(nc_adjoint(nc_adjoint(random_nc_element(3, t, 2, 4))), random_nc_element(3, t, 2, 4));
}

TEST(NCPolynomial, TraceAndDelta)
{
    const auto t = th(2, 5);
    EXPECT_EQ(nc_trace(NCPolynomial::unit(t)), CyclotomicScalar(1));
    EXPECT_TRUE(nc_trace(mono(t, 1, 1)).is_zero());
    EXPECT_EQ(nc_trace(nc_add(mono(t, 0, 0, 3), mono(t, 1, 0, 2))), CyclotomicScalar(3));
    EXPECT_EQ(nc_delta(NCPolynomial::U(t), 1), NCPolynomial::U(t));
    EXPECT_TRUE(nc_delta(mono(t, 3, 0), 2).coeffs().empty());
    EXPECT_EQ(nc_delta(mono(t, 2, 5), 1), mono(t, 2, 5, 2));
    EXPECT_THROW(nc_delta(mono(t, 2, 5), 3), validation_error);
}

TEST(NCSymbol, ComposeWorkedExamples)
{
    const auto sigma = parse_nc("dim 2 order 1 floor -3 theta 1/3 deg 1 { xi1 * U^0 }");
    const auto tau = parse_nc("dim 2 order -2 floor -4 theta 1/3 deg -2 { r^-2 * U }");
    const auto lambda = nc_compose(sigma, tau);
    const auto expect = parse_nc("dim 2 order -1 floor -3 theta 1/3 deg -1 { xi1 * r^-2 * U } deg -2 { r^-2 * U }");
    EXPECT_EQ(lambda, expect);
}

TEST(NCSymbol, ScalarCoefficientsReduceToCommutative)
{
    RandomSymbolParams p;
    p.max_mode = 0;
    p.depth = 3;
    p.theta = make_rational(2, 5);
    const auto a = random_nc_symbol(1, p), b = random_nc_symbol(2, p);
    EXPECT_EQ(nc_compose(a, b).symbol(), compose_expansion(a.symbol(), b.symbol()));
}

TEST(NCSymbol, ResidueWorkedExamples)
{
    EXPECT_EQ(nc_residue(parse_nc("dim 2 order -2 floor -2 theta 0 deg -2 { r^-2 * U^0 }")).pi_coefficient,
              CyclotomicScalar(2));
    EXPECT_TRUE(nc_residue(parse_nc("dim 2 order -2 floor -2 theta 1/4 deg -2 { r^-2 * U * V }"))
                    .pi_coefficient.is_zero());
    EXPECT_EQ(nc_residue(parse_nc("dim 2 order -2 floor -2 theta 1/2 deg -2 { xi1^2 * r^-4 * (2 + U) }"))
                  .pi_coefficient,
              CyclotomicScalar(2));
    EXPECT_THROW(nc_residue(parse_nc("dim 2 order 0 floor -1 theta 1/2 deg 0 { U }")), insufficient_expansion_error);
}

TEST(NCSymbol, ApplyWorkedExamples)
{
    const auto t = ThetaParameter::approximate(0.3);
    const auto inv = to_approximate(parse_nc("dim 2 order -2 floor -2 theta 0 deg -2 { r^-2 * U^0 }"), 0.3);
    const auto uv = NCPolynomialApprox::monomial(t, 1, 1, 1.0);
    const auto r = nc_apply(inv, uv);
    EXPECT_NEAR(std::abs(r.coeff(1, 1) - 0.5), 0.0, 1e-14);
    EXPECT_TRUE(nc_apply(inv, NCPolynomialApprox::unit(t)).coeffs().empty());
    const auto x1 = to_approximate(parse_nc("dim 2 order 1 floor 1 theta 0 deg 1 { xi1 * U^0 }"), 0.3);
    EXPECT_NEAR(std::abs(nc_apply(x1, NCPolynomialApprox::U(t)).coeff(1, 0) - 1.0), 0.0, 1e-14);
}

TEST(NCSymbol, EuclideanBridge)
{
    const auto s = parse_nc("dim 2 order -2 floor -2 theta 0 deg -2 { r^-2 * (1 + U + U^-1) }");
    const auto e = parse_classical_symbol("dim 2 order -2 floor -2 deg -2 { r^-2 * (1 + e(1,0) + e(-1,0)) }");
    EXPECT_EQ(to_euclidean(s), e);
    EXPECT_EQ(from_euclidean(e, th(0, 1)), s);
    EXPECT_TRUE(to_euclidean(NCSymbol(th(0, 1), 0, 0)).is_zero());
    EXPECT_EQ(to_euclidean(parse_nc("dim 2 order 1 floor 1 theta 0 deg 1 { xi1 * V }")),
              parse_classical_symbol("dim 2 order 1 floor 1 deg 1 { xi1 * e(0,1) }"));
    EXPECT_THROW(to_euclidean(parse_nc("dim 2 order 1 floor 1 theta 1/2 deg 1 { xi1 * V }")), domain_error);
}

TEST(NCSymbol, SemiclassicalWorkedExamples)
{
    const auto rep = semiclassical_check(parse_nc("dim 2 order -2 floor -2 theta 0 deg -2 { r^-2 * U^0 }"));
    EXPECT_TRUE(rep.equal);
    EXPECT_EQ(rep.lhs, PiGradedScalar(ComplexRational(8), 6));
    EXPECT_EQ(rep.rhs, rep.lhs);
    const auto zero = semiclassical_check(parse_nc("dim 2 order -2 floor -2 theta 0 deg -2 { r^-2 * U }"));
    EXPECT_TRUE(zero.equal);
    EXPECT_TRUE(zero.lhs.is_zero());
}

TEST(NCSymbol, ApproximateMatchesExact)
{
    RandomSymbolParams p;
    p.theta = make_rational(1, 3);
    p.depth = 3;
    const auto a = random_nc_symbol(4, p), b = random_nc_symbol(5, p);
    const auto exact = nc_residue(nc_compose(a, b)).to_complex();
    const auto approx = nc_residue(nc_compose(to_approximate(a), to_approximate(b))).to_complex();
    EXPECT_NEAR(std::abs(exact - approx), 0.0, 1e-9);
}
