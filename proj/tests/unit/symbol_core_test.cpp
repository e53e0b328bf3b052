#include <gtest/gtest.h>

#include <random>

#include <ncres/random_symbol.hpp>
#include <ncres/symbol_core.hpp>

#include "oracles.hpp"

using namespace ncres;

namespace
{

const MultiIndex z2{0, 0};

HomogeneousComponent term(const ComplexRational &c, MultiIndex mode, MultiIndex alpha, int npow)
{
    const int n = static_cast<int>(alpha.size());
    return make_component(n, c, std::move(mode), std::move(alpha), npow);
}

HomogeneousComponent term(long c, MultiIndex alpha, int npow)
{
    MultiIndex mode(alpha.size(), 0);
    return term(ComplexRational(c), std::move(mode), std::move(alpha), npow);
}

// Compares a component with a floating function at random points.
template <typename F>
void expect_pointwise(const HomogeneousComponent &c, F f, double tol = 1e-9)
{
    std::mt19937_64 rng(7);
    for (int s = 0; s < 20; ++s) {
        const auto x = oracle::random_point(rng, c.dim(), 0.0, 6.3);
        const auto xi = oracle::random_point(rng, c.dim(), -2.0, 2.0);
        const auto got = evaluate(c, x, xi);
        const auto want = f(x, xi);
        EXPECT_NEAR(std::abs(got - want), 0.0, tol * std::max(1.0, std::abs(want)));
    }
}

} // namespace

TEST(Canonicalize, NormSquareCollapses)
{
    const auto c = component_add(term(1, {2, 0}, -2), term(1, {0, 2}, -2));
    EXPECT_EQ(c, term(1, {0, 0}, 0));
}

TEST(Canonicalize, OddClassIsFixed)
{
    const auto c = term(1, {1, 0}, -1);
    ASSERT_EQ(c.terms().size(), 1u);
    EXPECT_EQ(c.terms().begin()->first.alpha, (MultiIndex{1, 0}));
    EXPECT_EQ(c.terms().begin()->first.npow, -1);
}

TEST(Canonicalize, TwoParityClasses)
{
    // (xi1^2 + xi2^2)^2 |xi|^-6 + xi1 |xi|^-3, both of degree -2
    TermMap<ComplexRational> raw;
    raw[{z2, {4, 0}, -6}] = ComplexRational(1);
    raw[{z2, {2, 2}, -6}] = ComplexRational(2);
    raw[{z2, {0, 4}, -6}] = ComplexRational(1);
    raw[{z2, {1, 0}, -3}] = ComplexRational(1);
    const HomogeneousComponent c(2, -2, raw);
    const auto expect = component_add(term(1, {0, 0}, -2), term(1, {1, 0}, -3));
    EXPECT_EQ(c, expect);
    expect_pointwise(c, [](const auto &, const auto &xi) {
        const double r = std::hypot(xi[0], xi[1]);
        return std::complex<double>(std::pow(r, -2) + xi[0] * std::pow(r, -3));
    });
}

TEST(Canonicalize, EqualFunctionsHaveEqualForms)
{
    // xi1^2 xi2^2 |xi|^-4 written two ways in three variables
    TermMap<ComplexRational> a, b;
    a[{{0, 0, 0}, {2, 2, 0}, -4}] = ComplexRational(1);
    b[{{0, 0, 0}, {2, 2, 2}, -6}] = ComplexRational(1);
    b[{{0, 0, 0}, {4, 2, 0}, -6}] = ComplexRational(1);
    b[{{0, 0, 0}, {2, 4, 0}, -6}] = ComplexRational(1);
    EXPECT_EQ(HomogeneousComponent(3, 0, a), HomogeneousComponent(3, 0, b));
}

TEST(Component, Validation)
{
    TermMap<ComplexRational> bad;
    bad[{z2, {1, 0}, -2}] = ComplexRational(1);
    EXPECT_THROW(HomogeneousComponent(2, 0, bad), validation_error);
    TermMap<ComplexRational> neg;
    neg[{z2, {-1, 1}, 0}] = ComplexRational(1);
    EXPECT_THROW(HomogeneousComponent(2, 0, neg), validation_error);
    EXPECT_THROW(component_add(term(1, {1, 0}, -2), term(1, {0, 0}, 0)), validation_error);
}

TEST(Component, AddMul)
{
    const auto a = term(1, {1, 0}, -2);
    EXPECT_TRUE(component_add(a, component_neg(a)).is_zero());
    EXPECT_EQ(component_mul(term(1, {1, 0}, 0), a), term(1, {2, 0}, -2));
    const auto e = term(ComplexRational(1), {1, 0}, {0, 0}, 0);
    const auto f = term(ComplexRational(1), {-1, 0}, {0, 1}, 0);
    EXPECT_EQ(component_mul(e, f), term(1, {0, 1}, 0));
}

TEST(Component, PartialXi)
{
    EXPECT_EQ(partial_xi(term(1, {1, 0}, 0), 0), term(1, {0, 0}, 0));
    EXPECT_EQ(partial_xi(term(1, {0, 0}, -2), 0), term(-2, {1, 0}, -4));
    EXPECT_EQ(partial_xi(term(1, {1, 0}, -1), 1), term(-1, {1, 1}, -3));
    EXPECT_THROW(partial_xi(term(1, {0, 0}, -2), 2), validation_error);
}

TEST(Component, PartialXiFiniteDifference)
{
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RandomSymbolParams p;
        p.dim = 2 + static_cast<int>(seed % 2);
        p.order = -1;
        p.depth = 0;
        const auto s = random_classical_symbol(seed, p);
        const auto c = s.component(-1);
        for (int dir = 0; dir < p.dim; ++dir) {
            const auto d = partial_xi(c, dir);
            for (int k = 0; k < 5; ++k) {
                const auto x = oracle::random_point(rng, p.dim, 0.0, 6.3);
                auto xi = oracle::random_point(rng, p.dim, 0.5, 1.5);
                const auto fd = oracle::fd_partial_xi(c, x, xi, dir);
                EXPECT_NEAR(std::abs(evaluate(d, x, xi) - fd), 0.0, 1e-6 * std::max(1.0, std::abs(fd)));
            }
        }
    }
}

TEST(Component, DerivX)
{
    const auto a = term(ComplexRational(1), {1, 0}, {0, 0}, -2);
    EXPECT_EQ(deriv_x(a, 0), a);
    EXPECT_TRUE(deriv_x(term(1, {0, 1}, 0), 0).is_zero());
    const auto b = term(ComplexRational(1), {1, -3}, {1, 0}, 0);
    EXPECT_EQ(deriv_x(b, 1), term(ComplexRational(-3), {1, -3}, {1, 0}, 0));
}

TEST(Euler, WorkedExamples)
{
    const auto c = term(1, {2, 0}, -2);
    const auto h = euler_antiderivatives(c);
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h[0], term(ComplexRational(make_rational(1, 2)), {0, 0}, {3, 0}, -2));
    EXPECT_EQ(component_add(partial_xi(h[0], 0), partial_xi(h[1], 1)), c);
    const auto one = euler_antiderivatives(term(1, {0, 0}, 0));
    EXPECT_EQ(one[1], term(ComplexRational(make_rational(1, 2)), {0, 0}, {0, 1}, 0));
    EXPECT_THROW(euler_antiderivatives(term(ComplexRational(1), {1, 0}, {1, 1}, -4)), critical_degree_error);
}

TEST(SphereAverage, WorkedExamples)
{
    TrigPolynomial one(2), half(2);
    one.add(z2, ComplexRational(1));
    half.add(z2, ComplexRational(make_rational(1, 2)));
    EXPECT_EQ(sphere_average(term(1, {0, 0}, -2)), one);
    EXPECT_EQ(sphere_average(term(1, {2, 0}, -4)), half);
    EXPECT_TRUE(sphere_average(term(ComplexRational(1), {1, 0}, {1, 1}, -4)).is_zero());
    EXPECT_THROW(sphere_average(term(1, {0, 0}, -1)), validation_error);
    EXPECT_EQ(radial_component(half), term(ComplexRational(make_rational(1, 2)), {0, 0}, {0, 0}, -2));
}

TEST(ClassicalSymbol, Structure)
{
    ClassicalSymbol s(2, 0, -2);
    EXPECT_THROW(s.set_component(term(1, {0, 0}, 1)), validation_error);
    EXPECT_THROW(s.set_component(term(1, {0, 0}, -3)), validation_error);
    s.set_component(term(1, {0, 0}, -2));
    s.add_to_component(term(-1, {0, 0}, -2));
    EXPECT_TRUE(s.is_zero());
    EXPECT_TRUE(s.component(-1).is_zero());
    const auto x = xi_symbol(3, 2, -4);
    EXPECT_EQ(x.order(), 1);
    EXPECT_EQ(x.trusted_floor(), -4);
    EXPECT_EQ(x.component(1), term(1, {0, 0, 1}, 0));
    const auto e = exp_symbol(2, 0, -3);
    EXPECT_EQ(e.component(0), term(ComplexRational(1), {1, 0}, {0, 0}, 0));
}

TEST(ClassicalSymbol, TruncationAndAgreement)
{
    RandomSymbolParams p;
    p.depth = 4;
    const auto s = random_classical_symbol(11, p);
    const auto t = s.truncated(-2);
    EXPECT_EQ(t.trusted_floor(), -2);
    EXPECT_TRUE(agree_down_to(s, t, -2));
    EXPECT_EQ(symbol_sub(s, s), ClassicalSymbol(2, 0, -4));
}
