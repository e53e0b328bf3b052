#ifndef NCRES_NC_TORUS_HPP
#define NCRES_NC_TORUS_HPP

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include <ncres/composition.hpp>
#include <ncres/cyclotomic.hpp>
#include <ncres/exact_scalar.hpp>
#include <ncres/residue_calculus.hpp>
#include <ncres/symbol_core.hpp>

namespace ncres
{

// The deformation parameter of V U = e^{2 pi i theta} U V: either an exact
// rational or a floating value, never both.
class ThetaParameter
{
public:
    static ThetaParameter exact(Rational theta)
    {
        ThetaParameter t;
        t.m_exact = std::move(theta);
        return t;
    }
    static ThetaParameter approximate(double theta)
    {
        ThetaParameter t;
        t.m_approx = theta;
        return t;
    }

    bool is_exact() const noexcept
    {
        return m_exact.has_value();
    }
    const Rational &rational() const
    {
        if (!m_exact) {
            throw domain_error("theta has no exact rational value");
        }
        return *m_exact;
    }
    double value() const
    {
        return m_exact ? m_exact->get_d() : *m_approx;
    }
    bool is_zero() const
    {
        return m_exact ? sgn(*m_exact) == 0 : *m_approx == 0.0;
    }

    friend bool operator==(const ThetaParameter &a, const ThetaParameter &b)
    {
        return a.m_exact == b.m_exact && a.m_approx == b.m_approx;
    }

private:
    ThetaParameter() = default;
    std::optional<Rational> m_exact;
    std::optional<double> m_approx;
};

std::string to_string(const ThetaParameter &theta);

// e^{2 pi i theta t} in the scalar backend S.
template <typename S>
struct nc_phase;

template <>
struct nc_phase<CyclotomicScalar> {
    static CyclotomicScalar eval(const ThetaParameter &theta, long t);
};

template <>
struct nc_phase<std::complex<double>> {
    static std::complex<double> eval(const ThetaParameter &theta, long t)
    {
        return std::polar(1.0, 2.0 * std::numbers::pi * theta.value() * static_cast<double>(t));
    }
};

// U^a V^b * U^c V^d = e^{2 pi i theta b c} U^{a+c} V^{b+d}.
template <typename S>
class nc_twist
{
public:
    explicit nc_twist(ThetaParameter theta) : m_theta(std::move(theta)) {}

    std::optional<S> operator()(const MultiIndex &left, const MultiIndex &right) const
    {
        const long t = static_cast<long>(left[1]) * right[0];
        if (t == 0 || m_theta.is_zero()) {
            return std::nullopt;
        }
        auto it = m_cache.find(t);
        if (it == m_cache.end()) {
            it = m_cache.emplace(t, nc_phase<S>::eval(m_theta, t)).first;
        }
        return it->second;
    }

private:
    ThetaParameter m_theta;
    mutable std::map<long, S> m_cache;
};

using NCMode = std::pair<int, int>;

// Finite sum  sum a_{mn} U^m V^n  in the smooth noncommutative torus.
template <typename S>
class NCPolynomialT
{
public:
    explicit NCPolynomialT(ThetaParameter theta) : m_theta(std::move(theta)) {}

    static NCPolynomialT monomial(const ThetaParameter &theta, int m, int n, const S &c)
    {
        NCPolynomialT p(theta);
        p.add(m, n, c);
        return p;
    }
    static NCPolynomialT unit(const ThetaParameter &theta)
    {
        return monomial(theta, 0, 0, detail::from_int<S>(1));
    }
    static NCPolynomialT U(const ThetaParameter &theta)
    {
        return monomial(theta, 1, 0, detail::from_int<S>(1));
    }
    static NCPolynomialT V(const ThetaParameter &theta)
    {
        return monomial(theta, 0, 1, detail::from_int<S>(1));
    }

    const ThetaParameter &theta() const noexcept
    {
        return m_theta;
    }
    const std::map<NCMode, S> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    S coeff(int m, int n) const
    {
        auto it = m_coeffs.find({m, n});
        return it == m_coeffs.end() ? S{} : it->second;
    }
    void add(int m, int n, const S &c)
    {
        detail::accumulate(m_coeffs, NCMode{m, n}, c);
    }

    friend bool operator==(const NCPolynomialT &a, const NCPolynomialT &b)
    {
        return a.m_theta == b.m_theta && a.m_coeffs == b.m_coeffs;
    }

private:
    ThetaParameter m_theta;
    std::map<NCMode, S> m_coeffs;
};

using NCPolynomial = NCPolynomialT<CyclotomicScalar>;
using NCPolynomialApprox = NCPolynomialT<std::complex<double>>;

template <typename S>
NCPolynomialT<S> nc_add(const NCPolynomialT<S> &a, const NCPolynomialT<S> &b)
{
    if (!(a.theta() == b.theta())) {
        throw validation_error("nc_add: theta mismatch");
    }
    NCPolynomialT<S> r = a;
    for (const auto &[mn, c] : b.coeffs()) {
        r.add(mn.first, mn.second, c);
    }
    return r;
}

template <typename S>
NCPolynomialT<S> nc_scale(const S &s, const NCPolynomialT<S> &a)
{
    NCPolynomialT<S> r(a.theta());
    for (const auto &[mn, c] : a.coeffs()) {
        r.add(mn.first, mn.second, s * c);
    }
    return r;
}

template <typename S>
NCPolynomialT<S> nc_mul(const NCPolynomialT<S> &a, const NCPolynomialT<S> &b)
{
    if (!(a.theta() == b.theta())) {
        throw validation_error("nc_mul: theta mismatch");
    }
    const nc_twist<S> twist(a.theta());
    NCPolynomialT<S> r(a.theta());
    for (const auto &[ma, ca] : a.coeffs()) {
        for (const auto &[mb, cb] : b.coeffs()) {
            S c = ca * cb;
            if (auto ph = twist(MultiIndex{ma.first, ma.second}, MultiIndex{mb.first, mb.second})) {
                c = c * *ph;
            }
            r.add(ma.first + mb.first, ma.second + mb.second, c);
        }
    }
    return r;
}

// (U^m V^n)^* = V^{-n} U^{-m} = e^{2 pi i theta m n} U^{-m} V^{-n}, extended conjugate-linearly.
template <typename S>
NCPolynomialT<S> nc_adjoint(const NCPolynomialT<S> &a)
{
    NCPolynomialT<S> r(a.theta());
    for (const auto &[mn, c] : a.coeffs()) {
        S v = scalar_traits<S>::conj(c);
        const long t = static_cast<long>(mn.first) * mn.second;
        if (t != 0 && !a.theta().is_zero()) {
            v = v * nc_phase<S>::eval(a.theta(), t);
        }
        r.add(-mn.first, -mn.second, v);
    }
    return r;
}

// The normalized trace: the coefficient of U^0 V^0.
template <typename S>
S nc_trace(const NCPolynomialT<S> &a)
{
    return a.coeff(0, 0);
}

// delta_1 scales a_{mn} by m, delta_2 by n. j is 1 or 2.
template <typename S>
NCPolynomialT<S> nc_delta(const NCPolynomialT<S> &a, int j)
{
    if (j != 1 && j != 2) {
        throw validation_error("nc_delta: derivation index must be 1 or 2");
    }
    NCPolynomialT<S> r(a.theta());
    for (const auto &[mn, c] : a.coeffs()) {
        const int k = j == 1 ? mn.first : mn.second;
        if (k != 0) {
            r.add(mn.first, mn.second, c * detail::from_int<S>(k));
        }
    }
    return r;
}

// A classical symbol R^2 -> A_theta^infty. The underlying two-variable symbol
// stores U^m V^n in the mode slot; coefficient products are twisted by theta.
template <typename S>
class NCSymbolT
{
public:
    NCSymbolT(ThetaParameter theta, int order, int trusted_floor)
        : m_theta(std::move(theta)), m_symbol(2, order, trusted_floor)
    {
    }
    NCSymbolT(ThetaParameter theta, ClassicalSymbolT<S> symbol) : m_theta(std::move(theta)), m_symbol(std::move(symbol))
    {
        if (m_symbol.dim() != 2) {
            throw validation_error("noncommutative symbols live on R^2");
        }
    }

    const ThetaParameter &theta() const noexcept
    {
        return m_theta;
    }
    const ClassicalSymbolT<S> &symbol() const noexcept
    {
        return m_symbol;
    }
    ClassicalSymbolT<S> &symbol() noexcept
    {
        return m_symbol;
    }
    int order() const noexcept
    {
        return m_symbol.order();
    }
    int trusted_floor() const noexcept
    {
        return m_symbol.trusted_floor();
    }

    // The algebra element multiplying xi^alpha |xi|^npow in the given degree.
    NCPolynomialT<S> coefficient(int degree, const MultiIndex &alpha, int npow) const
    {
        NCPolynomialT<S> p(m_theta);
        const auto comp = m_symbol.component(degree);
        for (const auto &[k, c] : comp.terms()) {
            if (k.alpha == alpha && k.npow == npow) {
                p.add(k.mode[0], k.mode[1], c);
            }
        }
        return p;
    }

    friend bool operator==(const NCSymbolT &a, const NCSymbolT &b)
    {
        return a.m_theta == b.m_theta && a.m_symbol == b.m_symbol;
    }

private:
    ThetaParameter m_theta;
    ClassicalSymbolT<S> m_symbol;
};

using NCSymbol = NCSymbolT<CyclotomicScalar>;
using NCSymbolApprox = NCSymbolT<std::complex<double>>;

// Residue value coeff * pi (the circle integrals of monomials are rational multiples of pi).
template <typename S>
struct NCResidue {
    S pi_coefficient{};

    std::complex<double> to_complex() const
    {
        return scalar_traits<S>::to_complex(pi_coefficient) * std::numbers::pi;
    }
    friend bool operator==(const NCResidue &, const NCResidue &) = default;
};

template <typename S>
NCSymbolT<S> nc_compose(const NCSymbolT<S> &sigma, const NCSymbolT<S> &tau)
{
    if (!(sigma.theta() == tau.theta())) {
        throw validation_error("nc_compose: theta mismatch");
    }
    return NCSymbolT<S>(sigma.theta(), compose_expansion(sigma.symbol(), tau.symbol(), nc_twist<S>(sigma.theta())));
}

// Integral over S^1 of t(sigma_{-2}).
template <typename S>
NCResidue<S> nc_residue(const NCSymbolT<S> &sigma)
{
    if (sigma.trusted_floor() > -2) {
        throw insufficient_expansion_error("nc_residue: expansion is only trusted down to degree "
                                           + std::to_string(sigma.trusted_floor()) + ", need -2");
    }
    NCResidue<S> r;
    const auto top = sigma.symbol().component(-2);
    for (const auto &[k, c] : top.terms()) {
        if (k.mode[0] != 0 || k.mode[1] != 0) {
            continue;
        }
        const PiGradedScalar integral = sphere_monomial_integral(k.alpha);
        if (integral.is_zero()) {
            continue;
        }
        // On S^1 every nonzero monomial integral is a rational multiple of pi.
        r.pi_coefficient += c * scalar_traits<S>::from(integral.coeff());
    }
    return r;
}

NCResidue<CyclotomicScalar> nc_residue_defect(const NCSymbol &sigma, const NCSymbol &tau);

// Lattice evaluation of T_{sigma,theta}: U^m V^n is multiplied on the left by
// sigma(m, n), the sum of all stored components at xi = (m, n); mode (0, 0) maps to 0.
NCPolynomialApprox nc_apply(const NCSymbolApprox &sigma, const NCPolynomialApprox &a);
NCPolynomialApprox nc_apply(const NCSymbol &sigma, const NCPolynomial &a);

// Floating images of exact data.
NCPolynomialApprox to_approximate(const NCPolynomial &a);
NCSymbolApprox to_approximate(const NCSymbol &sigma);
// Reinterprets the (exact, theta-independent) coefficients of sigma at another theta.
NCSymbolApprox to_approximate(const NCSymbol &sigma, double theta);

// theta = 0 only: U^m V^n -> e^{i(m x_1 + n x_2)}.
ClassicalSymbol to_euclidean(const NCSymbol &sigma);
// Inverse direction; valid for every theta since it only relabels modes.
NCSymbol from_euclidean(const ClassicalSymbol &sigma, const ThetaParameter &theta);

struct SemiclassicalReport {
    ResidueValue lhs;
    ResidueValue rhs;
    bool equal = false;
};

// lhs = Res(to_euclidean(sigma)), rhs = (2 pi)^2 * nc_residue(sigma).
SemiclassicalReport semiclassical_check(const NCSymbol &sigma);

std::string to_string(const NCResidue<CyclotomicScalar> &r);

} // namespace ncres

#endif
