#include <ncres/nc_torus.hpp>

namespace ncres
{

std::string to_string(const ThetaParameter &theta)
{
    if (theta.is_exact()) {
        return to_string(theta.rational());
    }
    return std::to_string(theta.value());
}

CyclotomicScalar nc_phase<CyclotomicScalar>::eval(const ThetaParameter &theta, long t)
{
    const Rational &q = theta.rational();
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
        throw domain_error("theta numerator/denominator too large for the cyclotomic backend");
    }
    return cyclotomic_phase(q.get_num().get_si(), q.get_den().get_si(), t);
}

NCResidue<CyclotomicScalar> nc_residue_defect(const NCSymbol &sigma, const NCSymbol &tau)
{
    const auto a = nc_residue(nc_compose(sigma, tau));
    const auto b = nc_residue(nc_compose(tau, sigma));
    return {a.pi_coefficient - b.pi_coefficient};
}

NCPolynomialApprox nc_apply(const NCSymbolApprox &sigma, const NCPolynomialApprox &a)
{
    if (!(a.theta() == sigma.theta())) {
        throw validation_error("nc_apply: theta mismatch");
    }
    NCPolynomialApprox result(a.theta());
    for (const auto &[mn, c] : a.coeffs()) {
        if (mn.first == 0 && mn.second == 0) {
            continue;
        }
        const double xi[2] = {static_cast<double>(mn.first), static_cast<double>(mn.second)};
        const double r2 = xi[0] * xi[0] + xi[1] * xi[1];
        NCPolynomialApprox symbol_value(a.theta());
        for (const auto &[d, comp] : sigma.symbol().components()) {
            for (const auto &[k, coeff] : comp.terms()) {
                const double v = std::pow(xi[0], k.alpha[0]) * std::pow(xi[1], k.alpha[1]) * detail::norm_power(r2, k.npow);
                symbol_value.add(k.mode[0], k.mode[1], coeff * v);
            }
        }
        const auto rhs = NCPolynomialApprox::monomial(a.theta(), mn.first, mn.second, c);
        result = nc_add(result, nc_mul(symbol_value, rhs));
    }
    return result;
}

NCPolynomialApprox nc_apply(const NCSymbol &sigma, const NCPolynomial &a)
{
    return nc_apply(to_approximate(sigma), to_approximate(a));
}

namespace
{

ThetaParameter approximate_theta(const ThetaParameter &theta)
{
    return ThetaParameter::approximate(theta.value());
}

NCSymbolApprox convert(const NCSymbol &sigma, const ThetaParameter &theta)
{
    ClassicalSymbolT<std::complex<double>> s(2, sigma.order(), sigma.trusted_floor());
    for (const auto &[d, comp] : sigma.symbol().components()) {
        TermMap<std::complex<double>> t;
        for (const auto &[k, c] : comp.terms()) {
            t.emplace(k, c.to_complex());
        }
        s.set_component(HomogeneousComponentT<std::complex<double>>(2, d, t));
    }
    return NCSymbolApprox(theta, std::move(s));
}

} // namespace

NCPolynomialApprox to_approximate(const NCPolynomial &a)
{
    NCPolynomialApprox r(approximate_theta(a.theta()));
    for (const auto &[mn, c] : a.coeffs()) {
        r.add(mn.first, mn.second, c.to_complex());
    }
    return r;
}

NCSymbolApprox to_approximate(const NCSymbol &sigma)
{
    return convert(sigma, approximate_theta(sigma.theta()));
}

NCSymbolApprox to_approximate(const NCSymbol &sigma, double theta)
{
    return convert(sigma, ThetaParameter::approximate(theta));
}

ClassicalSymbol to_euclidean(const NCSymbol &sigma)
{
    if (!sigma.theta().is_exact() || !sigma.theta().is_zero()) {
        throw domain_error("to_euclidean: theta must be exactly 0, got " + to_string(sigma.theta()));
    }
    ClassicalSymbol s(2, sigma.order(), sigma.trusted_floor());
    for (const auto &[d, comp] : sigma.symbol().components()) {
        TermMap<ComplexRational> t;
        for (const auto &[k, c] : comp.terms()) {
            t.emplace(k, c.as_complex_rational());
        }
        s.set_component(HomogeneousComponent(2, d, t));
    }
    return s;
}

NCSymbol from_euclidean(const ClassicalSymbol &sigma, const ThetaParameter &theta)
{
    if (sigma.dim() != 2) {
        throw validation_error("from_euclidean: symbol must live on T^2");
    }
    ClassicalSymbolT<CyclotomicScalar> s(2, sigma.order(), sigma.trusted_floor());
    for (const auto &[d, comp] : sigma.components()) {
        TermMap<CyclotomicScalar> t;
        for (const auto &[k, c] : comp.terms()) {
            t.emplace(k, CyclotomicScalar(c));
        }
        s.set_component(HomogeneousComponentT<CyclotomicScalar>(2, d, t));
    }
    return NCSymbol(theta, std::move(s));
}

SemiclassicalReport semiclassical_check(const NCSymbol &sigma)
{
    SemiclassicalReport report;
    report.lhs = residue(to_euclidean(sigma));
    const auto nc = nc_residue(sigma);
    // The Euclidean residue integrates over T^2 with total mass (2 pi)^2; the trace is normalized.
    report.rhs = torus_volume(2) * PiGradedScalar(nc.pi_coefficient.as_complex_rational(), 2);
    report.equal = report.lhs == report.rhs;
    return report;
}

std::string to_string(const NCResidue<CyclotomicScalar> &r)
{
    if (r.pi_coefficient.is_complex_rational()) {
        return to_string(PiGradedScalar(r.pi_coefficient.as_complex_rational(), 2));
    }
    return "(" + to_string(r.pi_coefficient) + ") * pi^1";
}

} // namespace ncres
