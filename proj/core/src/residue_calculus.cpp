#include <ncres/residue_calculus.hpp>

#include <algorithm>

namespace ncres
{

namespace
{

ClassicalSymbol lower_floor(const ClassicalSymbol &s, int by)
{
    ClassicalSymbol r(s.dim(), s.order(), s.trusted_floor() - by);
    for (const auto &[d, c] : s.components()) {
        r.set_component(c);
    }
    return r;
}

// [a, b] for commuting coefficients. The gamma = 0 products cancel identically, so
// unknown components below either floor only reach degrees two below the
// composition floor, and the commutator is trusted one degree further down.
ClassicalSymbol commutator(const ClassicalSymbol &a, const ClassicalSymbol &b)
{
    const ClassicalSymbol la = lower_floor(a, 1);
    const ClassicalSymbol lb = lower_floor(b, 1);
    return symbol_sub(compose(la, lb), compose(lb, la));
}

void check_direction(const ClassicalSymbol &s, int dir)
{
    if (dir < 0 || dir >= s.dim()) {
        throw validation_error("direction " + std::to_string(dir + 1) + " out of range for dimension "
                               + std::to_string(s.dim()));
    }
}

} // namespace

ClassicalSymbol compose(const ClassicalSymbol &sigma, const ClassicalSymbol &tau)
{
    return compose_expansion(sigma, tau);
}

ResidueValue component_residue(const HomogeneousComponent &c)
{
    const int n = c.dim();
    ResidueValue sum;
    const MultiIndex zero(static_cast<std::size_t>(n), 0);
    for (const auto &[k, coeff] : c.terms()) {
        if (k.mode != zero) {
            continue;
        }
        sum += coeff * sphere_monomial_integral(k.alpha);
    }
    return torus_volume(n) * sum;
}

ResidueValue residue(const ClassicalSymbol &sigma)
{
    const int n = sigma.dim();
    if (sigma.trusted_floor() > -n) {
        throw insufficient_expansion_error("residue: expansion is only trusted down to degree "
                                           + std::to_string(sigma.trusted_floor()) + ", need " + std::to_string(-n));
    }
    return component_residue(sigma.component(-n));
}

ResidueValue trace_defect(const ClassicalSymbol &sigma, const ClassicalSymbol &tau)
{
    return residue(compose(sigma, tau)) - residue(compose(tau, sigma));
}

ClassicalSymbol commutator_xi(const ClassicalSymbol &sigma, int dir)
{
    check_direction(sigma, dir);
    const ClassicalSymbol xi = xi_symbol(sigma.dim(), dir, sigma.trusted_floor() - sigma.order());
    return commutator(xi, sigma);
}

ClassicalSymbol commutator_exp(const ClassicalSymbol &sigma, int dir, int depth)
{
    check_direction(sigma, dir);
    if (depth < 0) {
        throw validation_error("commutator_exp: depth must be nonnegative");
    }
    const ClassicalSymbol e = exp_symbol(sigma.dim(), dir, sigma.trusted_floor() - sigma.order());
    const ClassicalSymbol c = commutator(sigma, e);
    return c.truncated(std::max(c.trusted_floor(), sigma.order() - depth));
}

DecompositionCertificate uniqueness_decompose(const ClassicalSymbol &sigma)
{
    const int n = sigma.dim();
    if (sigma.trusted_floor() > -n) {
        throw insufficient_expansion_error("decompose: expansion is only trusted down to degree "
                                           + std::to_string(sigma.trusted_floor()) + ", need " + std::to_string(-n));
    }
    DecompositionCertificate cert;
    cert.dim = n;
    for (const auto &[d, c] : sigma.components()) {
        if (d != -n) {
            cert.antiderivative_families.emplace(d, euler_antiderivatives(c));
        }
    }
    const HomogeneousComponent critical = sigma.component(-n);
    cert.sphere_mean = sphere_average(critical);
    cert.remainder = component_sub(critical, radial_component(cert.sphere_mean));
    return cert;
}

bool verify_certificate(const ClassicalSymbol &sigma, const DecompositionCertificate &cert)
{
    const int n = sigma.dim();
    if (cert.dim != n) {
        return false;
    }
    for (const auto &[d, c] : sigma.components()) {
        if (d != -n && !cert.antiderivative_families.contains(d)) {
            return false;
        }
    }
    for (const auto &[d, family] : cert.antiderivative_families) {
        if (static_cast<int>(family.size()) != n) {
            return false;
        }
        HomogeneousComponent sum(n, d);
        for (int l = 0; l < n; ++l) {
            sum = component_add(sum, partial_xi(family[static_cast<std::size_t>(l)], l));
        }
        if (!(sum == sigma.component(d))) {
            return false;
        }
    }
    if (cert.remainder.degree() != -n || cert.remainder.dim() != n) {
        return false;
    }
    if (!(component_add(radial_component(cert.sphere_mean), cert.remainder) == sigma.component(-n))) {
        return false;
    }
    return sphere_average(cert.remainder).is_zero();
}

} // namespace ncres
