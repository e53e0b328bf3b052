#ifndef NCRES_RESIDUE_CALCULUS_HPP
#define NCRES_RESIDUE_CALCULUS_HPP

#include <map>
#include <vector>

#include <ncres/composition.hpp>
#include <ncres/exact_scalar.hpp>
#include <ncres/symbol_core.hpp>

namespace ncres
{

// Res(T_sigma) = integral over S^{n-1} x T^n of sigma_{-n}; carries pi^(n + n/2 rounded up).
using ResidueValue = PiGradedScalar;

// Symbol of T_sigma T_tau.
ClassicalSymbol compose(const ClassicalSymbol &sigma, const ClassicalSymbol &tau);

// (2 pi)^n * sum over mode-0 terms of coeff * sphere_monomial_integral(alpha).
ResidueValue component_residue(const HomogeneousComponent &c);

// Throws insufficient_expansion_error when trusted_floor > -n.
ResidueValue residue(const ClassicalSymbol &sigma);

// Res(sigma o tau) - Res(tau o sigma).
ResidueValue trace_defect(const ClassicalSymbol &sigma, const ClassicalSymbol &tau);

// Symbol of [T_{xi_dir}, T_sigma]; equals D_{x_dir} sigma. dir is 0-based.
ClassicalSymbol commutator_xi(const ClassicalSymbol &sigma, int dir);

// Symbol of [T_sigma, T_{e^{i x_dir}}], trusted down to max(floor(sigma), order(sigma) - depth).
ClassicalSymbol commutator_exp(const ClassicalSymbol &sigma, int dir, int depth);

struct DecompositionCertificate {
    int dim = 0;
    // degree d != -n  ->  (h_1, ..., h_n) with sum_l d/dxi_l h_l = sigma_d
    std::map<int, std::vector<HomogeneousComponent>> antiderivative_families;
    TrigPolynomial sphere_mean{2};
    // sigma_{-n} - r(x)|xi|^{-n}
    HomogeneousComponent remainder{2, -2};
};

// Splits sigma into Euler antiderivative families, the sphere mean r and a mean-zero remainder.
DecompositionCertificate uniqueness_decompose(const ClassicalSymbol &sigma);

// Checks every invariant of a certificate against the symbol it was built from.
bool verify_certificate(const ClassicalSymbol &sigma, const DecompositionCertificate &cert);

} // namespace ncres

#endif
