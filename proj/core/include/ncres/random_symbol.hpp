#ifndef NCRES_RANDOM_SYMBOL_HPP
#define NCRES_RANDOM_SYMBOL_HPP

#include <cstdint>
#include <optional>

#include <ncres/dsl.hpp>

namespace ncres
{

struct RandomSymbolParams {
    int dim = 2;              // 2..6
    int order = 0;            // -12..12
    int depth = 2;            // components at order, order-1, ..., order-depth; 0..16
    int max_mode = 2;         // Fourier modes / U,V exponents in [-max_mode, max_mode]; 0..8
    int max_alpha = 2;        // |alpha| <= max_alpha; 0..8
    int max_terms = 3;        // terms per component; 1..8
    std::optional<Rational> theta; // set: noncommutative symbol on the two-torus
};

// Pure function of (seed, params). Coefficients are small Gaussian rationals;
// trusted_floor = order - depth. Throws validation_error on out-of-range params.
AnySymbol random_symbol(std::uint64_t seed, const RandomSymbolParams &params);

ClassicalSymbol random_classical_symbol(std::uint64_t seed, const RandomSymbolParams &params);
NCSymbol random_nc_symbol(std::uint64_t seed, const RandomSymbolParams &params);

// Random element of A_theta with Fourier support in [-max_mode, max_mode]^2.
NCPolynomial random_nc_element(std::uint64_t seed, const ThetaParameter &theta, int max_mode, int max_terms);

// Pair with orders in [-1, 2], modes in [-3, 3] and enough depth that both
// products are complete down to degree -dim.
struct ResiduePair {
    ClassicalSymbol first;
    ClassicalSymbol second;
};
ResiduePair random_residue_pair(std::uint64_t seed, int dim, int max_terms = 3);

struct NCResiduePair {
    NCSymbol first;
    NCSymbol second;
};
NCResiduePair random_nc_residue_pair(std::uint64_t seed, const Rational &theta, int max_terms = 3);

} // namespace ncres

#endif
