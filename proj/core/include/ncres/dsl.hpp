#ifndef NCRES_DSL_HPP
#define NCRES_DSL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <ncres/nc_torus.hpp>
#include <ncres/symbol_core.hpp>

namespace ncres
{

using AnySymbol = std::variant<ClassicalSymbol, NCSymbol>;

// Text form:
//   document := header block*
//   header   := "dim" INT "order" INT "floor" INT ["theta" RAT]
//   block    := "deg" INT "{" [expr] "}"
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := ["-"] ( RAT | "i" | "w" ["^" INT] | "e(" INT ("," INT)* ")"
//               | "U" ["^" INT] | "V" ["^" INT] | "xi" INT ["^" INT] | "r" "^" INT | "(" expr ")" )
// "w" is the phase e^{2 pi i theta}. Documents using U/V (or declaring theta)
// are noncommutative symbols on the two-torus; e(...) modes and U/V never mix.
AnySymbol parse_symbol(std::string_view text);
ClassicalSymbol parse_classical_symbol(std::string_view text);
NCSymbol parse_nc_symbol(std::string_view text);

// A bare expression over U, V, w and rationals, e.g. "2 + U*V - 1/2 * V^-1".
NCPolynomial parse_nc_element(std::string_view text, const ThetaParameter &theta);

std::string format_symbol(const ClassicalSymbol &sigma);
std::string format_symbol(const NCSymbol &sigma);
std::string format_symbol(const AnySymbol &sigma);
std::string format_nc_element(const NCPolynomial &a);

// JSON mirror: {dim, order, floor, theta?, blocks: [{deg, terms: [{coeff: {re, im},
// mode? | nc?, phase?, alpha, npow}]}]}. Rationals are strings "a/b".
std::string to_json(const AnySymbol &sigma, int indent = -1);
AnySymbol parse_json_symbol(std::string_view text);

namespace detail
{
// c = sum_b z_b w^b with z_b in Q(i), w = e^{2 pi i theta}, 0 <= b < [Q(i, w) : Q(i)]; unique.
std::vector<std::pair<int, ComplexRational>> split_by_phase(const CyclotomicScalar &c, const Rational &theta);
} // namespace detail

// JSON when the first non-blank character is '{', text otherwise.
AnySymbol parse_symbol_auto(std::string_view text);

} // namespace ncres

#endif
