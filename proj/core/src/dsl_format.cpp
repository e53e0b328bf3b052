#include <ncres/dsl.hpp>

#include <map>
#include <numeric>
#include <sstream>

namespace ncres
{

namespace
{

struct piece {
    bool negative;
    std::string body;
};

// Splits a complex rational into a sign and an unsigned factor, e.g. -3/2, 2*i, (1 - i).
piece coefficient_piece(const ComplexRational &c)
{
    if (c.is_real()) {
        return {sgn(c.re()) < 0, to_string(Rational(abs(c.re())))};
    }
    if (sgn(c.re()) == 0) {
        const Rational m = abs(c.im());
        return {sgn(c.im()) < 0, m == 1 ? std::string("i") : to_string(m) + " * i"};
    }
    std::string s = "(" + to_string(c.re()) + (sgn(c.im()) < 0 ? " - " : " + ");
    const Rational m = abs(c.im());
    s += m == 1 ? std::string("i") : to_string(m) + " * i";
    return {false, s + ")"};
}

std::string power(const std::string &base, int k)
{
    return k == 1 ? base : base + "^" + std::to_string(k);
}

// The factors of a term other than its coefficient.
std::vector<std::string> monomial_factors(const TermKey &k, bool nc)
{
    std::vector<std::string> f;
    if (nc) {
        if (k.mode[0] != 0) {
            f.push_back(power("U", k.mode[0]));
        }
        if (k.mode[1] != 0) {
            f.push_back(power("V", k.mode[1]));
        }
        if (k.mode[0] == 0 && k.mode[1] == 0) {
            f.emplace_back("U^0");
        }
    } else if (std::any_of(k.mode.begin(), k.mode.end(), [](int m) { return m != 0; })) {
        std::string e = "e(";
        for (std::size_t j = 0; j < k.mode.size(); ++j) {
            e += (j ? "," : "") + std::to_string(k.mode[j]);
        }
        f.push_back(e + ")");
    }
    for (std::size_t j = 0; j < k.alpha.size(); ++j) {
        if (k.alpha[j] != 0) {
            f.push_back(power("xi" + std::to_string(j + 1), k.alpha[j]));
        }
    }
    if (k.npow != 0) {
        f.push_back("r^" + std::to_string(k.npow));
    }
    return f;
}

piece make_piece(const ComplexRational &c, const std::vector<std::string> &factors)
{
    piece p = coefficient_piece(c);
    if (factors.empty()) {
        return p;
    }
    std::string body = p.body == "1" ? std::string() : p.body;
    for (const auto &f : factors) {
        body += (body.empty() ? "" : " * ") + f;
    }
    p.body = body;
    return p;
}

std::string join(const std::vector<piece> &pieces)
{
    std::string s;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j == 0) {
            s += (pieces[j].negative ? "-" : "") + pieces[j].body;
        } else {
            s += (pieces[j].negative ? " - " : " + ") + pieces[j].body;
        }
    }
    return s;
}

} // namespace

namespace
{

// Inverse of the matrix whose columns are i^a w^b (a < 2, b < phi(N)/2) in the
// power basis of Q(zeta_N), N = lcm(4, q). Row 2b + a gives the coordinate of i^a w^b.
using phase_basis = std::vector<std::vector<Rational>>;

const phase_basis &phase_basis_inverse(const Rational &theta)
{
    thread_local std::map<Rational, phase_basis> cache;
    if (auto it = cache.find(theta); it != cache.end()) {
        return it->second;
    }
    const long p = theta.get_num().get_si();
    const long q = theta.get_den().get_si();
    const int field = std::lcm(4, static_cast<int>(q));
    const auto dim = static_cast<std::size_t>(euler_phi(field));
    const CyclotomicScalar i(ComplexRational::imaginary_unit());
    // augmented [M | I]
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(2 * dim, Rational(0)));
    for (std::size_t col = 0; col < dim; ++col) {
        const long b = static_cast<long>(col / 2);
        CyclotomicScalar v = cyclotomic_phase(p, q, b);
        if (col % 2 == 1) {
            v *= i;
        }
        const auto lifted = v.lift(field);
        for (std::size_t row = 0; row < dim; ++row) {
            m[row][col] = lifted.coeffs()[row];
        }
        m[col][dim + col] = 1;
    }
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t piv = c;
        while (piv < dim && sgn(m[piv][c]) == 0) {
            ++piv;
        }
        if (piv == dim) {
            throw domain_error("internal: phase basis is singular");
        }
        std::swap(m[piv], m[c]);
        const Rational inv = 1 / m[c][c];
        for (auto &v : m[c]) {
            v *= inv;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            if (r != c && sgn(m[r][c]) != 0) {
                const Rational f = m[r][c];
                for (std::size_t k = c; k < 2 * dim; ++k) {
                    m[r][k] -= f * m[c][k];
                }
            }
        }
    }
    phase_basis inv(dim, std::vector<Rational>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t k = 0; k < dim; ++k) {
            inv[r][k] = m[r][dim + k];
        }
    }
    return cache.emplace(theta, std::move(inv)).first->second;
}

} // namespace

std::vector<std::pair<int, ComplexRational>> detail::split_by_phase(const CyclotomicScalar &c, const Rational &theta)
{
    const int field = std::lcm(4, static_cast<int>(theta.get_den().get_si()));
    if (field % c.order() != 0) {
        throw domain_error("coefficient does not lie in Q(i, e^{2 pi i theta})");
    }
    const auto lifted = c.lift(field);
    const auto &inv = phase_basis_inverse(theta);
    const std::size_t dim = inv.size();
    std::vector<std::pair<int, ComplexRational>> out;
    for (std::size_t b = 0; 2 * b < dim; ++b) {
        Rational re(0), im(0);
        for (std::size_t k = 0; k < dim; ++k) {
            re += inv[2 * b][k] * lifted.coeffs()[k];
            im += inv[2 * b + 1][k] * lifted.coeffs()[k];
        }
        ComplexRational z(re, im);
        if (!z.is_zero()) {
            out.emplace_back(static_cast<int>(b), std::move(z));
        }
    }
    return out;
}

namespace
{

template <typename C, typename PieceFn>
std::string format_components(const ClassicalSymbolT<C> &s, std::string header, PieceFn pieces_for)
{
    std::string out = std::move(header);
    for (const auto &[d, comp] : s.components()) {
        std::vector<piece> pieces;
        for (const auto &[k, c] : comp.terms()) {
            for (auto &pc : pieces_for(k, c)) {
                pieces.push_back(std::move(pc));
            }
        }
        out += "\ndeg " + std::to_string(d) + " { " + join(pieces) + " }";
    }
    return out;
}

std::string header(int dim, int order, int floor)
{
    return "dim " + std::to_string(dim) + " order " + std::to_string(order) + " floor " + std::to_string(floor);
}

} // namespace

std::string format_symbol(const ClassicalSymbol &sigma)
{
    return format_components(sigma, header(sigma.dim(), sigma.order(), sigma.trusted_floor()),
                             [](const TermKey &k, const ComplexRational &c) {
                                 return std::vector<piece>{make_piece(c, monomial_factors(k, false))};
                             });
}

std::string format_symbol(const NCSymbol &sigma)
{
    const Rational &theta = sigma.theta().rational();
    return format_components(sigma.symbol(),
                             header(2, sigma.order(), sigma.trusted_floor()) + " theta " + to_string(theta),
                             [&](const TermKey &k, const CyclotomicScalar &c) {
                                 std::vector<piece> out;
                                 const auto factors = monomial_factors(k, true);
                                 for (const auto &[b, z] : detail::split_by_phase(c, theta)) {
                                     std::vector<std::string> f;
                                     if (b != 0) {
                                         f.push_back(power("w", b));
                                     }
                                     f.insert(f.end(), factors.begin(), factors.end());
                                     out.push_back(make_piece(z, f));
                                 }
                                 return out;
                             });
}

std::string format_symbol(const AnySymbol &sigma)
{
    return std::visit([](const auto &s) { return format_symbol(s); }, sigma);
}

std::string format_nc_element(const NCPolynomial &a)
{
    const Rational &theta = a.theta().rational();
    std::vector<piece> pieces;
    for (const auto &[mn, c] : a.coeffs()) {
        std::vector<std::string> gens;
        if (mn.first != 0) {
            gens.push_back(power("U", mn.first));
        }
        if (mn.second != 0) {
            gens.push_back(power("V", mn.second));
        }
        for (const auto &[b, z] : detail::split_by_phase(c, theta)) {
            std::vector<std::string> f;
            if (b != 0) {
                f.push_back(power("w", b));
            }
            f.insert(f.end(), gens.begin(), gens.end());
            pieces.push_back(make_piece(z, f));
        }
    }
    return pieces.empty() ? std::string("0") : join(pieces);
}

} // namespace ncres
