#include <ncres/exact_scalar.hpp>

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace ncres
{

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw validation_error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw validation_error("malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n[0] == '+') {
        n.erase(0, 1);
    }
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) {
        throw validation_error("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

ComplexRational &ComplexRational::operator/=(const ComplexRational &o)
{
    if (o.is_zero()) {
        throw domain_error("division by zero");
    }
    const Rational d = o.norm();
    Rational re = (m_re * o.m_re + m_im * o.m_im) / d;
    m_im = (m_im * o.m_re - m_re * o.m_im) / d;
    m_re = std::move(re);
    return *this;
}

std::string to_string(const ComplexRational &z)
{
    if (z.is_real()) {
        return to_string(z.re());
    }
    if (sgn(z.re()) == 0) {
        return to_string(z.im()) + "*i";
    }
    std::string s = to_string(z.re());
    s += sgn(z.im()) < 0 ? " - " : " + ";
    s += to_string(Rational(abs(z.im()))) + "*i";
    return s;
}

std::ostream &operator<<(std::ostream &os, const ComplexRational &z)
{
    return os << to_string(z);
}

std::string to_string(const PiGradedScalar &v)
{
    if (v.is_zero()) {
        return "0";
    }
    std::string c = to_string(v.coeff());
    if (!v.coeff().is_real() && sgn(v.coeff().re()) != 0) {
        c = "(" + c + ")";
    }
    if (v.twice_exponent() == 0) {
        return c;
    }
    return c + " * pi^" + to_string(v.pi_exponent());
}

std::ostream &operator<<(std::ostream &os, const PiGradedScalar &v)
{
    return os << to_string(v);
}

std::complex<double> to_complex(const PiGradedScalar &v)
{
    return v.coeff().to_complex() * std::pow(std::numbers::pi, v.twice_exponent() / 2.0);
}

PiGradedScalar gamma_half(long two_z)
{
    if (two_z <= 0) {
        throw domain_error("gamma_half: argument must be positive, got " + std::to_string(two_z) + "/2");
    }
    if (two_z % 2 == 0) {
        // Gamma(m) = (m-1)!
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(two_z / 2 - 1));
        return PiGradedScalar(ComplexRational(Rational(f)), 0);
    }
    // Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
    const auto m = static_cast<unsigned long>((two_z - 1) / 2);
    mpz_class f2m, fm, p4;
    mpz_fac_ui(f2m.get_mpz_t(), 2 * m);
    mpz_fac_ui(fm.get_mpz_t(), m);
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, m);
    Rational c(f2m, p4 * fm);
    c.canonicalize();
    return PiGradedScalar(ComplexRational(c), 1);
}

PiGradedScalar sphere_monomial_integral(std::span<const int> alpha)
{
    const auto n = static_cast<long>(alpha.size());
    if (n < 2) {
        throw validation_error("sphere_monomial_integral: dimension must be at least 2");
    }
    long total = 0;
    for (int a : alpha) {
        if (a < 0) {
            throw validation_error("sphere_monomial_integral: negative exponent");
        }
        if (a % 2 != 0) {
            return {};
        }
        total += a;
    }
    PiGradedScalar num(ComplexRational(2), 0);
    for (int a : alpha) {
        num = num * gamma_half(a + 1);
    }
    return num / gamma_half(total + n);
}

PiGradedScalar sphere_measure(int n)
{
    const std::vector<int> zero(static_cast<std::size_t>(n), 0);
    return sphere_monomial_integral(zero);
}

PiGradedScalar torus_volume(int n)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return PiGradedScalar(ComplexRational(Rational(p)), 2 * n);
}

} // namespace ncres
