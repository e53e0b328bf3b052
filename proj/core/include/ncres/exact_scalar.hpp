#ifndef NCRES_EXACT_SCALAR_HPP
#define NCRES_EXACT_SCALAR_HPP

#include <complex>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <ncres/errors.hpp>

namespace ncres
{

// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
// Accepts "a", "-a", "a/b". Throws validation_error on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);

class ComplexRational
{
public:
    ComplexRational() = default;
    ComplexRational(Rational re, Rational im = 0) : m_re(std::move(re)), m_im(std::move(im)) {}
    ComplexRational(long re) : m_re(re), m_im(0) {}

    static ComplexRational imaginary_unit()
    {
        return {Rational(0), Rational(1)};
    }

    const Rational &re() const noexcept
    {
        return m_re;
    }
    const Rational &im() const noexcept
    {
        return m_im;
    }

    bool is_zero() const
    {
        return sgn(m_re) == 0 && sgn(m_im) == 0;
    }
    bool is_real() const
    {
        return sgn(m_im) == 0;
    }

    ComplexRational conj() const
    {
        return {m_re, -m_im};
    }
    Rational norm() const
    {
        return m_re * m_re + m_im * m_im;
    }
    std::complex<double> to_complex() const
    {
        return {m_re.get_d(), m_im.get_d()};
    }

    ComplexRational &operator+=(const ComplexRational &o)
    {
        m_re += o.m_re;
        m_im += o.m_im;
        return *this;
    }
    ComplexRational &operator-=(const ComplexRational &o)
    {
        m_re -= o.m_re;
        m_im -= o.m_im;
        return *this;
    }
    ComplexRational &operator*=(const ComplexRational &o)
    {
        Rational re = m_re * o.m_re - m_im * o.m_im;
        m_im = m_re * o.m_im + m_im * o.m_re;
        m_re = std::move(re);
        return *this;
    }
    ComplexRational &operator/=(const ComplexRational &o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational &b)
    {
        return a += b;
    }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational &b)
    {
        return a -= b;
    }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational &b)
    {
        return a *= b;
    }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational &b)
    {
        return a /= b;
    }
    friend ComplexRational operator-(const ComplexRational &a)
    {
        return {-a.m_re, -a.m_im};
    }
    friend bool operator==(const ComplexRational &a, const ComplexRational &b)
    {
        return a.m_re == b.m_re && a.m_im == b.m_im;
    }

private:
    Rational m_re{0};
    Rational m_im{0};
};

std::string to_string(const ComplexRational &z);
std::ostream &operator<<(std::ostream &os, const ComplexRational &z);

// coeff * pi^(twice_exponent / 2). Zero is stored with exponent 0.
template <typename C>
class PiGraded
{
public:
    PiGraded() = default;
    PiGraded(C coeff, int twice_exponent) : m_coeff(std::move(coeff)), m_twice_exp(twice_exponent)
    {
        if (twice_exponent < 0) {
            throw domain_error("negative pi exponent");
        }
        if (m_coeff.is_zero()) {
            m_twice_exp = 0;
        }
    }

    const C &coeff() const noexcept
    {
        return m_coeff;
    }
    int twice_exponent() const noexcept
    {
        return m_twice_exp;
    }
    Rational pi_exponent() const
    {
        Rational q(m_twice_exp, 2);
        q.canonicalize();
        return q;
    }
    bool is_zero() const
    {
        return m_coeff.is_zero();
    }

    PiGraded &operator+=(const PiGraded &o)
    {
        if (o.is_zero()) {
            return *this;
        }
        if (is_zero()) {
            return *this = o;
        }
        if (m_twice_exp != o.m_twice_exp) {
            throw domain_error("cannot add pi-graded values of different pi exponent");
        }
        m_coeff += o.m_coeff;
        if (m_coeff.is_zero()) {
            m_twice_exp = 0;
        }
        return *this;
    }
    PiGraded &operator-=(const PiGraded &o)
    {
        return *this += -o;
    }
    friend PiGraded operator+(PiGraded a, const PiGraded &b)
    {
        return a += b;
    }
    friend PiGraded operator-(PiGraded a, const PiGraded &b)
    {
        return a -= b;
    }
    friend PiGraded operator-(const PiGraded &a)
    {
        return PiGraded(-a.m_coeff, a.m_twice_exp);
    }
    friend PiGraded operator*(const PiGraded &a, const PiGraded &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        return PiGraded(a.m_coeff * b.m_coeff, a.m_twice_exp + b.m_twice_exp);
    }
    friend PiGraded operator*(const C &c, const PiGraded &a)
    {
        return PiGraded(c * a.m_coeff, a.m_twice_exp);
    }
    // Requires b nonzero and exponent(a) >= exponent(b) unless a is zero.
    friend PiGraded operator/(const PiGraded &a, const PiGraded &b)
    {
        if (b.is_zero()) {
            throw domain_error("division by zero pi-graded value");
        }
        if (a.is_zero()) {
            return {};
        }
        return PiGraded(a.m_coeff / b.m_coeff, a.m_twice_exp - b.m_twice_exp);
    }
    friend bool operator==(const PiGraded &a, const PiGraded &b)
    {
        return a.m_coeff == b.m_coeff && a.m_twice_exp == b.m_twice_exp;
    }

private:
    C m_coeff{};
    int m_twice_exp = 0;
};

using PiGradedScalar = PiGraded<ComplexRational>;

// Renders as "a/b * pi^k" (k possibly "k/2"); zero renders as "0".
std::string to_string(const PiGradedScalar &v);
std::ostream &operator<<(std::ostream &os, const PiGradedScalar &v);
std::complex<double> to_complex(const PiGradedScalar &v);

// Gamma(two_z / 2), exact.
PiGradedScalar gamma_half(long two_z);

// Integral of xi^alpha over the unit sphere S^{n-1}, n = alpha.size().
PiGradedScalar sphere_monomial_integral(std::span<const int> alpha);

// |S^{n-1}|.
PiGradedScalar sphere_measure(int n);

// (2 pi)^n.
PiGradedScalar torus_volume(int n);

} // namespace ncres

#endif
