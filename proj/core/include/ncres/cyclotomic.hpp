#ifndef NCRES_CYCLOTOMIC_HPP
#define NCRES_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include <ncres/exact_scalar.hpp>

namespace ncres
{

// Coefficients of the N-th cyclotomic polynomial, lowest degree first. Monic.
const std::vector<long> &cyclotomic_polynomial(int order);

// Euler's totient, i.e. the degree of cyclotomic_polynomial(order).
int euler_phi(int order);

// An element of Q(zeta_N) with N a multiple of 4, written in the power basis
// 1, zeta, ..., zeta^(phi(N)-1) with rational coefficients, zeta = exp(2 pi i / N).
// Since i = zeta^(N/4), this is Q(i)(zeta_q) for every q dividing N. Coefficients
// are kept reduced modulo Phi_N, so equality is structural once both sides are
// brought to a common order.
class CyclotomicScalar
{
public:
    // Zero at order 4.
    CyclotomicScalar();
    CyclotomicScalar(const ComplexRational &z);
    CyclotomicScalar(long v) : CyclotomicScalar(ComplexRational(v)) {}

    // zeta_N^k, N is rounded up to lcm(N, 4).
    static CyclotomicScalar root_of_unity(int order, long k);

    int order() const noexcept
    {
        return m_order;
    }
    const std::vector<Rational> &coeffs() const noexcept
    {
        return m_coeffs;
    }

    bool is_zero() const;
    // True if the value lies in Q(i); then as_complex_rational() is exact.
    bool is_complex_rational() const;
    ComplexRational as_complex_rational() const;

    // Same value, represented at order L (L a multiple of order()).
    CyclotomicScalar lift(int order) const;

    // Complex conjugation: zeta -> zeta^-1.
    CyclotomicScalar conj() const;

    std::complex<double> to_complex() const;

    CyclotomicScalar &operator+=(const CyclotomicScalar &o);
    CyclotomicScalar &operator-=(const CyclotomicScalar &o);
    CyclotomicScalar &operator*=(const CyclotomicScalar &o);

    friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar &b)
    {
        return a += b;
    }
    friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar &b)
    {
        return a -= b;
    }
    friend CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar &b)
    {
        return a *= b;
    }
    friend CyclotomicScalar operator-(CyclotomicScalar a);
    friend bool operator==(const CyclotomicScalar &a, const CyclotomicScalar &b);

private:
    CyclotomicScalar(int order, std::vector<Rational> coeffs);
    // Reduce a coefficient vector of arbitrary length (exponents taken mod N) modulo Phi_N.
    void reduce();

    int m_order;
    std::vector<Rational> m_coeffs;
};

// exp(2 pi i theta * exponent) for theta = theta_num / theta_den.
CyclotomicScalar cyclotomic_phase(long theta_num, long theta_den, long exponent);

std::string to_string(const CyclotomicScalar &c);

} // namespace ncres

#endif
