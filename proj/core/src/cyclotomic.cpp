#include <ncres/cyclotomic.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace ncres
{

namespace
{

std::vector<long> poly_mul(const std::vector<long> &a, const std::vector<long> &b)
{
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long> &den)
{
    const std::size_t dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        const long c = num[k];
        q[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
            num[k - dd + j] -= c * den[j];
        }
    }
    return q;
}

std::vector<long> compute_cyclotomic(int order)
{
    std::vector<long> num(static_cast<std::size_t>(order) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(order)] = 1;
    std::vector<long> den{1};
    for (int d = 1; d < order; ++d) {
        if (order % d == 0) {
            den = poly_mul(den, cyclotomic_polynomial(d));
        }
    }
    return poly_div_exact(std::move(num), den);
}

int lcm4(int order)
{
    return std::lcm(order, 4);
}

} // namespace

const std::vector<long> &cyclotomic_polynomial(int order)
{
    if (order < 1) {
        throw domain_error("cyclotomic polynomial order must be positive");
    }
    static std::mutex mutex;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(order); it != cache.end()) {
            return it->second;
        }
    }
    // Computed outside the lock: the recursion re-enters this function.
    auto poly = compute_cyclotomic(order);
    std::lock_guard lock(mutex);
    return cache.emplace(order, std::move(poly)).first->second;
}

int euler_phi(int order)
{
    return static_cast<int>(cyclotomic_polynomial(order).size()) - 1;
}

CyclotomicScalar::CyclotomicScalar() : m_order(4), m_coeffs(2, Rational(0)) {}

CyclotomicScalar::CyclotomicScalar(const ComplexRational &z) : m_order(4), m_coeffs{z.re(), z.im()} {}

CyclotomicScalar::CyclotomicScalar(int order, std::vector<Rational> coeffs) : m_order(order), m_coeffs(std::move(coeffs))
{
    reduce();
}

void CyclotomicScalar::reduce()
{
    const auto n = static_cast<std::size_t>(m_order);
    if (m_coeffs.size() > n) {
        for (std::size_t k = n; k < m_coeffs.size(); ++k) {
            m_coeffs[k % n] += m_coeffs[k];
        }
        m_coeffs.resize(n);
    }
    const auto &phi = cyclotomic_polynomial(m_order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = m_coeffs.size(); k-- > deg;) {
        if (sgn(m_coeffs[k]) == 0) {
            continue;
        }
        const Rational c = m_coeffs[k];
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi[j] != 0) {
                m_coeffs[k - deg + j] -= c * phi[j];
            }
        }
    }
    m_coeffs.resize(deg, Rational(0));
}

CyclotomicScalar CyclotomicScalar::root_of_unity(int order, long k)
{
    if (order < 1) {
        throw domain_error("root of unity order must be positive");
    }
    const int n = lcm4(order);
    long e = (k * (n / order)) % n;
    if (e < 0) {
        e += n;
    }
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    c[static_cast<std::size_t>(e)] = 1;
    return CyclotomicScalar(n, std::move(c));
}

bool CyclotomicScalar::is_zero() const
{
    for (const auto &c : m_coeffs) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool CyclotomicScalar::is_complex_rational() const
{
    const CyclotomicScalar i_repr = root_of_unity(m_order, m_order / 4);
    std::size_t k = 1;
    while (k < i_repr.m_coeffs.size() && sgn(i_repr.m_coeffs[k]) == 0) {
        ++k;
    }
    const Rational im = m_coeffs[k] / i_repr.m_coeffs[k];
    const Rational re = m_coeffs[0] - im * i_repr.m_coeffs[0];
    return *this == CyclotomicScalar(ComplexRational(re, im));
}

ComplexRational CyclotomicScalar::as_complex_rational() const
{
    if (!is_complex_rational()) {
        throw domain_error("cyclotomic value " + to_string(*this) + " is not in Q(i)");
    }
    const CyclotomicScalar i_repr = root_of_unity(m_order, m_order / 4);
    std::size_t k = 1;
    while (k < i_repr.m_coeffs.size() && sgn(i_repr.m_coeffs[k]) == 0) {
        ++k;
    }
    const Rational im = m_coeffs[k] / i_repr.m_coeffs[k];
    return ComplexRational(m_coeffs[0] - im * i_repr.m_coeffs[0], im);
}

CyclotomicScalar CyclotomicScalar::lift(int order) const
{
    if (order == m_order) {
        return *this;
    }
    if (order % m_order != 0) {
        throw domain_error("cannot lift order " + std::to_string(m_order) + " to " + std::to_string(order));
    }
    const auto step = static_cast<std::size_t>(order / m_order);
    std::vector<Rational> c((m_coeffs.size() - 1) * step + 1, Rational(0));
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        c[k * step] = m_coeffs[k];
    }
    return CyclotomicScalar(order, std::move(c));
}

CyclotomicScalar CyclotomicScalar::conj() const
{
    const auto n = static_cast<std::size_t>(m_order);
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        c[(n - k) % n] = m_coeffs[k];
    }
    return CyclotomicScalar(m_order, std::move(c));
}

std::complex<double> CyclotomicScalar::to_complex() const
{
    std::complex<double> r{0.0, 0.0};
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        if (sgn(m_coeffs[k]) != 0) {
            r += m_coeffs[k].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / m_order);
        }
    }
    return r;
}

CyclotomicScalar &CyclotomicScalar::operator+=(const CyclotomicScalar &o)
{
    if (o.m_order != m_order) {
        const int l = std::lcm(m_order, o.m_order);
        *this = lift(l);
        return *this += o.lift(l);
    }
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        m_coeffs[k] += o.m_coeffs[k];
    }
    return *this;
}

CyclotomicScalar &CyclotomicScalar::operator-=(const CyclotomicScalar &o)
{
    return *this += -o;
}

CyclotomicScalar &CyclotomicScalar::operator*=(const CyclotomicScalar &o)
{
    if (o.m_order != m_order) {
        const int l = std::lcm(m_order, o.m_order);
        *this = lift(l);
        return *this *= o.lift(l);
    }
    std::vector<Rational> c(2 * m_coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (sgn(m_coeffs[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < o.m_coeffs.size(); ++j) {
            if (sgn(o.m_coeffs[j]) != 0) {
                c[i + j] += m_coeffs[i] * o.m_coeffs[j];
            }
        }
    }
    m_coeffs = std::move(c);
    reduce();
    return *this;
}

CyclotomicScalar operator-(CyclotomicScalar a)
{
    for (auto &c : a.m_coeffs) {
        c = -c;
    }
    return a;
}

bool operator==(const CyclotomicScalar &a, const CyclotomicScalar &b)
{
    if (a.m_order != b.m_order) {
        const int l = std::lcm(a.m_order, b.m_order);
        return a.lift(l).m_coeffs == b.lift(l).m_coeffs;
    }
    return a.m_coeffs == b.m_coeffs;
}

CyclotomicScalar cyclotomic_phase(long theta_num, long theta_den, long exponent)
{
    if (theta_den < 1) {
        throw validation_error("theta denominator must be positive");
    }
    const long g = std::gcd(theta_num, theta_den);
    const long num = theta_num / g;
    const long den = theta_den / g;
    long t = (num % den) * (exponent % den) % den;
    if (t < 0) {
        t += den;
    }
    return CyclotomicScalar::root_of_unity(static_cast<int>(den), t);
}

std::string to_string(const CyclotomicScalar &c)
{
    if (c.is_complex_rational()) {
        return to_string(c.as_complex_rational());
    }
    std::string s;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
        const Rational &q = c.coeffs()[k];
        if (sgn(q) == 0) {
            continue;
        }
        if (!s.empty()) {
            s += sgn(q) < 0 ? " - " : " + ";
        } else if (sgn(q) < 0) {
            s += "-";
        }
        s += to_string(Rational(abs(q)));
        if (k > 0) {
            s += "*z" + std::to_string(c.order()) + "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace ncres
