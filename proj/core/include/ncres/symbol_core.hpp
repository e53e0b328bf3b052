#ifndef NCRES_SYMBOL_CORE_HPP
#define NCRES_SYMBOL_CORE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <ncres/errors.hpp>
#include <ncres/exact_scalar.hpp>
#include <ncres/scalar_traits.hpp>

namespace ncres
{

using MultiIndex = std::vector<int>;

// One term coeff * e^{i mode.x} * xi^alpha * |xi|^npow. On the noncommutative
// torus the mode (m, n) stands for the monomial U^m V^n.
struct TermKey {
    MultiIndex mode;
    MultiIndex alpha;
    int npow = 0;

    int homogeneity() const
    {
        int d = npow;
        for (int a : alpha) {
            d += a;
        }
        return d;
    }

    friend auto operator<=>(const TermKey &, const TermKey &) = default;
};

template <typename C>
using TermMap = std::map<TermKey, C>;

// Coefficient of U^a V^b * U^c V^d relative to U^{a+c} V^{b+d}; nullopt means 1.
template <typename C>
struct commutative_twist {
    std::optional<C> operator()(const MultiIndex &, const MultiIndex &) const
    {
        return std::nullopt;
    }
};

namespace detail
{

template <typename C>
C from_int(long v)
{
    return scalar_traits<C>::from(ComplexRational(v));
}

template <typename Map, typename C>
void accumulate(Map &m, const typename Map::key_type &k, const C &c)
{
    if (scalar_traits<C>::is_zero(c)) {
        return;
    }
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (scalar_traits<C>::is_zero(it->second)) {
            m.erase(it);
        }
    }
}

// Expansion of (xi_1^2 + ... + xi_n^2)^k.
const std::map<MultiIndex, long> &norm_square_power(int n, int k);

// |xi|^p from |xi|^2; exact powers of r2 for even p.
inline double norm_power(double r2, int p)
{
    return p % 2 == 0 ? std::pow(r2, p / 2) : std::pow(std::sqrt(r2), p);
}

inline MultiIndex add_index(const MultiIndex &a, const MultiIndex &b)
{
    MultiIndex r(a);
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] += b[j];
    }
    return r;
}

// Exact quotient of p by (xi_1^2 + ... + xi_n^2), or nullopt if it does not divide.
// Division by a polynomial monic in xi_1^2: reduce every term with alpha_1 >= 2.
template <typename C>
std::optional<std::map<MultiIndex, C>> divide_by_norm_square(std::map<MultiIndex, C> r, int n)
{
    std::map<MultiIndex, C> q;
    while (!r.empty()) {
        // Lexicographic order: the last key carries the largest exponent of xi_1.
        auto last = std::prev(r.end());
        if (last->first[0] < 2) {
            break;
        }
        const C c = last->second;
        MultiIndex beta = last->first;
        beta[0] -= 2;
        accumulate(q, beta, c);
        const C neg = -c;
        for (int j = 0; j < n; ++j) {
            MultiIndex t = beta;
            t[static_cast<std::size_t>(j)] += 2;
            accumulate(r, t, neg);
        }
    }
    if (!r.empty()) {
        return std::nullopt;
    }
    return q;
}

// Canonical form: per (mode, parity of npow) class, a single |xi| power p and a
// polynomial not divisible by |xi|^2. Inexact scalars only get like terms merged.
template <typename C>
TermMap<C> canonical_terms(int n, const TermMap<C> &raw)
{
    if constexpr (!scalar_traits<C>::exact) {
        TermMap<C> out;
        for (const auto &[k, c] : raw) {
            accumulate(out, k, c);
        }
        return out;
    } else {
        std::map<std::pair<MultiIndex, int>, std::vector<const typename TermMap<C>::value_type *>> classes;
        for (const auto &entry : raw) {
            if (scalar_traits<C>::is_zero(entry.second)) {
                continue;
            }
            const int parity = ((entry.first.npow % 2) + 2) % 2;
            classes[{entry.first.mode, parity}].push_back(&entry);
        }
        TermMap<C> out;
        for (const auto &[cls, members] : classes) {
            int p = members.front()->first.npow;
            for (const auto *m : members) {
                p = std::min(p, m->first.npow);
            }
            std::map<MultiIndex, C> poly;
            for (const auto *m : members) {
                const int k = (m->first.npow - p) / 2;
                if (k == 0) {
                    accumulate(poly, m->first.alpha, m->second);
                    continue;
                }
                for (const auto &[beta, mult] : norm_square_power(n, k)) {
                    accumulate(poly, add_index(m->first.alpha, beta), m->second * from_int<C>(mult));
                }
            }
            while (!poly.empty()) {
                auto q = divide_by_norm_square(poly, n);
                if (!q) {
                    break;
                }
                poly = std::move(*q);
                p += 2;
            }
            for (auto &[alpha, c] : poly) {
                out.emplace(TermKey{cls.first, alpha, p}, std::move(c));
            }
        }
        return out;
    }
}

} // namespace detail

// A function on T^n x (R^n \ 0), positively homogeneous of a fixed degree in xi,
// kept in canonical form so that structural equality is equality of functions.
template <typename C>
class HomogeneousComponentT
{
public:
    using coeff_type = C;

    HomogeneousComponentT(int dim, int degree) : m_dim(dim), m_degree(degree)
    {
        if (dim < 1) {
            throw validation_error("dimension must be positive");
        }
    }

    HomogeneousComponentT(int dim, int degree, const TermMap<C> &terms) : HomogeneousComponentT(dim, degree)
    {
        for (const auto &[k, c] : terms) {
            if (static_cast<int>(k.alpha.size()) != dim || static_cast<int>(k.mode.size()) != dim) {
                throw validation_error("term has wrong number of variables for dimension " + std::to_string(dim));
            }
            for (int a : k.alpha) {
                if (a < 0) {
                    throw validation_error("negative xi exponent");
                }
            }
            if (k.homogeneity() != degree) {
                throw validation_error("term of degree " + std::to_string(k.homogeneity())
                                       + " in component of degree " + std::to_string(degree));
            }
        }
        m_terms = detail::canonical_terms(dim, terms);
    }

    int dim() const noexcept
    {
        return m_dim;
    }
    int degree() const noexcept
    {
        return m_degree;
    }
    const TermMap<C> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    friend bool operator==(const HomogeneousComponentT &a, const HomogeneousComponentT &b)
    {
        return a.m_dim == b.m_dim && a.m_degree == b.m_degree && a.m_terms == b.m_terms;
    }

private:
    int m_dim;
    int m_degree;
    TermMap<C> m_terms;
};

template <typename C>
HomogeneousComponentT<C> canonicalize(const HomogeneousComponentT<C> &c)
{
    return HomogeneousComponentT<C>(c.dim(), c.degree(), c.terms());
}

template <typename C>
HomogeneousComponentT<C> component_add(const HomogeneousComponentT<C> &a, const HomogeneousComponentT<C> &b)
{
    if (a.dim() != b.dim()) {
        throw validation_error("component_add: dimension mismatch");
    }
    if (a.degree() != b.degree()) {
        throw validation_error("component_add: degree mismatch (" + std::to_string(a.degree()) + " vs "
                               + std::to_string(b.degree()) + ")");
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.is_zero()) {
        return b;
    }
    TermMap<C> t = a.terms();
    for (const auto &[k, c] : b.terms()) {
        detail::accumulate(t, k, c);
    }
    return HomogeneousComponentT<C>(a.dim(), a.degree(), t);
}

template <typename C>
HomogeneousComponentT<C> component_scale(const C &s, const HomogeneousComponentT<C> &a)
{
    TermMap<C> t;
    if (!scalar_traits<C>::is_zero(s)) {
        for (const auto &[k, c] : a.terms()) {
            t.emplace(k, s * c);
        }
    }
    return HomogeneousComponentT<C>(a.dim(), a.degree(), t);
}

template <typename C>
HomogeneousComponentT<C> component_neg(const HomogeneousComponentT<C> &a)
{
    return component_scale(detail::from_int<C>(-1), a);
}

template <typename C>
HomogeneousComponentT<C> component_sub(const HomogeneousComponentT<C> &a, const HomogeneousComponentT<C> &b)
{
    return component_add(a, component_neg(b));
}

// Pointwise product; coefficients of a stand on the left.
template <typename C, typename Twist = commutative_twist<C>>
HomogeneousComponentT<C> component_mul(const HomogeneousComponentT<C> &a, const HomogeneousComponentT<C> &b,
                                       const Twist &twist = {})
{
    if (a.dim() != b.dim()) {
        throw validation_error("component_mul: dimension mismatch");
    }
    const int deg = a.degree() + b.degree();
    TermMap<C> t;
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            TermKey k{detail::add_index(ka.mode, kb.mode), detail::add_index(ka.alpha, kb.alpha), ka.npow + kb.npow};
            C c = ca * cb;
            if (auto ph = twist(ka.mode, kb.mode)) {
                c = c * *ph;
            }
            detail::accumulate(t, k, c);
        }
    }
    return HomogeneousComponentT<C>(a.dim(), deg, t);
}

// d/d xi_dir, dir 0-based.
template <typename C>
HomogeneousComponentT<C> partial_xi(const HomogeneousComponentT<C> &a, int dir)
{
    if (dir < 0 || dir >= a.dim()) {
        throw validation_error("partial_xi: direction out of range");
    }
    const auto l = static_cast<std::size_t>(dir);
    TermMap<C> t;
    for (const auto &[k, c] : a.terms()) {
        // d(xi^alpha |xi|^p) = alpha_l xi^{alpha - e_l} |xi|^p + p xi^{alpha + e_l} |xi|^{p-2}
        if (k.alpha[l] > 0) {
            TermKey d1 = k;
            d1.alpha[l] -= 1;
            detail::accumulate(t, d1, c * detail::from_int<C>(k.alpha[l]));
        }
        if (k.npow != 0) {
            TermKey d2 = k;
            d2.alpha[l] += 1;
            d2.npow -= 2;
            detail::accumulate(t, d2, c * detail::from_int<C>(k.npow));
        }
    }
    return HomogeneousComponentT<C>(a.dim(), a.degree() - 1, t);
}

// D_{x_dir} = -i d/dx_dir; multiplies the mode-k term by k_dir. On the
// noncommutative torus this is the derivation delta_{dir+1}.
template <typename C>
HomogeneousComponentT<C> deriv_x(const HomogeneousComponentT<C> &a, int dir)
{
    if (dir < 0 || dir >= a.dim()) {
        throw validation_error("deriv_x: direction out of range");
    }
    const auto l = static_cast<std::size_t>(dir);
    TermMap<C> t;
    for (const auto &[k, c] : a.terms()) {
        if (k.mode[l] != 0) {
            t.emplace(k, c * detail::from_int<C>(k.mode[l]));
        }
    }
    return HomogeneousComponentT<C>(a.dim(), a.degree(), t);
}

// Floating value at (x, xi), xi != 0.
template <typename C>
std::complex<double> evaluate(const HomogeneousComponentT<C> &a, std::span<const double> x, std::span<const double> xi)
{
    double r2 = 0.0;
    for (double v : xi) {
        r2 += v * v;
    }
    std::complex<double> sum{0.0, 0.0};
    for (const auto &[k, c] : a.terms()) {
        double phase = 0.0;
        double mono = detail::norm_power(r2, k.npow);
        for (std::size_t j = 0; j < k.alpha.size(); ++j) {
            phase += k.mode[j] * x[j];
            mono *= std::pow(xi[j], k.alpha[j]);
        }
        sum += scalar_traits<C>::to_complex(c) * std::polar(1.0, phase) * mono;
    }
    return sum;
}

// Finite expansion sigma_m + sigma_{m-1} + ..., asserted complete for every
// degree >= trusted_floor. Degrees without a stored component are zero.
template <typename C>
class ClassicalSymbolT
{
public:
    using component_type = HomogeneousComponentT<C>;
    using component_map = std::map<int, component_type, std::greater<>>;

    ClassicalSymbolT(int dim, int order, int trusted_floor) : m_dim(dim), m_order(order), m_floor(trusted_floor)
    {
        if (dim < 1) {
            throw validation_error("dimension must be positive");
        }
    }

    int dim() const noexcept
    {
        return m_dim;
    }
    int order() const noexcept
    {
        return m_order;
    }
    int trusted_floor() const noexcept
    {
        return m_floor;
    }
    const component_map &components() const noexcept
    {
        return m_components;
    }
    bool is_zero() const noexcept
    {
        return m_components.empty();
    }

    component_type component(int degree) const
    {
        auto it = m_components.find(degree);
        return it == m_components.end() ? component_type(m_dim, degree) : it->second;
    }

    // Replaces the component at c.degree(); the degree must lie in [trusted_floor, order].
    void set_component(component_type c)
    {
        check_component(c);
        const int d = c.degree();
        if (c.is_zero()) {
            m_components.erase(d);
        } else {
            m_components.insert_or_assign(d, std::move(c));
        }
    }

    void add_to_component(const component_type &c)
    {
        check_component(c);
        set_component(component_add(component(c.degree()), c));
    }

    // Drops everything below new_floor (new_floor >= trusted_floor()).
    ClassicalSymbolT truncated(int new_floor) const
    {
        ClassicalSymbolT r(m_dim, m_order, std::max(new_floor, m_floor));
        for (const auto &[d, c] : m_components) {
            if (d >= r.m_floor) {
                r.m_components.emplace(d, c);
            }
        }
        return r;
    }

    friend bool operator==(const ClassicalSymbolT &a, const ClassicalSymbolT &b)
    {
        return a.m_dim == b.m_dim && a.m_order == b.m_order && a.m_floor == b.m_floor
               && a.m_components == b.m_components;
    }

private:
    void check_component(const component_type &c) const
    {
        if (c.dim() != m_dim) {
            throw validation_error("component dimension does not match symbol");
        }
        if (c.degree() > m_order || c.degree() < m_floor) {
            throw validation_error("component degree " + std::to_string(c.degree()) + " outside [" + std::to_string(m_floor)
                                   + ", " + std::to_string(m_order) + "]");
        }
    }

    int m_dim;
    int m_order;
    int m_floor;
    component_map m_components;
};

// Componentwise equality for every degree >= floor.
template <typename C>
bool agree_down_to(const ClassicalSymbolT<C> &a, const ClassicalSymbolT<C> &b, int floor)
{
    if (a.dim() != b.dim()) {
        return false;
    }
    const int top = std::max(a.order(), b.order());
    for (int d = top; d >= floor; --d) {
        if (!(a.component(d).terms() == b.component(d).terms())) {
            return false;
        }
    }
    return true;
}

template <typename C>
ClassicalSymbolT<C> symbol_add(const ClassicalSymbolT<C> &a, const ClassicalSymbolT<C> &b)
{
    if (a.dim() != b.dim()) {
        throw validation_error("symbol_add: dimension mismatch");
    }
    ClassicalSymbolT<C> r(a.dim(), std::max(a.order(), b.order()), std::max(a.trusted_floor(), b.trusted_floor()));
    for (const auto *s : {&a, &b}) {
        for (const auto &[d, c] : s->components()) {
            if (d >= r.trusted_floor()) {
                r.add_to_component(c);
            }
        }
    }
    return r;
}

template <typename C>
ClassicalSymbolT<C> symbol_scale(const C &s, const ClassicalSymbolT<C> &a)
{
    ClassicalSymbolT<C> r(a.dim(), a.order(), a.trusted_floor());
    for (const auto &[d, c] : a.components()) {
        r.set_component(component_scale(s, c));
    }
    return r;
}

template <typename C>
ClassicalSymbolT<C> symbol_sub(const ClassicalSymbolT<C> &a, const ClassicalSymbolT<C> &b)
{
    return symbol_add(a, symbol_scale(detail::from_int<C>(-1), b));
}

template <typename C>
ClassicalSymbolT<C> symbol_deriv_x(const ClassicalSymbolT<C> &a, int dir)
{
    ClassicalSymbolT<C> r(a.dim(), a.order(), a.trusted_floor());
    for (const auto &[d, c] : a.components()) {
        r.set_component(deriv_x(c, dir));
    }
    return r;
}

template <typename C>
ClassicalSymbolT<C> symbol_partial_xi(const ClassicalSymbolT<C> &a, int dir)
{
    ClassicalSymbolT<C> r(a.dim(), a.order() - 1, a.trusted_floor() - 1);
    for (const auto &[d, c] : a.components()) {
        r.set_component(partial_xi(c, dir));
    }
    return r;
}

using HomogeneousComponent = HomogeneousComponentT<ComplexRational>;
using ClassicalSymbol = ClassicalSymbolT<ComplexRational>;

// Finite Fourier sum on T^n.
class TrigPolynomial
{
public:
    explicit TrigPolynomial(int dim) : m_dim(dim) {}

    int dim() const noexcept
    {
        return m_dim;
    }
    const std::map<MultiIndex, ComplexRational> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    ComplexRational coeff(const MultiIndex &mode) const;
    void add(const MultiIndex &mode, const ComplexRational &c);
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }

    friend bool operator==(const TrigPolynomial &, const TrigPolynomial &) = default;

private:
    int m_dim;
    std::map<MultiIndex, ComplexRational> m_coeffs;
};

// h_l = xi_l * c / (n + d), so that sum_l d/dxi_l h_l = c. Throws critical_degree_error at d = -n.
std::vector<HomogeneousComponent> euler_antiderivatives(const HomogeneousComponent &c);

// Mean over the unit sphere of a degree -n component, mode by mode.
TrigPolynomial sphere_average(const HomogeneousComponent &c);

// r(x) |xi|^{-n} as a component.
HomogeneousComponent radial_component(const TrigPolynomial &r);

// Single-term helpers.
HomogeneousComponent make_component(int dim, const ComplexRational &coeff, MultiIndex mode, MultiIndex alpha, int npow);
// The exact symbol xi_dir (order 1), complete down to floor.
ClassicalSymbol xi_symbol(int dim, int dir, int floor);
// The exact symbol e^{i x_dir} (order 0), complete down to floor.
ClassicalSymbol exp_symbol(int dim, int dir, int floor);

} // namespace ncres

#endif
