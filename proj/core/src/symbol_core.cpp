#include <ncres/symbol_core.hpp>

namespace ncres
{

namespace detail
{

const std::map<MultiIndex, long> &norm_square_power(int n, int k)
{
    thread_local std::map<std::pair<int, int>, std::map<MultiIndex, long>> cache;
    if (auto it = cache.find({n, k}); it != cache.end()) {
        return it->second;
    }
    std::map<MultiIndex, long> result;
    if (k == 0) {
        result.emplace(MultiIndex(static_cast<std::size_t>(n), 0), 1);
    } else {
        for (const auto &[alpha, c] : norm_square_power(n, k - 1)) {
            for (int j = 0; j < n; ++j) {
                MultiIndex a = alpha;
                a[static_cast<std::size_t>(j)] += 2;
                result[a] += c;
            }
        }
    }
    return cache.emplace(std::pair{n, k}, std::move(result)).first->second;
}

} // namespace detail

ComplexRational TrigPolynomial::coeff(const MultiIndex &mode) const
{
    auto it = m_coeffs.find(mode);
    return it == m_coeffs.end() ? ComplexRational{} : it->second;
}

void TrigPolynomial::add(const MultiIndex &mode, const ComplexRational &c)
{
    if (static_cast<int>(mode.size()) != m_dim) {
        throw validation_error("trigonometric polynomial mode has wrong dimension");
    }
    detail::accumulate(m_coeffs, mode, c);
}

std::vector<HomogeneousComponent> euler_antiderivatives(const HomogeneousComponent &c)
{
    const int n = c.dim();
    const int d = c.degree();
    if (d == -n) {
        throw critical_degree_error("euler_antiderivatives: degree " + std::to_string(d)
                                    + " equals -n; the Euler construction degenerates");
    }
    const ComplexRational inv(make_rational(1, n + d));
    std::vector<HomogeneousComponent> h;
    h.reserve(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        TermMap<ComplexRational> t;
        for (const auto &[k, coeff] : c.terms()) {
            TermKey kk = k;
            kk.alpha[static_cast<std::size_t>(l)] += 1;
            t.emplace(std::move(kk), coeff * inv);
        }
        h.emplace_back(n, d + 1, t);
    }
    return h;
}

TrigPolynomial sphere_average(const HomogeneousComponent &c)
{
    const int n = c.dim();
    if (c.degree() != -n) {
        throw validation_error("sphere_average: component has degree " + std::to_string(c.degree()) + ", expected "
                               + std::to_string(-n));
    }
    const PiGradedScalar measure = sphere_measure(n);
    TrigPolynomial r(n);
    for (const auto &[k, coeff] : c.terms()) {
        const PiGradedScalar mean = sphere_monomial_integral(k.alpha) / measure;
        if (mean.is_zero()) {
            continue;
        }
        if (mean.twice_exponent() != 0) {
            throw domain_error("sphere_average: unexpected pi factor");
        }
        r.add(k.mode, coeff * mean.coeff());
    }
    return r;
}

HomogeneousComponent radial_component(const TrigPolynomial &r)
{
    const int n = r.dim();
    TermMap<ComplexRational> t;
    for (const auto &[mode, c] : r.coeffs()) {
        t.emplace(TermKey{mode, MultiIndex(static_cast<std::size_t>(n), 0), -n}, c);
    }
    return HomogeneousComponent(n, -n, t);
}

HomogeneousComponent make_component(int dim, const ComplexRational &coeff, MultiIndex mode, MultiIndex alpha, int npow)
{
    TermKey k{std::move(mode), std::move(alpha), npow};
    const int d = k.homogeneity();
    TermMap<ComplexRational> t;
    t.emplace(std::move(k), coeff);
    return HomogeneousComponent(dim, d, t);
}

ClassicalSymbol xi_symbol(int dim, int dir, int floor)
{
    ClassicalSymbol s(dim, 1, std::min(floor, 1));
    MultiIndex alpha(static_cast<std::size_t>(dim), 0);
    alpha.at(static_cast<std::size_t>(dir)) = 1;
    s.set_component(make_component(dim, 1, MultiIndex(static_cast<std::size_t>(dim), 0), alpha, 0));
    return s;
}

ClassicalSymbol exp_symbol(int dim, int dir, int floor)
{
    ClassicalSymbol s(dim, 0, std::min(floor, 0));
    MultiIndex mode(static_cast<std::size_t>(dim), 0);
    mode.at(static_cast<std::size_t>(dir)) = 1;
    s.set_component(make_component(dim, 1, mode, MultiIndex(static_cast<std::size_t>(dim), 0), 0));
    return s;
}

} // namespace ncres
