#ifndef NCRES_COMPOSITION_HPP
#define NCRES_COMPOSITION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <ncres/symbol_core.hpp>

namespace ncres
{

namespace detail
{

// All multi-indices of length n with |gamma| <= max_order, in graded order.
const std::vector<MultiIndex> &multi_indices_up_to(int n, int max_order);

Rational inverse_factorial(const MultiIndex &gamma);

// Memoized d_xi^gamma of one component.
template <typename C>
class xi_derivative_cache
{
public:
    explicit xi_derivative_cache(const HomogeneousComponentT<C> &base)
    {
        m_cache.emplace(MultiIndex(static_cast<std::size_t>(base.dim()), 0), base);
    }

    const HomogeneousComponentT<C> &get(const MultiIndex &gamma)
    {
        if (auto it = m_cache.find(gamma); it != m_cache.end()) {
            return it->second;
        }
        MultiIndex parent = gamma;
        const auto j = static_cast<std::size_t>(std::find_if(parent.begin(), parent.end(), [](int g) { return g > 0; })
                                                - parent.begin());
        parent[j] -= 1;
        const auto &p = get(parent);
        auto d = p.is_zero() ? HomogeneousComponentT<C>(p.dim(), p.degree() - 1) : partial_xi(p, static_cast<int>(j));
        return m_cache.emplace(gamma, std::move(d)).first->second;
    }

private:
    std::map<MultiIndex, HomogeneousComponentT<C>> m_cache;
};

} // namespace detail

// Truncated product expansion
//   lambda ~ sum_gamma 1/gamma! (d_xi^gamma sigma)(D_x^gamma tau),
// with the coefficients of sigma on the left. The result is complete for every
// degree >= max(floor(sigma) + order(tau), order(sigma) + floor(tau)).
template <typename C, typename Twist = commutative_twist<C>>
ClassicalSymbolT<C> compose_expansion(const ClassicalSymbolT<C> &sigma, const ClassicalSymbolT<C> &tau,
                                      const Twist &twist = {})
{
    if (sigma.dim() != tau.dim()) {
        throw validation_error("compose: dimension mismatch (" + std::to_string(sigma.dim()) + " vs "
                               + std::to_string(tau.dim()) + ")");
    }
    const int n = sigma.dim();
    const int order = sigma.order() + tau.order();
    const int floor = std::max(sigma.trusted_floor() + tau.order(), sigma.order() + tau.trusted_floor());
    std::map<int, TermMap<C>, std::greater<>> acc;

    for (const auto &[ds, cs] : sigma.components()) {
        detail::xi_derivative_cache<C> derivs(cs);
        for (const auto &[dt, ct] : tau.components()) {
            const int max_gamma = ds + dt - floor;
            if (max_gamma < 0) {
                continue;
            }
            for (const auto &gamma : detail::multi_indices_up_to(n, max_gamma)) {
                const auto &a = derivs.get(gamma);
                if (a.is_zero()) {
                    continue;
                }
                int g = 0;
                for (int v : gamma) {
                    g += v;
                }
                const C weight = scalar_traits<C>::from(ComplexRational(detail::inverse_factorial(gamma)));
                auto &target = acc[ds + dt - g];
                for (const auto &[kt, ct_coeff] : ct.terms()) {
                    // D_x^gamma e^{ik.x} = k^gamma e^{ik.x}
                    Rational kg(1);
                    for (std::size_t j = 0; j < gamma.size(); ++j) {
                        for (int e = 0; e < gamma[j]; ++e) {
                            kg *= kt.mode[j];
                        }
                    }
                    if (sgn(kg) == 0) {
                        continue;
                    }
                    const C bc = ct_coeff * weight * scalar_traits<C>::from(ComplexRational(kg));
                    for (const auto &[ka, ca] : a.terms()) {
                        TermKey k{detail::add_index(ka.mode, kt.mode), detail::add_index(ka.alpha, kt.alpha),
                                  ka.npow + kt.npow};
                        C c = ca * bc;
                        if (auto ph = twist(ka.mode, kt.mode)) {
                            c = c * *ph;
                        }
                        detail::accumulate(target, k, c);
                    }
                }
            }
        }
    }

    ClassicalSymbolT<C> result(n, order, floor);
    for (const auto &[d, terms] : acc) {
        if (d <= order && d >= floor) {
            result.set_component(HomogeneousComponentT<C>(n, d, terms));
        }
    }
    return result;
}

} // namespace ncres

#endif
