#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace ncres::oracle
{

namespace
{

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int m, std::vector<double> &nodes, std::vector<double> &weights)
{
    nodes.assign(static_cast<std::size_t>(m), 0.0);
    weights.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                break;
            }
        }
        nodes[static_cast<std::size_t>(i)] = z;
        weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

} // namespace

double sphere_quadrature(const std::vector<int> &alpha)
{
    const int n = static_cast<int>(alpha.size());
    const int deg = alpha[0] + alpha[1] + (n == 3 ? alpha[2] : 0);
    const int m_phi = 2 * deg + 8;
    const double dphi = 2.0 * std::numbers::pi / m_phi;
    if (n == 2) {
        double s = 0.0;
        for (int k = 0; k < m_phi; ++k) {
            const double phi = k * dphi;
            s += std::pow(std::cos(phi), alpha[0]) * std::pow(std::sin(phi), alpha[1]);
        }
        return s * dphi;
    }
    if (n != 3) {
        throw std::invalid_argument("sphere_quadrature: n must be 2 or 3");
    }
    std::vector<double> z, w;
    gauss_legendre(deg / 2 + 4, z, w);
    double s = 0.0;
    for (std::size_t a = 0; a < z.size(); ++a) {
        const double rho = std::sqrt(1.0 - z[a] * z[a]);
        double ring = 0.0;
        for (int k = 0; k < m_phi; ++k) {
            const double phi = k * dphi;
            ring += std::pow(rho * std::cos(phi), alpha[0]) * std::pow(rho * std::sin(phi), alpha[1]);
        }
        s += w[a] * ring * dphi * std::pow(z[a], alpha[2]);
    }
    return s;
}

RawSum raw_terms(const HomogeneousComponent &c)
{
    RawSum s;
    for (const auto &[k, v] : c.terms()) {
        s.push_back({v.to_complex(), k.mode, k.alpha, k.npow});
    }
    return s;
}

std::complex<double> eval_raw(const RawSum &s, const std::vector<double> &x, const std::vector<double> &xi)
{
    double r2 = 0.0;
    for (double v : xi) {
        r2 += v * v;
    }
    std::complex<double> sum = 0.0;
    for (const auto &t : s) {
        double phase = 0.0, mono = std::pow(std::sqrt(r2), t.npow);
        for (std::size_t j = 0; j < xi.size(); ++j) {
            phase += t.mode[j] * x[j];
            mono *= std::pow(xi[j], t.alpha[j]);
        }
        sum += t.coeff * std::polar(1.0, phase) * mono;
    }
    return sum;
}

namespace
{

RawSum differentiate(const RawSum &s, std::size_t l)
{
    RawSum out;
    for (const auto &t : s) {
        if (t.alpha[l] > 0) {
            RawTerm a = t;
            a.coeff *= static_cast<double>(t.alpha[l]);
            a.alpha[l] -= 1;
            out.push_back(a);
        }
        if (t.npow != 0) {
            RawTerm b = t;
            b.coeff *= static_cast<double>(t.npow);
            b.alpha[l] += 1;
            b.npow -= 2;
            out.push_back(b);
        }
    }
    return out;
}

void enumerate(std::size_t n, int budget, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (int g = 0; g <= budget; ++g) {
        cur.push_back(g);
        enumerate(n, budget - g, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::map<int, RawSum> brute_force_compose(const ClassicalSymbol &sigma, const ClassicalSymbol &tau, int floor)
{
    const auto n = static_cast<std::size_t>(sigma.dim());
    std::map<int, RawSum> out;
    for (const auto &[ds, cs] : sigma.components()) {
        for (const auto &[dt, ct] : tau.components()) {
            const int budget = ds + dt - floor;
            if (budget < 0) {
                continue;
            }
            std::vector<std::vector<int>> gammas;
            std::vector<int> cur;
            enumerate(n, budget, cur, gammas);
            for (const auto &gamma : gammas) {
                RawSum a = raw_terms(cs);
                double fact = 1.0;
                int g = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    for (int e = 0; e < gamma[j]; ++e) {
                        a = differentiate(a, j);
                        fact *= e + 1;
                    }
                    g += gamma[j];
                }
                auto &target = out[ds + dt - g];
                for (const auto &ta : a) {
                    for (const auto &tb : raw_terms(ct)) {
                        double kg = 1.0;
                        for (std::size_t j = 0; j < n; ++j) {
                            kg *= std::pow(static_cast<double>(tb.mode[j]), gamma[j]);
                        }
                        RawTerm t;
                        t.coeff = ta.coeff * tb.coeff * kg / fact;
                        t.mode = ta.mode;
                        t.alpha = ta.alpha;
                        for (std::size_t j = 0; j < n; ++j) {
                            t.mode[j] += tb.mode[j];
                            t.alpha[j] += tb.alpha[j];
                        }
                        t.npow = ta.npow + tb.npow;
                        target.push_back(t);
                    }
                }
            }
        }
    }
    return out;
}

std::complex<double> fd_partial_xi(const HomogeneousComponent &c, const std::vector<double> &x,
                                   const std::vector<double> &xi, int dir, double h)
{
    auto plus = xi, minus = xi;
    plus[static_cast<std::size_t>(dir)] += h;
    minus[static_cast<std::size_t>(dir)] -= h;
    return (evaluate(c, x, plus) - evaluate(c, x, minus)) / (2.0 * h);
}

std::vector<double> random_point(std::mt19937_64 &rng, int n, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> p(static_cast<std::size_t>(n));
    for (auto &v : p) {
        v = u(rng);
    }
    return p;
}

std::complex<double> quadrature_residue(const HomogeneousComponent &c)
{
    std::complex<double> s = 0.0;
    for (const auto &[k, v] : c.terms()) {
        if (std::any_of(k.mode.begin(), k.mode.end(), [](int m) { return m != 0; })) {
            continue;
        }
        s += v.to_complex() * sphere_quadrature(k.alpha);
    }
    return s * std::pow(2.0 * std::numbers::pi, c.dim());
}

} // namespace ncres::oracle
