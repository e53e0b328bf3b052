#include <ncres/random_symbol.hpp>

#include <algorithm>
#include <random>

namespace ncres
{

namespace
{

// Draws are taken from mt19937_64 directly; the standard distributions are not
// reproducible across library implementations.
class draw
{
public:
    explicit draw(std::uint64_t seed) : m_rng(seed) {}

    int uniform(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(m_rng() % span);
    }
    bool chance(int num, int den)
    {
        return uniform(0, den - 1) < num;
    }

    Rational small_rational()
    {
        int num = 0;
        while (num == 0) {
            num = uniform(-4, 4);
        }
        return make_rational(num, uniform(1, 3));
    }

    ComplexRational coefficient()
    {
        ComplexRational c(small_rational());
        if (chance(1, 4)) {
            c += ComplexRational(Rational(0), small_rational());
        }
        return c;
    }

private:
    std::mt19937_64 m_rng;
};

void check_range(int v, int lo, int hi, const char *name)
{
    if (v < lo || v > hi) {
        throw validation_error(std::string("random_symbol: ") + name + " must lie in [" + std::to_string(lo) + ", "
                               + std::to_string(hi) + "], got " + std::to_string(v));
    }
}

ClassicalSymbol generate(std::uint64_t seed, const RandomSymbolParams &p)
{
    check_range(p.dim, 2, 6, "dim");
    check_range(p.order, -12, 12, "order");
    check_range(p.depth, 0, 16, "depth");
    check_range(p.max_mode, 0, 8, "max_mode");
    check_range(p.max_alpha, 0, 8, "max_alpha");
    check_range(p.max_terms, 1, 8, "max_terms");
    if (p.theta && p.dim != 2) {
        throw validation_error("random_symbol: noncommutative symbols require dim 2");
    }

    draw rng(seed);
    const int n = p.dim;
    ClassicalSymbol s(n, p.order, p.order - p.depth);
    for (int d = p.order; d >= p.order - p.depth; --d) {
        TermMap<ComplexRational> terms;
        const int count = rng.uniform(1, p.max_terms);
        for (int t = 0; t < count; ++t) {
            TermKey k;
            k.mode.assign(static_cast<std::size_t>(n), 0);
            k.alpha.assign(static_cast<std::size_t>(n), 0);
            // Keep a good share of x-independent terms so residues are often nonzero.
            if (!rng.chance(1, 3)) {
                for (auto &m : k.mode) {
                    m = rng.uniform(-p.max_mode, p.max_mode);
                }
            }
            const int a = rng.uniform(0, p.max_alpha);
            for (int j = 0; j < a; ++j) {
                k.alpha[static_cast<std::size_t>(rng.uniform(0, n - 1))] += 1;
            }
            k.npow = d - a;
            detail::accumulate(terms, k, rng.coefficient());
        }
        s.set_component(HomogeneousComponent(n, d, terms));
    }
    return s;
}

} // namespace

ClassicalSymbol random_classical_symbol(std::uint64_t seed, const RandomSymbolParams &params)
{
    RandomSymbolParams p = params;
    p.theta.reset();
    return generate(seed, p);
}

NCSymbol random_nc_symbol(std::uint64_t seed, const RandomSymbolParams &params)
{
    RandomSymbolParams p = params;
    const Rational theta = params.theta.value_or(Rational(0));
    p.theta = theta;
    return from_euclidean(generate(seed, p), ThetaParameter::exact(theta));
}

AnySymbol random_symbol(std::uint64_t seed, const RandomSymbolParams &params)
{
    if (params.theta) {
        return random_nc_symbol(seed, params);
    }
    return random_classical_symbol(seed, params);
}

NCPolynomial random_nc_element(std::uint64_t seed, const ThetaParameter &theta, int max_mode, int max_terms)
{
    draw rng(seed);
    NCPolynomial a(theta);
    const int count = rng.uniform(1, max_terms);
    for (int t = 0; t < count; ++t) {
        const int m = rng.uniform(-max_mode, max_mode);
        const int n = rng.uniform(-max_mode, max_mode);
        a.add(m, n, CyclotomicScalar(rng.coefficient()));
    }
    return a;
}

ResiduePair random_residue_pair(std::uint64_t seed, int dim, int max_terms)
{
    draw rng(seed);
    RandomSymbolParams p;
    p.dim = dim;
    p.max_mode = 3;
    p.max_terms = max_terms;
    const int ma = rng.uniform(-1, 2);
    const int mb = rng.uniform(-1, 2);
    // both compositions complete down to -n
    p.depth = std::max(0, ma + mb + dim);
    p.order = ma;
    ClassicalSymbol a = random_classical_symbol(seed * 2 + 1, p);
    p.order = mb;
    ClassicalSymbol b = random_classical_symbol(seed * 2 + 2, p);
    return {std::move(a), std::move(b)};
}

NCResiduePair random_nc_residue_pair(std::uint64_t seed, const Rational &theta, int max_terms)
{
    auto [a, b] = random_residue_pair(seed, 2, max_terms);
    const auto t = ThetaParameter::exact(theta);
    return {from_euclidean(a, t), from_euclidean(b, t)};
}

} // namespace ncres
