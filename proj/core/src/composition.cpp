#include <ncres/composition.hpp>

namespace ncres::detail
{

namespace
{

void extend(std::vector<MultiIndex> &out, MultiIndex &cur, std::size_t pos, int remaining)
{
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        extend(out, cur, pos + 1, remaining - v);
    }
}

} // namespace

const std::vector<MultiIndex> &multi_indices_up_to(int n, int max_order)
{
    thread_local std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
    if (auto it = cache.find({n, max_order}); it != cache.end()) {
        return it->second;
    }
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(n), 0);
    for (int g = 0; g <= max_order; ++g) {
        extend(out, cur, 0, g);
    }
    return cache.emplace(std::pair{n, max_order}, std::move(out)).first->second;
}

Rational inverse_factorial(const MultiIndex &gamma)
{
    mpz_class denom = 1;
    for (int g : gamma) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(g));
        denom *= f;
    }
    Rational q(mpz_class(1), denom);
    q.canonicalize();
    return q;
}

} // namespace ncres::detail
