#include <isobar/sampling.hpp>

namespace isobar::sampling
{

Rational random_rational(Rng &rng, int max_num, int max_den, bool nonzero)
{
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    int p = num(rng);
    while (nonzero && p == 0) {
        p = num(rng);
    }
    return make_rational(p, den(rng));
}

WeightVector random_weight(Rng &rng, int length, bool nonzero)
{
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        w.push_back(random_rational(rng, 9, 9, nonzero));
    }
    return WeightVector(std::move(w));
}

IsobaricPolynomial random_polynomial(Rng &rng, int n, int k)
{
    std::bernoulli_distribution keep(0.5);
    IsobaricPolynomial p(n);
    for (const auto &alpha : exponents_of_level(n, k)) {
        if (keep(rng)) {
            p.add_term(alpha, random_rational(rng));
        }
    }
    return p;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept
{
    // splitmix64 finalizer
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace isobar::sampling
