#include <isobar/arith.hpp>

#include <algorithm>
#include <string>

#include <isobar/errors.hpp>
#include <isobar/exponent.hpp>
#include <isobar/roots.hpp>
#include <isobar/wip.hpp>

namespace isobar
{

LocalSequence::LocalSequence(std::vector<Rational> values) : values_(std::move(values))
{
    if (values_.empty() || values_.front() != 1) {
        throw domain_error("a multiplicative function takes the value 1 at 1");
    }
}

LocalSequence LocalSequence::identity(int top_level)
{
    if (top_level < 0) {
        throw domain_error("top level must be non-negative");
    }
    std::vector<Rational> v(static_cast<std::size_t>(top_level) + 1, Rational(0));
    v.front() = 1;
    return LocalSequence(std::move(v));
}

LocalSequence positive_values(const CoreFunctionSpec &spec, int top_level)
{
    if (top_level < 0) {
        throw domain_error("top level must be non-negative");
    }
    std::vector<Rational> f(static_cast<std::size_t>(top_level) + 1, Rational(0));
    f[0] = 1;
    for (int n = 1; n <= top_level; ++n) {
        Rational v = 0;
        for (int j = 1; j <= std::min(n, spec.degree()); ++j) {
            v += spec.a[static_cast<std::size_t>(j - 1)] * f[static_cast<std::size_t>(n - j)];
        }
        f[static_cast<std::size_t>(n)] = std::move(v);
    }
    return LocalSequence(std::move(f));
}

LocalSequence negative_values(const CoreFunctionSpec &spec)
{
    return negative_values(spec, spec.degree());
}

LocalSequence negative_values(const CoreFunctionSpec &spec, int top_level)
{
    if (top_level < 0) {
        throw domain_error("top level must be non-negative");
    }
    std::vector<Rational> v(static_cast<std::size_t>(top_level) + 1, Rational(0));
    v[0] = 1;
    for (int j = 1; j <= std::min(top_level, spec.degree()); ++j) {
        v[static_cast<std::size_t>(j)] = -spec.a[static_cast<std::size_t>(j - 1)];
    }
    return LocalSequence(std::move(v));
}

LocalSequence dirichlet_convolve(const LocalSequence &f, const LocalSequence &g)
{
    if (f.top_level() != g.top_level()) {
        throw shape_error("convolution of local sequences of lengths " + std::to_string(f.top_level() + 1) + " and "
                          + std::to_string(g.top_level() + 1));
    }
    std::vector<Rational> h(static_cast<std::size_t>(f.top_level()) + 1, Rational(0));
    for (int n = 0; n <= f.top_level(); ++n) {
        for (int i = 0; i <= n; ++i) {
            h[static_cast<std::size_t>(n)] += f[i] * g[n - i];
        }
    }
    return LocalSequence(std::move(h));
}

namespace
{

// s! / (prod a_i! (s - |alpha|)!), zero when |alpha| > s.
Integer power_multinomial(const ExponentVector &alpha, int s)
{
    const int depth = alpha.depth();
    if (depth > s) {
        return 0;
    }
    return factorial(s) / (factorial_product(alpha) * factorial(s - depth));
}

void check_power_args(int k, int s, int n)
{
    if (s < 0) {
        throw domain_error("conv_power_int needs s >= 0");
    }
    if (n < 0) {
        throw domain_error("conv_power_int needs n >= 0");
    }
    if (k < 0) {
        throw domain_error("negative support length");
    }
}

} // namespace

Rational conv_power_int(std::span<const Rational> t, int s, int n)
{
    const int k = static_cast<int>(t.size());
    check_power_args(k, s, n);
    if (n == 0) {
        return 1;
    }
    if (k == 0) {
        return 0;
    }
    Rational total = 0;
    for (const auto &alpha : exponents_of_level(n, k)) {
        const Integer c = power_multinomial(alpha, s);
        if (c == 0) {
            continue;
        }
        Rational term(c);
        for (int i = 1; i <= alpha.box(); ++i) {
            for (int e = 0; e < alpha[i]; ++e) {
                term *= t[static_cast<std::size_t>(i - 1)];
            }
        }
        total += term;
    }
    return total;
}

IsobaricPolynomial conv_power_poly(int k, int s, int n)
{
    check_power_args(k, s, n);
    if (n == 0) {
        return IsobaricPolynomial::constant(1);
    }
    IsobaricPolynomial p(n);
    if (k == 0) {
        return p;
    }
    for (const auto &alpha : exponents_of_level(n, k)) {
        p.add_term(alpha, Rational(power_multinomial(alpha, s)));
    }
    return p;
}

LocalSequence rational_power(const CoreFunctionSpec &spec, const Rational &q, int top_level)
{
    if (top_level < 0) {
        throw domain_error("top level must be non-negative");
    }
    std::vector<Rational> v(static_cast<std::size_t>(top_level) + 1, Rational(0));
    v[0] = 1;
    if (spec.degree() > 0) {
        for (int n = 1; n <= top_level; ++n) {
            v[static_cast<std::size_t>(n)] = poly_evaluate(root({n, spec.degree(), WeightVector::ones(), q}), spec.a);
        }
    }
    return LocalSequence(std::move(v));
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m)
{
    if (m == 0) {
        throw domain_error("cannot factorize 0");
    }
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p <= m / p; p += (p == 2) ? 1 : 2) {
        if (m % p != 0) {
            continue;
        }
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) {
        out.emplace_back(m, 1);
    }
    return out;
}

Rational evaluate_global(const CoreFunctionSpec &spec, const Rational &q, std::int64_t m, std::uint64_t ceiling)
{
    if (m <= 0) {
        throw domain_error("evaluate_global needs m >= 1");
    }
    if (static_cast<std::uint64_t>(m) > ceiling) {
        throw domain_error("m = " + std::to_string(m) + " exceeds the factorization ceiling " + std::to_string(ceiling));
    }
    const auto factors = factorize(static_cast<std::uint64_t>(m));
    int top = 0;
    for (const auto &[p, e] : factors) {
        top = std::max(top, e);
    }
    const LocalSequence local = rational_power(spec, q, top);
    Rational value = 1;
    for (const auto &[p, e] : factors) {
        value *= local[e];
    }
    return value;
}

} // namespace isobar
