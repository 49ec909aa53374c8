#ifndef ISOBAR_ARITH_HPP
#define ISOBAR_ARITH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <isobar/polynomial.hpp>
#include <isobar/rational.hpp>

namespace isobar
{

// Coefficients (a_1, ..., a_k) of the core polynomial x^k - a_1 x^{k-1} - ... - a_k.
// The core function it determines takes the same local values at every prime.
struct CoreFunctionSpec {
    std::vector<Rational> a;

    int degree() const noexcept
    {
        return static_cast<int>(a.size());
    }
};

// Local values (f(p^0), ..., f(p^N)) of a multiplicative function; f(1) = 1.
class LocalSequence
{
public:
    // Throws domain_error when values is empty or values[0] != 1.
    explicit LocalSequence(std::vector<Rational> values);

    static LocalSequence identity(int top_level); // (1, 0, ..., 0)

    int top_level() const noexcept
    {
        return static_cast<int>(values_.size()) - 1;
    }
    const Rational &operator[](int n) const
    {
        return values_.at(static_cast<std::size_t>(n));
    }
    std::span<const Rational> values() const noexcept
    {
        return values_;
    }

    friend bool operator==(const LocalSequence &, const LocalSequence &) = default;

private:
    std::vector<Rational> values_;
};

// v_n = F_{k,n}(a) via F_n = a_1 F_{n-1} + ... + a_k F_{n-k}, F_0 = 1.
LocalSequence positive_values(const CoreFunctionSpec &spec, int top_level);

// (1, -a_1, ..., -a_k); the padded form runs through level N with zeros.
LocalSequence negative_values(const CoreFunctionSpec &spec);
LocalSequence negative_values(const CoreFunctionSpec &spec, int top_level);

// (f * g)(p^n) = sum_i f(p^i) g(p^{n-i}). Throws shape_error on length mismatch.
LocalSequence dirichlet_convolve(const LocalSequence &f, const LocalSequence &g);

// s-th convolution power at p^n of the function with local values
// (1, t_1, ..., t_k, 0, ...): sum over alpha of level n with |alpha| <= s of
// s! / (prod a_i! (s - |alpha|)!) prod t_i^{a_i}.
Rational conv_power_int(std::span<const Rational> t, int s, int n);
// Same sum with t_1, ..., t_k left as variables.
IsobaricPolynomial conv_power_poly(int k, int s, int n);

// v_n = H_{k,n}(a, q), the q-th convolution root (power) of the core function.
LocalSequence rational_power(const CoreFunctionSpec &spec, const Rational &q, int top_level);

inline constexpr std::uint64_t default_factorization_ceiling = 1'000'000'000'000ULL;

// Trial division; (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m);

// prod over p^e || m of rational_power(spec, q)_e; 1 at m = 1. Throws
// domain_error for m <= 0 or m above the ceiling.
Rational evaluate_global(const CoreFunctionSpec &spec, const Rational &q, std::int64_t m,
                         std::uint64_t ceiling = default_factorization_ceiling);

} // namespace isobar

#endif
