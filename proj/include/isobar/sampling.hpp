#ifndef ISOBAR_SAMPLING_HPP
#define ISOBAR_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <isobar/polynomial.hpp>
#include <isobar/rational.hpp>
#include <isobar/wip.hpp>

// Deterministic random instances for the identity suites.
namespace isobar::sampling
{

using Rng = std::mt19937_64;

// p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(Rng &rng, int max_num = 9, int max_den = 9, bool nonzero = false);

// Explicit weight (w_1, ..., w_length).
WeightVector random_weight(Rng &rng, int length, bool nonzero = false);

// Random level-n polynomial in t_1..t_k, each monomial kept with probability 1/2.
IsobaricPolynomial random_polynomial(Rng &rng, int n, int k);

// Seed for the index-th stream derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

} // namespace isobar::sampling

#endif
