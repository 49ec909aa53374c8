#ifndef ISOBAR_TEST_ORACLES_HPP
#define ISOBAR_TEST_ORACLES_HPP

// Independent reference computations used only by the tests. None of these
// call the library routine they are meant to check.

#include <vector>

#include <isobar/exponent.hpp>
#include <isobar/partition.hpp>
#include <isobar/polynomial.hpp>
#include <isobar/rational.hpp>
#include <isobar/wip.hpp>

namespace oracle
{

using isobar::ExponentVector;
using isobar::IsobaricPolynomial;
using isobar::Partition;
using isobar::Rational;
using isobar::WeightVector;

// Coefficient of t^alpha built from the lattice rule: t_j carries w_j and any
// deeper monomial carries the sum over the monomials one step below it.
Rational lattice_coefficient(const ExponentVector &alpha, const WeightVector &omega);

// p(n) by Euler's pentagonal recurrence.
long partition_count(int n);

// chi_lambda(mu) by rim-hook removal on beta-sets.
long murnaghan_nakayama(const Partition &lambda, const Partition &mu);

// (1 + P)^q = sum_m C(q, m) P^m as power series in the level, where
// P = (0, P_1, ..., P_N) is the family of weight omega truncated at k.
std::vector<IsobaricPolynomial> binomial_series_root(const WeightVector &omega, const Rational &q, int k, int top_level);

// Plain O(N^2) local convolution of value lists.
std::vector<Rational> convolve(const std::vector<Rational> &f, const std::vector<Rational> &g);

} // namespace oracle

#endif
