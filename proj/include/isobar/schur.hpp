#ifndef ISOBAR_SCHUR_HPP
#define ISOBAR_SCHUR_HPP

#include <vector>

#include <isobar/partition.hpp>
#include <isobar/polynomial.hpp>
#include <isobar/rational.hpp>
#include <isobar/wip.hpp>

namespace isobar
{

enum class DeterminantBasis {
    // det[e^_{l'_i - i + j}] over the conjugate, e^_m = (-1)^{m+1} t_m
    elementary,
    // det[F_{l_i - i + j}]
    complete,
};

// Isobaric reflect of the Schur polynomial s_lambda. Both bases give the same
// polynomial; entries with negative index are 0 and index 0 is 1.
IsobaricPolynomial schur_reflect(const Partition &lambda, DeterminantBasis basis = DeterminantBasis::elementary);

// (-1)^r sum_{j=r+1}^{n} t_j F_{n-j}, the reflect of the hook (n - r, 1^r).
IsobaricPolynomial hook_reflect(int n, int r);

// Weight of the family holding every hook with leg length r + 1.
WeightVector hook_weight(int r);

// c_i = (-1)^{i+1} (w_i - w_{i+1}), i = 0 .. n-1, with w_0 = 0, so that
// sum_i c_i hook_reflect(n, i) = wip(n, n, omega).
std::vector<Rational> to_hook_basis(const WeightVector &omega, int n);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> rows;    // lambda, descending: (n) first
    std::vector<Partition> columns; // mu, ascending: (1^n) first
    std::vector<std::vector<Rational>> entries;

    const Rational &at(std::size_t row, std::size_t column) const
    {
        return entries.at(row).at(column);
    }
};

inline constexpr int default_character_table_bound = 7;

// Characters of Sym(n) read off the expansion of each Schur reflect in the
// products of GLPs: S^_lambda = sum_mu (chi_lambda^mu / z_mu) G_mu.
CharacterTable character_table(int n, int bound = default_character_table_bound);

} // namespace isobar

#endif
