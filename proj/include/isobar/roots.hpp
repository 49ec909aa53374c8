#ifndef ISOBAR_ROOTS_HPP
#define ISOBAR_ROOTS_HPP

#include <map>

#include <isobar/exponent.hpp>
#include <isobar/polynomial.hpp>
#include <isobar/rational.hpp>
#include <isobar/wip.hpp>

namespace isobar
{

// q (q + 1) ... (q + j) for j >= 0, zero for j < 0.
Rational b_rising(const Rational &q, int j);
// q (q - 1) ... (q - j) for j >= 0, zero for j < 0.
Rational b_falling(const Rational &q, int j);

/// Polynomial in the weight variables w_1, ..., w_k.
class WeightMonomialPoly
{
public:
    using Terms = std::map<ExponentVector, Rational>;

    WeightMonomialPoly() = default;
    static WeightMonomialPoly monomial(const ExponentVector &gamma, const Rational &coeff = 1);

    const Terms &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    Rational coefficient(const ExponentVector &gamma) const;
    void add_term(const ExponentVector &gamma, const Rational &coeff);

    Rational evaluate(const WeightVector &omega) const;

    WeightMonomialPoly &operator+=(const WeightMonomialPoly &other);
    friend WeightMonomialPoly operator*(const WeightMonomialPoly &a, const WeightMonomialPoly &b);
    friend WeightMonomialPoly operator*(const Rational &c, const WeightMonomialPoly &a);

    friend bool operator==(const WeightMonomialPoly &, const WeightMonomialPoly &) = default;

private:
    Terms terms_;
};

// D_1 = sum_i d/dw_i applied once.
WeightMonomialPoly total_differential_step(const WeightMonomialPoly &f);

// D_p(w^alpha) by the closed form p! sum_{gamma <= alpha, |alpha - gamma| = p}
// prod_i C(a_i, g_i) w^gamma. D_0 is the identity.
WeightMonomialPoly total_differential(int p, const ExponentVector &alpha);

// D_p(w^alpha) by p applications of D_1.
WeightMonomialPoly total_differential_recursive(int p, const ExponentVector &alpha);

// D_p(w^alpha) evaluated at omega, without building the polynomial:
// p! [x^{|alpha| - p}] prod_i (1 + w_i x)^{a_i}.
Rational total_differential_at(int p, const ExponentVector &alpha, const WeightVector &omega);

// Coefficient of t^alpha in the q-th level root of the family omega:
// (1 / prod a_i!) sum_{j=0}^{|alpha|-1} C(|alpha|-1, j) B_{-(j)}^q D_{|alpha|-j-1}(w^alpha).
Rational l_coefficient(const ExponentVector &alpha, const WeightVector &omega, const Rational &q);

struct RootQuery {
    int n = 0;
    int k = 1;
    WeightVector omega;
    Rational q;
};

// H_{k,n,omega}(t, q); the constant 1 at n = 0.
IsobaricPolynomial root(const RootQuery &query);

// (H_0, ..., H_N)
IsobaricSequence root_sequence(int k, int top_level, const WeightVector &omega, const Rational &q);

// R_n = sum_{i=0}^{n} P_i Q_{n-i}. Throws shape_error on mismatched
// truncation or length.
IsobaricSequence level_product(const IsobaricSequence &a, const IsobaricSequence &b);

// Forward substitution; throws not_invertible when a_0 = 0.
IsobaricSequence level_inverse(const IsobaricSequence &a);

// s-fold level product; s = 0 gives the identity and s < 0 inverts first.
IsobaricSequence level_power(const IsobaricSequence &a, int s);

} // namespace isobar

#endif
