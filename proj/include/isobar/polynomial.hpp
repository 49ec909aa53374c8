#ifndef ISOBAR_POLYNOMIAL_HPP
#define ISOBAR_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <isobar/exponent.hpp>
#include <isobar/rational.hpp>

namespace isobar
{

/// Isobaric polynomial: sum of A(alpha) t^alpha over exponent vectors of one
/// common level. Terms are kept in ascending lexicographic order and no stored
/// coefficient is zero. The level-0 polynomials are the rational constants,
/// keyed by the empty exponent vector.
class IsobaricPolynomial
{
public:
    using Terms = std::map<ExponentVector, Rational, PartitionLess>;

    explicit IsobaricPolynomial(int level = 0);

    static IsobaricPolynomial constant(const Rational &value);
    static IsobaricPolynomial monomial(const ExponentVector &alpha, const Rational &coeff = 1);
    // t_j
    static IsobaricPolynomial variable(int j);

    int level() const noexcept
    {
        return level_;
    }
    const Terms &terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    Rational coefficient(const ExponentVector &alpha) const;

    // Accumulates coeff into the term alpha, removing it if it cancels.
    // Throws grading_error when level(alpha) differs from level().
    void add_term(const ExponentVector &alpha, const Rational &coeff);

    // Largest variable index that occurs (0 for constants and zero).
    int max_variable() const noexcept;

    IsobaricPolynomial &operator+=(const IsobaricPolynomial &other);
    IsobaricPolynomial &operator-=(const IsobaricPolynomial &other);
    IsobaricPolynomial &operator*=(const Rational &scalar);

    friend bool operator==(const IsobaricPolynomial &, const IsobaricPolynomial &) = default;

private:
    int level_;
    Terms terms_;
};

IsobaricPolynomial poly_add(const IsobaricPolynomial &p, const IsobaricPolynomial &q);
IsobaricPolynomial poly_sub(const IsobaricPolynomial &p, const IsobaricPolynomial &q);
IsobaricPolynomial poly_mul(const IsobaricPolynomial &p, const IsobaricPolynomial &q);
IsobaricPolynomial poly_scale(const IsobaricPolynomial &p, const Rational &scalar);

// coeff * t_j * p, a shift of every key.
IsobaricPolynomial times_variable(const IsobaricPolynomial &p, int j, const Rational &coeff = 1);

// point[i - 1] is the value of t_i. Throws arity_error when point is shorter
// than max_variable().
Rational poly_evaluate(const IsobaricPolynomial &p, std::span<const Rational> point);

// Sets t_j = 0 for every j > k.
IsobaricPolynomial truncate(const IsobaricPolynomial &p, int k);

IsobaricPolynomial operator+(const IsobaricPolynomial &p, const IsobaricPolynomial &q);
IsobaricPolynomial operator-(const IsobaricPolynomial &p, const IsobaricPolynomial &q);
IsobaricPolynomial operator-(const IsobaricPolynomial &p);
IsobaricPolynomial operator*(const IsobaricPolynomial &p, const IsobaricPolynomial &q);
IsobaricPolynomial operator*(const Rational &scalar, const IsobaricPolynomial &p);

/// Sequence (P_0, ..., P_N) with P_n of level n and no variable beyond t_k.
/// This is the carrier of the level product.
class IsobaricSequence
{
public:
    // Validates that polys[n].level() == n and that every term has a_j = 0
    // for j > truncation_k; throws shape_error otherwise.
    IsobaricSequence(int truncation_k, std::vector<IsobaricPolynomial> polys);

    // (1, 0, 0, ..., 0) through level N.
    static IsobaricSequence identity(int truncation_k, int top_level);

    int truncation() const noexcept
    {
        return truncation_k_;
    }
    int top_level() const noexcept
    {
        return static_cast<int>(polys_.size()) - 1;
    }
    const IsobaricPolynomial &operator[](int n) const
    {
        return polys_.at(static_cast<std::size_t>(n));
    }
    std::span<const IsobaricPolynomial> polys() const noexcept
    {
        return polys_;
    }

    friend bool operator==(const IsobaricSequence &, const IsobaricSequence &) = default;

private:
    int truncation_k_;
    std::vector<IsobaricPolynomial> polys_;
};

} // namespace isobar

#endif
