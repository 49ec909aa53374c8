#ifndef ISOBAR_WIP_HPP
#define ISOBAR_WIP_HPP

#include <optional>
#include <string>
#include <vector>

#include <isobar/exponent.hpp>
#include <isobar/partition.hpp>
#include <isobar/polynomial.hpp>
#include <isobar/rational.hpp>

namespace isobar
{

// w_i = constant + slope * i for every i past the explicit prefix.
struct AffineTail {
    Rational constant;
    Rational slope;

    Rational at(int i) const
    {
        return constant + slope * i;
    }

    friend bool operator==(const AffineTail &, const AffineTail &) = default;
};

/// Weight vector (w_1, w_2, ...) of a WIP family, with w_0 = 0.
///
/// A weight is an explicit prefix optionally continued by an affine tail, so
/// the named patterns (GFP, GLP, hooks) extend to any level and the set stays
/// closed under addition. Reading an index past the prefix of a tail-less
/// weight throws domain_error.
class WeightVector
{
public:
    WeightVector() = default; // empty prefix, no tail: nothing defined
    explicit WeightVector(std::vector<Rational> entries);
    WeightVector(std::vector<Rational> prefix, AffineTail tail);

    static WeightVector zero();
    static WeightVector ones();     // GFP
    static WeightVector naturals(); // GLP
    // (-1)^r (0, ..., 0, 1, 1, ...) with r zeros.
    static WeightVector hook(int r);

    Rational operator[](int i) const;
    bool defined_through(int i) const noexcept;
    // (w_1, ..., w_n)
    std::vector<Rational> take(int n) const;

    const std::vector<Rational> &prefix() const noexcept
    {
        return prefix_;
    }
    const std::optional<AffineTail> &tail() const noexcept
    {
        return tail_;
    }

    friend bool operator==(const WeightVector &, const WeightVector &) = default;

private:
    std::vector<Rational> prefix_;
    std::optional<AffineTail> tail_;
};

WeightVector weight_add(const WeightVector &w1, const WeightVector &w2);
WeightVector operator+(const WeightVector &w1, const WeightVector &w2);
WeightVector weight_scale(const WeightVector &w, const Rational &c);
// Entrywise equality of w_1 .. w_length.
bool equal_prefix(const WeightVector &w1, const WeightVector &w2, int length);

enum class FamilyTag { gfp, glp, hook };

struct NamedFamily {
    FamilyTag tag;
    int r = 0; // leg parameter, hooks only

    WeightVector weights() const;
    std::string name() const; // "GFP", "GLP", "HOOK(2)"
};

// multinomial(|alpha|; alpha) * (sum_i a_i w_i) / |alpha|
Rational wip_coefficient(const ExponentVector &alpha, const WeightVector &omega);

// Level-n member of the family, from the closed-form coefficients.
IsobaricPolynomial wip(int n, int k, const WeightVector &omega);

// P_n = t_1 P_{n-1} + ... + t_{n-1} P_1 + w_n t_n, with t_j = 0 for j > k.
IsobaricPolynomial wip_via_recursion(int n, int k, const WeightVector &omega);
// (P_0 = 0, P_1, ..., P_N) in one pass of the recursion.
std::vector<IsobaricPolynomial> wip_levels_via_recursion(int top_level, int k, const WeightVector &omega);

// P_n = sum_{j=1}^{n} w_j t_j F_{n-j}, F_0 = 1.
IsobaricPolynomial wip_via_convolution(int n, int k, const WeightVector &omega);
std::vector<IsobaricPolynomial> wip_levels_via_convolution(int top_level, int k, const WeightVector &omega);

// (F_0 = 1, F_1, ..., F_N), truncated to k variables.
std::vector<IsobaricPolynomial> gfp_levels(int top_level, int k);
IsobaricSequence gfp_sequence(int k, int top_level);
// (H_0 = 1, P_1, ..., P_N): the family as a level-product element.
IsobaricSequence wip_sequence(int k, int top_level, const WeightVector &omega);

// The weight of p if p is the level-n member of some family, else nullopt.
// Reads w_1 from t_1^n and w_i from t_1^{n-i} t_i, then checks every
// coefficient of level n (absent terms included) against the closed form.
std::optional<WeightVector> detect_weight(const IsobaricPolynomial &p);

// Expands (sum_i w_i t_i y^i) / (1 - sum_{i<=k} t_i y^i) as a power series in
// y through y^N. The constant term is 0.
IsobaricSequence generating_series(const WeightVector &omega, int k, int top_level);

// prod_j P_{lambda_j, omega}
IsobaricPolynomial basis_products(const Partition &lambda, const WeightVector &omega, int k);

} // namespace isobar

#endif
