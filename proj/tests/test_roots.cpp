#include <doctest.h>

#include <isobar/errors.hpp>
#include <isobar/io.hpp>
#include <isobar/roots.hpp>
#include <isobar/sampling.hpp>

#include "oracles.hpp"

using namespace isobar;

namespace
{

IsobaricPolynomial poly(std::string_view text)
{
    return parse_poly_text(text);
}

WeightMonomialPoly w_poly(std::initializer_list<std::pair<ExponentVector, int>> terms)
{
    WeightMonomialPoly p;
    for (const auto &[gamma, c] : terms) {
        p.add_term(gamma, c);
    }
    return p;
}

const Rational half = make_rational(1, 2);

} // namespace

TEST_CASE("rising and falling products")
{
    for (int m = 0; m <= 8; ++m) {
        CHECK(b_rising(1, m) == Rational(factorial(m + 1)));
    }
    CHECK(b_rising(half, 2) == make_rational(15, 8));
    CHECK(b_rising(half, -1) == 0);
    CHECK(b_falling(1, 1) == 0);
    CHECK(b_falling(half, 1) == make_rational(-1, 4));
    for (int j = 0; j <= 5; ++j) {
        CHECK(b_falling(0, j) == 0);
        CHECK(b_falling(3, j) == (j >= 3 ? 0 : Rational(factorial(3) / factorial(2 - j))));
    }
    CHECK(b_falling(half, -1) == 0);
}

TEST_CASE("total differentials")
{
    const ExponentVector a{2, 1};
    CHECK(total_differential(1, a) == w_poly({{{1, 1}, 2}, {{2}, 1}}));
    CHECK(total_differential(2, a) == w_poly({{{1}, 4}, {{0, 1}, 2}}));
    CHECK(total_differential(0, a) == WeightMonomialPoly::monomial(a));
    CHECK(total_differential(4, a).is_zero());
    CHECK(total_differential_step(WeightMonomialPoly::monomial(ExponentVector{1})) == w_poly({{{}, 1}}));

    // recursion against the closed form, and top order against sum a_i w_i
    sampling::Rng rng(31);
    const auto omega = sampling::random_weight(rng, 5);
    for (int n = 1; n <= 7; ++n) {
        for (const auto &alpha : exponents_of_level(n, 5)) {
            const int d = alpha.depth();
            for (int p = 0; p <= d; ++p) {
                const auto closed = total_differential(p, alpha);
                REQUIRE(closed == total_differential_recursive(p, alpha));
                REQUIRE(closed.evaluate(omega) == total_differential_at(p, alpha, omega));
            }
            WeightMonomialPoly top;
            for (int i = 1; i <= alpha.box(); ++i) {
                top.add_term(ExponentVector::unit(i), Rational(factorial(d - 1) * alpha[i]));
            }
            REQUIRE(total_differential(d - 1, alpha) == top);
        }
    }
    CHECK_THROWS_AS(total_differential(-1, a), domain_error);
}

TEST_CASE("root coefficients")
{
    sampling::Rng rng(37);
    const auto omega = sampling::random_weight(rng, 4);
    const auto q = sampling::random_rational(rng);
    CHECK(l_coefficient(ExponentVector{1}, omega, q) == q * omega[1]);
    CHECK(l_coefficient(ExponentVector{2}, WeightVector::ones(), half) == make_rational(3, 8));
    for (int n = 1; n <= 7; ++n) {
        for (const auto &alpha : exponents_of_level(n, 4)) {
            REQUIRE(l_coefficient(alpha, omega, 1) == wip_coefficient(alpha, omega));
            REQUIRE(l_coefficient(alpha, WeightVector::ones(), q)
                    == b_rising(q, alpha.depth() - 1) / Rational(factorial_product(alpha)));
        }
    }
    CHECK_THROWS_AS(l_coefficient(ExponentVector{}, omega, q), domain_error);
}

TEST_CASE("roots")
{
    CHECK(root({2, 2, WeightVector::ones(), half}) == poly("(3/8)t1^2 + (1/2)t2"));
    CHECK(root({0, 3, WeightVector::naturals(), half}) == IsobaricPolynomial::constant(1));
    sampling::Rng rng(41);
    const auto omega = sampling::random_weight(rng, 6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(root({n, n, omega, 1}) == wip(n, n, omega));
        CHECK(root({n, n, omega, 0}).is_zero());
    }
    CHECK_THROWS_AS(root({-1, 2, omega, 1}), domain_error);
}

TEST_CASE("roots match the binomial series of the family")
{
    sampling::Rng rng(43);
    const std::vector<WeightVector> families = {WeightVector::ones(), WeightVector::naturals(), WeightVector::hook(1),
                                                sampling::random_weight(rng, 6)};
    for (const auto &omega : families) {
        for (const auto &q : {half, make_rational(-2, 3), Rational(3), make_rational(5, 7)}) {
            const auto expected = oracle::binomial_series_root(omega, q, 6, 6);
            const auto h = root_sequence(6, 6, omega, q);
            for (int n = 0; n <= 6; ++n) {
                REQUIRE(h[n] == expected[static_cast<std::size_t>(n)]);
            }
        }
    }
}

TEST_CASE("level product")
{
    const auto f = gfp_sequence(4, 4);
    CHECK(level_product(f, f)[2] == poly("3t1^2 + 2t2"));
    CHECK(level_power(f, 2)[2] == poly("3t1^2 + 2t2"));
    const auto id = IsobaricSequence::identity(4, 4);
    CHECK(level_product(id, f) == f);
    CHECK(level_power(f, 0) == id);

    const auto h = root_sequence(4, 4, WeightVector::ones(), half);
    CHECK(level_product(h, h) == f);

    CHECK_THROWS_AS(level_product(f, gfp_sequence(3, 4)), shape_error);
    CHECK_THROWS_AS(level_product(f, gfp_sequence(4, 3)), shape_error);
}

TEST_CASE("level inverse")
{
    const auto f = gfp_sequence(4, 6);
    const auto inv = level_inverse(f);
    CHECK(inv[0] == IsobaricPolynomial::constant(1));
    for (int n = 1; n <= 6; ++n) {
        CHECK(inv[n] == (n <= 4 ? poly_scale(IsobaricPolynomial::variable(n), -1) : IsobaricPolynomial(n)));
    }
    CHECK(level_power(f, -1) == inv);
    const auto id = IsobaricSequence::identity(3, 5);
    CHECK(level_inverse(id) == id);

    sampling::Rng rng(47);
    const auto omega = sampling::random_weight(rng, 5);
    for (const auto &q : {half, make_rational(-1, 3), Rational(2)}) {
        const auto hq = root_sequence(5, 5, omega, q);
        const auto hinv = level_inverse(hq);
        CHECK(hinv == root_sequence(5, 5, omega, -q));
        CHECK(level_product(hq, hinv) == IsobaricSequence::identity(5, 5));
        CHECK(level_product(hinv, hq) == IsobaricSequence::identity(5, 5));
    }

    const IsobaricSequence singular(2, {IsobaricPolynomial::constant(0), poly("t1"), poly("t2")});
    CHECK_THROWS_AS(level_inverse(singular), not_invertible);
    CHECK_THROWS_AS(level_power(singular, -2), not_invertible);
}

TEST_CASE("integer powers are roots")
{
    const auto f = gfp_sequence(6, 6);
    for (int s = -3; s <= 4; ++s) {
        CHECK(root_sequence(6, 6, WeightVector::ones(), s) == level_power(f, s));
    }
}
