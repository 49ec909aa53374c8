#include <doctest.h>

#include <isobar/arith.hpp>
#include <isobar/errors.hpp>
#include <isobar/sampling.hpp>

#include "oracles.hpp"

using namespace isobar;

namespace
{

std::vector<Rational> values(std::initializer_list<int> v)
{
    return std::vector<Rational>(v.begin(), v.end());
}

std::vector<Rational> as_vector(const LocalSequence &s)
{
    return std::vector<Rational>(s.values().begin(), s.values().end());
}

const CoreFunctionSpec fib{{1, 1}};

} // namespace

TEST_CASE("positive and negative values")
{
    CHECK(as_vector(positive_values(fib, 6)) == values({1, 1, 2, 3, 5, 8, 13}));
    const Rational c = make_rational(-3, 2);
    CHECK(as_vector(positive_values(CoreFunctionSpec{{c}}, 3)) == std::vector<Rational>{1, c, c * c, c * c * c});
    CHECK(as_vector(positive_values(CoreFunctionSpec{{0, 1}}, 4)) == values({1, 0, 1, 0, 1}));
    CHECK(as_vector(negative_values(fib)) == values({1, -1, -1}));
    CHECK(as_vector(negative_values(fib, 4)) == values({1, -1, -1, 0, 0}));
    CHECK(as_vector(negative_values(CoreFunctionSpec{{c}}, 2)) == std::vector<Rational>{1, -c, 0});
    CHECK(dirichlet_convolve(positive_values(fib, 6), negative_values(fib, 6)) == LocalSequence::identity(6));
    CHECK_THROWS_AS(LocalSequence(values({2, 1})), domain_error);
    CHECK_THROWS_AS(LocalSequence(std::vector<Rational>{}), domain_error);
}

TEST_CASE("dirichlet convolution")
{
    const auto f = positive_values(fib, 4);
    CHECK(dirichlet_convolve(f, f)[2] == 5);
    CHECK(dirichlet_convolve(f, LocalSequence::identity(4)) == f);
    const LocalSequence zeta(values({1, 1, 1, 1, 1}));
    CHECK(as_vector(dirichlet_convolve(zeta, zeta)) == values({1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(dirichlet_convolve(f, LocalSequence::identity(3)), shape_error);

    sampling::Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + trial % 5;
        CoreFunctionSpec spec;
        for (int i = 0; i < k; ++i) {
            spec.a.push_back(sampling::random_rational(rng));
        }
        const auto pos = positive_values(spec, 10);
        const auto neg = negative_values(spec, 10);
        REQUIRE(as_vector(dirichlet_convolve(pos, neg)) == oracle::convolve(as_vector(pos), as_vector(neg)));
        REQUIRE(dirichlet_convolve(pos, neg) == LocalSequence::identity(10));
    }
}

TEST_CASE("convolution powers")
{
    CHECK(conv_power_poly(2, 2, 2) == IsobaricPolynomial::monomial(ExponentVector{2}) + IsobaricPolynomial::monomial(ExponentVector{0, 1}, 2));
    const auto t = values({3, -2, 5});
    for (int n = 1; n <= 3; ++n) {
        CHECK(conv_power_int(t, 1, n) == t[static_cast<std::size_t>(n - 1)]);
    }
    CHECK(conv_power_int(t, 0, 0) == 1);
    CHECK(conv_power_int(t, 0, 2) == 0);

    sampling::Rng rng(59);
    for (int trial = 0; trial < 8; ++trial) {
        const int k = 1 + trial % 4;
        std::vector<Rational> tv;
        std::vector<Rational> local(9, Rational(0));
        local[0] = 1;
        for (int i = 0; i < k; ++i) {
            tv.push_back(sampling::random_rational(rng));
            local[static_cast<std::size_t>(i + 1)] = tv.back();
        }
        std::vector<Rational> power(9, Rational(0));
        power[0] = 1;
        for (int s = 0; s <= 5; ++s) {
            for (int n = 0; n <= 8; ++n) {
                REQUIRE(conv_power_int(tv, s, n) == power[static_cast<std::size_t>(n)]);
                REQUIRE(poly_evaluate(conv_power_poly(k, s, n), tv) == power[static_cast<std::size_t>(n)]);
            }
            power = oracle::convolve(power, local);
        }
    }
}

TEST_CASE("rational powers")
{
    CHECK(rational_power(fib, 1, 7) == positive_values(fib, 7));
    const auto half = rational_power(fib, make_rational(1, 2), 7);
    CHECK(as_vector(rational_power(fib, make_rational(1, 2), 2))
          == std::vector<Rational>{1, make_rational(1, 2), make_rational(7, 8)});
    CHECK(dirichlet_convolve(half, half) == positive_values(fib, 7));
    CHECK(rational_power(fib, -1, 7) == negative_values(fib, 7));
    CHECK(rational_power(fib, 0, 5) == LocalSequence::identity(5));
}

TEST_CASE("factorization and global values")
{
    CHECK(factorize(1).empty());
    CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(999983) == std::vector<std::pair<std::uint64_t, int>>{{999983, 1}});
    CHECK(factorize(1'000'000'000'000ULL) == std::vector<std::pair<std::uint64_t, int>>{{2, 12}, {5, 12}});

    CHECK(evaluate_global(fib, 1, 12) == 2);
    CHECK(evaluate_global(fib, make_rational(1, 2), 1) == 1);
    const Rational c = make_rational(7, 3);
    CHECK(evaluate_global(CoreFunctionSpec{{c}}, 1, 35) == c * c);
    CHECK_THROWS_AS(evaluate_global(fib, 1, 0), domain_error);
    CHECK_THROWS_AS(evaluate_global(fib, 1, -4), domain_error);
    CHECK_THROWS_AS(evaluate_global(fib, 1, 1'000'000'000'001LL), domain_error);

    const auto local = rational_power(fib, make_rational(-2, 3), 10);
    for (std::int64_t p : {2, 3, 7, 13}) {
        std::int64_t pe = 1;
        for (int e = 0; e <= 10; ++e) {
            REQUIRE(evaluate_global(fib, make_rational(-2, 3), pe) == local[e]);
            pe *= p;
        }
    }
}
