#include <doctest.h>

#include <isobar/errors.hpp>
#include <isobar/io.hpp>
#include <isobar/sampling.hpp>
#include <isobar/schur.hpp>
#include <isobar/wip.hpp>

#include "oracles.hpp"

using namespace isobar;

namespace
{

IsobaricPolynomial poly(std::string_view text)
{
    return parse_poly_text(text);
}

WeightVector weights(std::initializer_list<int> w)
{
    std::vector<Rational> v;
    for (int x : w) {
        v.emplace_back(x);
    }
    return WeightVector(std::move(v));
}

} // namespace

TEST_CASE("weight patterns")
{
    CHECK(WeightVector::ones().take(4) == std::vector<Rational>{1, 1, 1, 1});
    CHECK(WeightVector::naturals().take(4) == std::vector<Rational>{1, 2, 3, 4});
    CHECK(WeightVector::hook(2).take(5) == std::vector<Rational>{0, 0, 1, 1, 1});
    CHECK(WeightVector::hook(1).take(3) == std::vector<Rational>{0, -1, -1});
    CHECK(WeightVector::ones()[0] == 0);
    CHECK(weights({1, 2})[2] == 2);
    CHECK_THROWS_AS(weights({1, 2})[3], domain_error);
    CHECK(NamedFamily{FamilyTag::hook, 3}.name() == "HOOK(3)");
    CHECK(NamedFamily{FamilyTag::glp, 0}.weights() == WeightVector::naturals());
}

TEST_CASE("weight addition")
{
    CHECK((weights({1, 1, 1}) + weights({0, 1, 2})).take(3) == weights({1, 2, 3}).take(3));
    CHECK(equal_prefix(weights({3, -1}) + WeightVector::zero(), weights({3, -1}), 2));
    CHECK(equal_prefix(WeightVector::ones() + WeightVector::ones(), weights({2, 2, 2, 2, 2, 2}), 6));
    CHECK(equal_prefix(WeightVector::ones() + WeightVector::naturals(), weights({2, 3, 4, 5, 6, 7, 8, 9}), 8));
    for (int n = 1; n <= 6; ++n) {
        CHECK(wip(n, n, WeightVector::ones() + WeightVector::ones()) == poly_scale(wip(n, n, WeightVector::ones()), 2));
    }
}

TEST_CASE("coefficient formula")
{
    // (2 w1 + w2) and (w1 + w3) for several concrete weights
    sampling::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = sampling::random_weight(rng, 3);
        CHECK(wip_coefficient(ExponentVector{2, 1}, w) == 2 * w[1] + w[2]);
        CHECK(wip_coefficient(ExponentVector{1, 0, 1}, w) == w[1] + w[3]);
    }
    CHECK(wip_coefficient(ExponentVector{2, 1}, weights({1, 2})) == 4);
    CHECK_THROWS_AS(wip_coefficient(ExponentVector{}, WeightVector::ones()), domain_error);
}

TEST_CASE("first families")
{
    CHECK(wip(4, 4, WeightVector::ones()) == poly("t1^4 + 3t1^2t2 + t2^2 + 2t1t3 + t4"));
    CHECK(wip(4, 4, WeightVector::naturals()) == poly("t1^4 + 4t1^2t2 + 2t2^2 + 4t1t3 + 4t4"));
    CHECK(wip_via_recursion(4, 4, WeightVector::ones()) == poly("t1^4 + 3t1^2t2 + t2^2 + 2t1t3 + t4"));
    CHECK(wip_via_recursion(3, 3, weights({0, -1, -1})) == poly("-t1t2 - t3"));
    CHECK(wip_via_convolution(4, 4, weights({0, -1, -1, -1})) == poly("-t1^2t2 - t2^2 - t1t3 - t4"));
    CHECK(wip_via_convolution(1, 1, weights({5})) == poly("5t1"));
    CHECK(wip(2, 2, weights({3, 7})) == poly("3t1^2 + 7t2"));
    CHECK(wip(4, 2, WeightVector::ones()) == poly("t1^4 + 3t1^2t2 + t2^2"));
    CHECK_THROWS_AS(wip(0, 3, WeightVector::ones()), domain_error);
}

TEST_CASE("three routes agree")
{
    sampling::Rng rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        const auto w = sampling::random_weight(rng, 12);
        const int k = 1 + trial;
        const auto rec = wip_levels_via_recursion(12, k, w);
        const auto conv = wip_levels_via_convolution(12, k, w);
        for (int n = 1; n <= 12; ++n) {
            const auto closed = wip(n, k, w);
            REQUIRE(closed == rec[static_cast<std::size_t>(n)]);
            REQUIRE(closed == conv[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("lattice rule reproduces the closed form")
{
    sampling::Rng rng(8);
    for (int trial = 0; trial < 4; ++trial) {
        const auto w = sampling::random_weight(rng, 8);
        for (int n = 1; n <= 8; ++n) {
            for (const auto &alpha : exponents_of_level(n, n)) {
                REQUIRE(oracle::lattice_coefficient(alpha, w) == wip_coefficient(alpha, w));
            }
        }
    }
}

TEST_CASE("additivity and integrality")
{
    sampling::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto w1 = sampling::random_weight(rng, 9);
        const auto w2 = sampling::random_weight(rng, 9);
        for (int n = 1; n <= 9; ++n) {
            REQUIRE(wip(n, n, w1 + w2) == wip(n, n, w1) + wip(n, n, w2));
        }
    }
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> w;
        for (int i = 0; i < 10; ++i) {
            w.emplace_back(entry(rng));
        }
        const WeightVector omega(w);
        for (int n = 1; n <= 10; ++n) {
            const auto p = wip(n, n, omega);
            for (const auto &[alpha, c] : p.terms()) {
                REQUIRE(is_integer(c));
            }
        }
    }
}

TEST_CASE("term count")
{
    sampling::Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> w;
        for (int i = 0; i < 10; ++i) {
            w.push_back(abs(sampling::random_rational(rng, 9, 9, true)));
        }
        const WeightVector omega(w);
        for (int n = 1; n <= 10; ++n) {
            CHECK(static_cast<long>(wip(n, n, omega).size()) == oracle::partition_count(n));
        }
    }
    // nonzero but mixed-sign weights can cancel a term
    CHECK(wip(3, 3, weights({1, -1, 1})) == poly("t1^3 + t3"));
}

TEST_CASE("weight detection")
{
    const auto f3 = detect_weight(poly("t1^3 + 2t1t2 + t3"));
    REQUIRE(f3);
    CHECK(f3->take(3) == std::vector<Rational>{1, 1, 1});

    const auto s31 = detect_weight(schur_reflect(Partition{3, 1}));
    REQUIRE(s31);
    CHECK(s31->take(4) == std::vector<Rational>{0, -1, -1, -1});

    CHECK_FALSE(detect_weight(poly("t2^2 - t1t3")).has_value());
    CHECK(detect_weight(poly("t1^2")).has_value());

    sampling::Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        const auto w = sampling::random_weight(rng, 8);
        for (int n = 1; n <= 8; ++n) {
            const auto d = detect_weight(wip(n, n, w));
            REQUIRE(d);
            REQUIRE(equal_prefix(*d, w, n));
        }
    }
}

TEST_CASE("generating series")
{
    const auto g = generating_series(WeightVector::ones(), 2, 3);
    CHECK(g[0].is_zero());
    CHECK(g[1] == poly("t1"));
    CHECK(g[2] == poly("t1^2 + t2"));
    CHECK(g[3] == poly("t1^3 + 2t1t2"));

    const auto zero = generating_series(WeightVector::zero(), 3, 4);
    for (int n = 0; n <= 4; ++n) {
        CHECK(zero[n].is_zero());
    }

    const auto glp = generating_series(weights({1, 2, 3}), 3, 3);
    for (int n = 1; n <= 3; ++n) {
        CHECK(glp[n] == wip(n, 3, WeightVector::naturals()));
    }

    sampling::Rng rng(23);
    const auto w = sampling::random_weight(rng, 5);
    const auto series = generating_series(w, 5, 8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(series[n] == wip(n, 5, w));
    }
}

TEST_CASE("basis products")
{
    CHECK(basis_products(Partition{1, 1}, WeightVector::ones(), 2) == poly("t1^2"));
    CHECK(basis_products(Partition{2, 1}, weights({1, 1}), 2) == poly("t1^3 + t1t2"));
    CHECK(basis_products(Partition{2}, weights({1, 2}), 2) == poly("t1^2 + 2t2"));
}
