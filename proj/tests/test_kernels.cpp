#include <doctest.h>

#include <omp.h>

#include <isobar/kernels.hpp>
#include <isobar/roots.hpp>
#include <isobar/sampling.hpp>
#include <isobar/wip.hpp>

using namespace isobar;

// Force a real team even on a single-core machine.
struct ThreadGuard {
    int saved = omp_get_max_threads();
    ThreadGuard() { omp_set_num_threads(4); }
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

TEST_CASE("parallel tabulation equals serial")
{
    ThreadGuard guard;
    const auto omega = WeightVector::naturals();
    const auto q = make_rational(-2, 3);
    for (int n : {1, 5, 12, 18}) {
        const kernels::CoefficientFn w = [&](const ExponentVector &a) { return wip_coefficient(a, omega); };
        const kernels::CoefficientFn h = [&](const ExponentVector &a) { return l_coefficient(a, omega, q); };
        REQUIRE(kernels::tabulate_parallel(n, n, w) == kernels::tabulate_serial(n, n, w));
        REQUIRE(kernels::tabulate_parallel(n, 4, h) == kernels::tabulate_serial(n, 4, h));
    }
}

TEST_CASE("parallel multiplication equals serial")
{
    ThreadGuard guard;
    sampling::Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = sampling::random_polynomial(rng, 3 + trial, 6);
        const auto q = sampling::random_polynomial(rng, 9 - trial % 4, 9);
        REQUIRE(kernels::multiply_parallel(p, q) == kernels::multiply_serial(p, q));
    }
    // large enough to take the parallel path inside poly_mul
    const auto a = wip(14, 14, WeightVector::ones());
    const auto b = wip(14, 14, WeightVector::naturals());
    REQUIRE(a.size() * b.size() >= kernels::parallel_multiply_threshold);
    REQUIRE(poly_mul(a, b) == kernels::multiply_serial(a, b));
    REQUIRE(kernels::multiply_parallel(b, a) == kernels::multiply_serial(a, b));
}

TEST_CASE("parallel level product equals the serial sum")
{
    ThreadGuard guard;
    const auto a = root_sequence(5, 9, WeightVector::naturals(), make_rational(1, 3));
    const auto b = root_sequence(5, 9, WeightVector::naturals(), make_rational(-5, 2));
    const auto r = level_product(a, b);
    for (int n = 0; n <= 9; ++n) {
        IsobaricPolynomial expected(n);
        for (int i = 0; i <= n; ++i) {
            expected += kernels::multiply_serial(a[i], b[n - i]);
        }
        REQUIRE(r[n] == expected);
    }
}
