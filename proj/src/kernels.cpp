#include <isobar/kernels.hpp>

#include <cstddef>
#include <utility>
#include <vector>

#include <omp.h>

namespace isobar::kernels
{

IsobaricPolynomial tabulate_serial(int n, int k, const CoefficientFn &coeff)
{
    IsobaricPolynomial p(n);
    for (const auto &alpha : exponents_of_level(n, k)) {
        p.add_term(alpha, coeff(alpha));
    }
    return p;
}

IsobaricPolynomial tabulate_parallel(int n, int k, const CoefficientFn &coeff)
{
    const auto alphas = exponents_of_level(n, k);
    const auto count = static_cast<std::ptrdiff_t>(alphas.size());
    std::vector<Rational> values(alphas.size());

    ErrorSlot errors;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        errors.guard([&] { values[static_cast<std::size_t>(i)] = coeff(alphas[static_cast<std::size_t>(i)]); });
    }
    errors.rethrow();

    IsobaricPolynomial p(n);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        p.add_term(alphas[i], values[i]);
    }
    return p;
}

IsobaricPolynomial multiply_serial(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    IsobaricPolynomial r(p.level() + q.level());
    for (const auto &[a, ca] : p.terms()) {
        for (const auto &[b, cb] : q.terms()) {
            r.add_term(a + b, ca * cb);
        }
    }
    return r;
}

IsobaricPolynomial multiply_parallel(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    const int level = p.level() + q.level();
    const std::vector<std::pair<ExponentVector, Rational>> left(p.terms().begin(), p.terms().end());
    const auto count = static_cast<std::ptrdiff_t>(left.size());

    std::vector<IsobaricPolynomial> partial(static_cast<std::size_t>(omp_get_max_threads()), IsobaricPolynomial(level));

    ErrorSlot errors;
#pragma omp parallel
    {
        auto &mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            errors.guard([&] {
                const auto &[a, ca] = left[static_cast<std::size_t>(i)];
                for (const auto &[b, cb] : q.terms()) {
                    mine.add_term(a + b, ca * cb);
                }
            });
        }
    }
    errors.rethrow();

    IsobaricPolynomial r(level);
    for (const auto &part : partial) {
        r += part;
    }
    return r;
}

int max_threads() noexcept
{
    return omp_get_max_threads();
}

void ErrorSlot::capture() noexcept
{
#pragma omp critical(isobar_error_slot)
    {
        if (!error_) {
            error_ = std::current_exception();
        }
    }
}

void ErrorSlot::rethrow() const
{
    if (error_) {
        std::rethrow_exception(error_);
    }
}

} // namespace isobar::kernels
