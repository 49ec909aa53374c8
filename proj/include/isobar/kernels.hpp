#ifndef ISOBAR_KERNELS_HPP
#define ISOBAR_KERNELS_HPP

#include <exception>
#include <functional>

#include <isobar/exponent.hpp>
#include <isobar/polynomial.hpp>
#include <isobar/rational.hpp>

// Data-parallel inner loops. Each kernel has a serial reference version that
// the tests compare against and the benchmark measures; the library calls the
// OpenMP version. Rational arithmetic is exact, so per-thread partial results
// merged in a fixed order reproduce the serial result bit for bit.
namespace isobar::kernels
{

using CoefficientFn = std::function<Rational(const ExponentVector &)>;

// sum over alpha in exponents_of_level(n, k) of coeff(alpha) t^alpha.
// coeff must be safe to call concurrently.
IsobaricPolynomial tabulate_serial(int n, int k, const CoefficientFn &coeff);
IsobaricPolynomial tabulate_parallel(int n, int k, const CoefficientFn &coeff);

IsobaricPolynomial multiply_serial(const IsobaricPolynomial &p, const IsobaricPolynomial &q);
IsobaricPolynomial multiply_parallel(const IsobaricPolynomial &p, const IsobaricPolynomial &q);

// Products below this many term pairs stay serial inside poly_mul.
inline constexpr std::size_t parallel_multiply_threshold = 4096;

int max_threads() noexcept;

// Exceptions must not leave an OpenMP region. Loop bodies run under guard();
// the first exception raised is rethrown by rethrow() once the region closes.
class ErrorSlot
{
public:
    template <class Body> void guard(Body &&body) noexcept
    {
        try {
            body();
        } catch (...) {
            capture();
        }
    }
    void rethrow() const;

private:
    void capture() noexcept;
    std::exception_ptr error_;
};

} // namespace isobar::kernels

#endif
