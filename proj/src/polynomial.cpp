#include <isobar/polynomial.hpp>

#include <string>
#include <utility>

#include <isobar/errors.hpp>
#include <isobar/kernels.hpp>

namespace isobar
{

IsobaricPolynomial::IsobaricPolynomial(int level) : level_(level)
{
    if (level < 0) {
        throw domain_error("level must be non-negative");
    }
}

IsobaricPolynomial IsobaricPolynomial::constant(const Rational &value)
{
    IsobaricPolynomial p(0);
    p.add_term(ExponentVector{}, value);
    return p;
}

IsobaricPolynomial IsobaricPolynomial::monomial(const ExponentVector &alpha, const Rational &coeff)
{
    IsobaricPolynomial p(alpha.level());
    p.add_term(alpha, coeff);
    return p;
}

IsobaricPolynomial IsobaricPolynomial::variable(int j)
{
    return monomial(ExponentVector::unit(j));
}

Rational IsobaricPolynomial::coefficient(const ExponentVector &alpha) const
{
    const auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void IsobaricPolynomial::add_term(const ExponentVector &alpha, const Rational &coeff)
{
    if (alpha.level() != level_) {
        throw grading_error("term of level " + std::to_string(alpha.level()) + " added to a polynomial of level "
                            + std::to_string(level_));
    }
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

int IsobaricPolynomial::max_variable() const noexcept
{
    int m = 0;
    for (const auto &[alpha, c] : terms_) {
        m = std::max(m, alpha.box());
    }
    return m;
}

IsobaricPolynomial &IsobaricPolynomial::operator+=(const IsobaricPolynomial &other)
{
    if (other.level_ != level_) {
        throw grading_error("cannot add polynomials of levels " + std::to_string(level_) + " and "
                            + std::to_string(other.level_));
    }
    for (const auto &[alpha, c] : other.terms_) {
        add_term(alpha, c);
    }
    return *this;
}

IsobaricPolynomial &IsobaricPolynomial::operator-=(const IsobaricPolynomial &other)
{
    if (other.level_ != level_) {
        throw grading_error("cannot subtract polynomials of levels " + std::to_string(level_) + " and "
                            + std::to_string(other.level_));
    }
    for (const auto &[alpha, c] : other.terms_) {
        add_term(alpha, -c);
    }
    return *this;
}

IsobaricPolynomial &IsobaricPolynomial::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[alpha, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

IsobaricPolynomial poly_add(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    IsobaricPolynomial r = p;
    r += q;
    return r;
}

IsobaricPolynomial poly_sub(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    IsobaricPolynomial r = p;
    r -= q;
    return r;
}

IsobaricPolynomial poly_mul(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    if (p.size() * q.size() >= kernels::parallel_multiply_threshold) {
        return kernels::multiply_parallel(p, q);
    }
    return kernels::multiply_serial(p, q);
}

IsobaricPolynomial poly_scale(const IsobaricPolynomial &p, const Rational &scalar)
{
    IsobaricPolynomial r = p;
    r *= scalar;
    return r;
}

IsobaricPolynomial times_variable(const IsobaricPolynomial &p, int j, const Rational &coeff)
{
    IsobaricPolynomial r(p.level() + j);
    if (coeff == 0) {
        return r;
    }
    for (const auto &[alpha, c] : p.terms()) {
        r.add_term(alpha.raised(j), c * coeff);
    }
    return r;
}

Rational poly_evaluate(const IsobaricPolynomial &p, std::span<const Rational> point)
{
    if (static_cast<int>(point.size()) < p.max_variable()) {
        throw arity_error("evaluation point has " + std::to_string(point.size()) + " coordinates but t"
                          + std::to_string(p.max_variable()) + " occurs");
    }
    Rational total = 0;
    Rational power;
    for (const auto &[alpha, c] : p.terms()) {
        Rational term = c;
        for (int j = 1; j <= alpha.box() && term != 0; ++j) {
            const int e = alpha[j];
            if (e == 0) {
                continue;
            }
            const Rational &x = point[static_cast<std::size_t>(j - 1)];
            mpz_pow_ui(power.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(power.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
            power.canonicalize();
            term *= power;
        }
        total += term;
    }
    return total;
}

IsobaricPolynomial truncate(const IsobaricPolynomial &p, int k)
{
    if (k < 1) {
        throw domain_error("truncation needs k >= 1");
    }
    IsobaricPolynomial r(p.level());
    for (const auto &[alpha, c] : p.terms()) {
        if (alpha.box() <= k) {
            r.add_term(alpha, c);
        }
    }
    return r;
}

IsobaricPolynomial operator+(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    return poly_add(p, q);
}

IsobaricPolynomial operator-(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    return poly_sub(p, q);
}

IsobaricPolynomial operator-(const IsobaricPolynomial &p)
{
    return poly_scale(p, -1);
}

IsobaricPolynomial operator*(const IsobaricPolynomial &p, const IsobaricPolynomial &q)
{
    return poly_mul(p, q);
}

IsobaricPolynomial operator*(const Rational &scalar, const IsobaricPolynomial &p)
{
    return poly_scale(p, scalar);
}

IsobaricSequence::IsobaricSequence(int truncation_k, std::vector<IsobaricPolynomial> polys)
    : truncation_k_(truncation_k), polys_(std::move(polys))
{
    if (truncation_k_ < 1) {
        throw shape_error("sequence truncation must be >= 1");
    }
    if (polys_.empty()) {
        throw shape_error("sequence needs at least the level-0 entry");
    }
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        if (polys_[n].level() != static_cast<int>(n)) {
            throw shape_error("sequence entry " + std::to_string(n) + " has level "
                              + std::to_string(polys_[n].level()));
        }
        if (polys_[n].max_variable() > truncation_k_) {
            throw shape_error("sequence entry " + std::to_string(n) + " uses t"
                              + std::to_string(polys_[n].max_variable()) + " beyond truncation "
                              + std::to_string(truncation_k_));
        }
    }
}

IsobaricSequence IsobaricSequence::identity(int truncation_k, int top_level)
{
    if (top_level < 0) {
        throw shape_error("top level must be non-negative");
    }
    std::vector<IsobaricPolynomial> polys;
    polys.reserve(static_cast<std::size_t>(top_level) + 1);
    polys.push_back(IsobaricPolynomial::constant(1));
    for (int n = 1; n <= top_level; ++n) {
        polys.emplace_back(n);
    }
    return IsobaricSequence(truncation_k, std::move(polys));
}

} // namespace isobar
