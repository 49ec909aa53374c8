#include <isobar/roots.hpp>

#include <string>
#include <vector>

#include <isobar/errors.hpp>
#include <isobar/kernels.hpp>

namespace isobar
{

Rational b_rising(const Rational &q, int j)
{
    if (j < 0) {
        return 0;
    }
    Rational r = q;
    for (int i = 1; i <= j; ++i) {
        r *= q + i;
    }
    return r;
}

Rational b_falling(const Rational &q, int j)
{
    if (j < 0) {
        return 0;
    }
    Rational r = q;
    for (int i = 1; i <= j; ++i) {
        r *= q - i;
    }
    return r;
}

WeightMonomialPoly WeightMonomialPoly::monomial(const ExponentVector &gamma, const Rational &coeff)
{
    WeightMonomialPoly f;
    f.add_term(gamma, coeff);
    return f;
}

Rational WeightMonomialPoly::coefficient(const ExponentVector &gamma) const
{
    const auto it = terms_.find(gamma);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeightMonomialPoly::add_term(const ExponentVector &gamma, const Rational &coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(gamma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational WeightMonomialPoly::evaluate(const WeightVector &omega) const
{
    Rational total = 0;
    for (const auto &[gamma, c] : terms_) {
        Rational term = c;
        for (int i = 1; i <= gamma.box(); ++i) {
            for (int e = 0; e < gamma[i]; ++e) {
                term *= omega[i];
            }
        }
        total += term;
    }
    return total;
}

WeightMonomialPoly &WeightMonomialPoly::operator+=(const WeightMonomialPoly &other)
{
    for (const auto &[gamma, c] : other.terms_) {
        add_term(gamma, c);
    }
    return *this;
}

WeightMonomialPoly operator*(const WeightMonomialPoly &a, const WeightMonomialPoly &b)
{
    WeightMonomialPoly r;
    for (const auto &[x, cx] : a.terms_) {
        for (const auto &[y, cy] : b.terms_) {
            r.add_term(x + y, cx * cy);
        }
    }
    return r;
}

WeightMonomialPoly operator*(const Rational &c, const WeightMonomialPoly &a)
{
    WeightMonomialPoly r;
    for (const auto &[x, cx] : a.terms_) {
        r.add_term(x, c * cx);
    }
    return r;
}

WeightMonomialPoly total_differential_step(const WeightMonomialPoly &f)
{
    WeightMonomialPoly r;
    for (const auto &[gamma, c] : f.terms()) {
        for (int i = 1; i <= gamma.box(); ++i) {
            if (gamma[i] > 0) {
                r.add_term(gamma.lowered(i), c * gamma[i]);
            }
        }
    }
    return r;
}

WeightMonomialPoly total_differential_recursive(int p, const ExponentVector &alpha)
{
    if (p < 0) {
        throw domain_error("differential order must be non-negative");
    }
    WeightMonomialPoly f = WeightMonomialPoly::monomial(alpha);
    for (int step = 0; step < p && !f.is_zero(); ++step) {
        f = total_differential_step(f);
    }
    return f;
}

namespace
{

void enumerate_below(const ExponentVector &alpha, int index, int remaining, std::vector<int> &gamma,
                     const Rational &scale, WeightMonomialPoly &out)
{
    if (index > alpha.box()) {
        if (remaining == 0) {
            out.add_term(ExponentVector(gamma), scale);
        }
        return;
    }
    const int a = alpha[index];
    // removing s from coordinate index leaves gamma_index = a - s
    for (int s = 0; s <= std::min(a, remaining); ++s) {
        gamma[static_cast<std::size_t>(index - 1)] = a - s;
        enumerate_below(alpha, index + 1, remaining - s, gamma, scale * Rational(binomial(a, a - s)), out);
    }
}

// Coefficients of prod_i (1 + w_i x)^{a_i}, lowest degree first.
std::vector<Rational> lowering_polynomial(const ExponentVector &alpha, const WeightVector &omega)
{
    std::vector<Rational> c{Rational(1)};
    for (int i = 1; i <= alpha.box(); ++i) {
        if (alpha[i] == 0) {
            continue;
        }
        const Rational w = omega[i];
        for (int e = 0; e < alpha[i]; ++e) {
            c.emplace_back(0);
            for (std::size_t d = c.size() - 1; d >= 1; --d) {
                c[d] += w * c[d - 1];
            }
        }
    }
    return c;
}

} // namespace

WeightMonomialPoly total_differential(int p, const ExponentVector &alpha)
{
    if (p < 0) {
        throw domain_error("differential order must be non-negative");
    }
    WeightMonomialPoly out;
    if (p > alpha.depth()) {
        return out;
    }
    std::vector<int> gamma(static_cast<std::size_t>(alpha.box()), 0);
    enumerate_below(alpha, 1, p, gamma, Rational(factorial(p)), out);
    return out;
}

Rational total_differential_at(int p, const ExponentVector &alpha, const WeightVector &omega)
{
    if (p < 0) {
        throw domain_error("differential order must be non-negative");
    }
    const int d = alpha.depth();
    if (p > d) {
        return 0;
    }
    const auto c = lowering_polynomial(alpha, omega);
    return Rational(factorial(p)) * c[static_cast<std::size_t>(d - p)];
}

Rational l_coefficient(const ExponentVector &alpha, const WeightVector &omega, const Rational &q)
{
    const int d = alpha.depth();
    if (d == 0) {
        throw domain_error("l_coefficient needs depth(alpha) >= 1");
    }
    // D_{d-j-1}(w^alpha) = (d-j-1)! [x^{j+1}] prod (1 + w_i x)^{a_i}
    const auto c = lowering_polynomial(alpha, omega);
    Rational sum = 0;
    Rational falling = q; // B_{-(j)}^q
    for (int j = 0; j < d; ++j) {
        if (j > 0) {
            falling *= q - j;
        }
        if (falling == 0) {
            break;
        }
        sum += Rational(binomial(d - 1, j) * factorial(d - j - 1)) * falling * c[static_cast<std::size_t>(j + 1)];
    }
    return sum / Rational(factorial_product(alpha));
}

IsobaricPolynomial root(const RootQuery &query)
{
    if (query.n < 0 || query.k < 1) {
        throw domain_error("root needs n >= 0 and k >= 1");
    }
    if (query.n == 0) {
        return IsobaricPolynomial::constant(1);
    }
    return kernels::tabulate_parallel(query.n, query.k, [&query](const ExponentVector &alpha) {
        return l_coefficient(alpha, query.omega, query.q);
    });
}

IsobaricSequence root_sequence(int k, int top_level, const WeightVector &omega, const Rational &q)
{
    if (top_level < 0) {
        throw domain_error("root_sequence needs N >= 0");
    }
    std::vector<IsobaricPolynomial> polys;
    polys.reserve(static_cast<std::size_t>(top_level) + 1);
    for (int n = 0; n <= top_level; ++n) {
        polys.push_back(root({n, k, omega, q}));
    }
    return IsobaricSequence(k, std::move(polys));
}

namespace
{

void check_shapes(const IsobaricSequence &a, const IsobaricSequence &b)
{
    if (a.truncation() != b.truncation()) {
        throw shape_error("level product of sequences truncated at k = " + std::to_string(a.truncation()) + " and k = "
                          + std::to_string(b.truncation()));
    }
    if (a.top_level() != b.top_level()) {
        throw shape_error("level product of sequences through levels " + std::to_string(a.top_level()) + " and "
                          + std::to_string(b.top_level()));
    }
}

} // namespace

IsobaricSequence level_product(const IsobaricSequence &a, const IsobaricSequence &b)
{
    check_shapes(a, b);
    const int top = a.top_level();
    std::vector<IsobaricPolynomial> r(static_cast<std::size_t>(top) + 1);

    kernels::ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= top; ++n) {
        errors.guard([&] {
            IsobaricPolynomial rn(n);
            for (int i = 0; i <= n; ++i) {
                if (!a[i].is_zero() && !b[n - i].is_zero()) {
                    rn += kernels::multiply_serial(a[i], b[n - i]);
                }
            }
            r[static_cast<std::size_t>(n)] = std::move(rn);
        });
    }
    errors.rethrow();
    return IsobaricSequence(a.truncation(), std::move(r));
}

IsobaricSequence level_inverse(const IsobaricSequence &a)
{
    const Rational a0 = a[0].coefficient(ExponentVector{});
    if (a0 == 0) {
        throw not_invertible("sequence with zero constant term has no level inverse");
    }
    const Rational inv0 = 1 / a0;
    std::vector<IsobaricPolynomial> b;
    b.reserve(static_cast<std::size_t>(a.top_level()) + 1);
    b.push_back(IsobaricPolynomial::constant(inv0));
    for (int n = 1; n <= a.top_level(); ++n) {
        IsobaricPolynomial acc(n);
        for (int i = 1; i <= n; ++i) {
            if (!a[i].is_zero() && !b[static_cast<std::size_t>(n - i)].is_zero()) {
                acc += poly_mul(a[i], b[static_cast<std::size_t>(n - i)]);
            }
        }
        acc *= -inv0;
        b.push_back(std::move(acc));
    }
    return IsobaricSequence(a.truncation(), std::move(b));
}

IsobaricSequence level_power(const IsobaricSequence &a, int s)
{
    if (s < 0) {
        return level_power(level_inverse(a), -s);
    }
    IsobaricSequence result = IsobaricSequence::identity(a.truncation(), a.top_level());
    for (int i = 0; i < s; ++i) {
        result = level_product(result, a);
    }
    return result;
}

} // namespace isobar
