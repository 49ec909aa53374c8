#include <isobar/verify.hpp>

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>

#include <omp.h>

#include <isobar/reference_table.hpp>
#include <isobar/arith.hpp>
#include <isobar/errors.hpp>
#include <isobar/io.hpp>
#include <isobar/roots.hpp>
#include <isobar/sampling.hpp>
#include <isobar/schur.hpp>
#include <isobar/wip.hpp>

namespace isobar::verify
{

namespace
{

using sampling::Rng;

constexpr std::size_t max_reported_failures = 5;

class Tally
{
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    template <class Describe> void check(bool ok, Describe &&describe)
    {
        ++result_.total;
        if (ok) {
            ++result_.passed;
        } else if (result_.failures.size() < max_reported_failures) {
            result_.failures.push_back(describe());
        }
    }

    SuiteResult finish() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string weight_text(const WeightVector &w, int n)
{
    std::string s = "(";
    for (int i = 1; i <= n; ++i) {
        s += (i > 1 ? "," : "") + to_string(w[i]);
    }
    return s + ")";
}

// All exponent vectors with entries in box 1..max_box and depth <= max_depth.
std::vector<ExponentVector> bounded_exponents(int max_box, int max_depth)
{
    std::vector<ExponentVector> out;
    std::vector<int> entries(static_cast<std::size_t>(max_box), 0);
    const auto rec = [&](auto &&self, int i, int remaining) -> void {
        if (i == max_box) {
            out.emplace_back(entries);
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            entries[static_cast<std::size_t>(i)] = a;
            self(self, i + 1, remaining - a);
        }
        entries[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, max_depth);
    return out;
}

// Sub-vectors beta <= alpha with |beta| = m.
std::vector<ExponentVector> sub_exponents(const ExponentVector &alpha, int m)
{
    std::vector<ExponentVector> out;
    std::vector<int> beta(static_cast<std::size_t>(alpha.box()), 0);
    const auto rec = [&](auto &&self, int i, int remaining) -> void {
        if (i == alpha.box()) {
            if (remaining == 0) {
                out.emplace_back(beta);
            }
            return;
        }
        for (int b = 0; b <= std::min(alpha[i + 1], remaining); ++b) {
            beta[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, remaining - b);
        }
        beta[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, m);
    return out;
}

const std::vector<Rational> &q_grid()
{
    static const std::vector<Rational> grid = {make_rational(1, 2), make_rational(-1, 2), make_rational(1, 3),
                                               make_rational(-2, 3), Rational(2)};
    return grid;
}

std::vector<WeightVector> grid_weights(Rng &rng, int length)
{
    std::vector<WeightVector> w = {WeightVector::ones(), WeightVector::naturals()};
    for (int i = 0; i < 3; ++i) {
        w.push_back(sampling::random_weight(rng, length));
    }
    return w;
}

// [x]_m = x (x - 1) ... (x - m + 1), with [x]_0 = 1.
Rational falling_power(const Rational &x, int m)
{
    return m == 0 ? Rational(1) : b_falling(x, m - 1);
}

LocalSequence convolution_power(const LocalSequence &f, int s)
{
    LocalSequence acc = LocalSequence::identity(f.top_level());
    for (int i = 0; i < s; ++i) {
        acc = dirichlet_convolve(acc, f);
    }
    return acc;
}

// ---------------------------------------------------------------- core

SuiteResult order_and_covers(std::uint64_t)
{
    Tally t("order_and_covers");
    for (int n = 1; n <= 12; ++n) {
        const auto all = exponents_of_level(n, n);
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            t.check(PartitionLess{}(all[i], all[i + 1]) && all[i].box() <= all[i + 1].box(),
                    [&] { return "order breaks at level " + std::to_string(n); });
        }
        for (int i = 1; i <= n; ++i) {
            const ExponentVector expected = ExponentVector({n - i}) + ExponentVector::unit(i);
            const auto first = std::find_if(all.begin(), all.end(), [i](const auto &a) { return a.box() == i; });
            t.check(first != all.end() && *first == expected,
                    [&] { return "smallest box-" + std::to_string(i) + " monomial at level " + std::to_string(n); });
        }
        for (const auto &alpha : all) {
            const auto covers = lattice_covers(alpha);
            const auto support = std::count_if(alpha.entries().begin(), alpha.entries().end(), [](int a) { return a > 0; });
            bool ok = static_cast<long>(covers.size()) == support;
            for (const auto &c : covers) {
                ok = ok && c.below.depth() == alpha.depth() - 1;
            }
            t.check(ok, [&] { return "covers at level " + std::to_string(n); });
        }
    }
    return t.finish();
}

SuiteResult ring_axioms(std::uint64_t seed)
{
    Tally t("ring_axioms");
    Rng rng(seed);
    std::uniform_int_distribution<int> level(0, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const int la = level(rng);
        const int lb = level(rng);
        const int lc = level(rng);
        const auto a = sampling::random_polynomial(rng, la, 6);
        const auto b = sampling::random_polynomial(rng, lb, 6);
        const auto c = sampling::random_polynomial(rng, lc, 6);
        const auto c2 = sampling::random_polynomial(rng, lc, 6);
        t.check(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)), [] { return std::string("associativity"); });
        t.check(poly_mul(a, b) == poly_mul(b, a), [] { return std::string("commutativity"); });
        t.check(poly_mul(a, c + c2) == poly_mul(a, c) + poly_mul(a, c2), [] { return std::string("distributivity"); });
        const auto ab = poly_mul(a, b);
        bool graded = ab.level() == la + lb;
        for (const auto &[alpha, coeff] : ab.terms()) {
            graded = graded && alpha.level() == la + lb;
        }
        t.check(graded, [] { return std::string("homogeneity"); });
    }
    return t.finish();
}

// ---------------------------------------------------------------- wip

SuiteResult wip_triple_route(std::uint64_t seed)
{
    Tally t("wip_triple_route");
    Rng rng(seed);
    constexpr int top = 12;
    for (int trial = 0; trial < 100; ++trial) {
        const auto omega = sampling::random_weight(rng, top);
        const int k = 1 + trial % top;
        const auto rec = wip_levels_via_recursion(top, k, omega);
        const auto conv = wip_levels_via_convolution(top, k, omega);
        for (int n = 1; n <= top; ++n) {
            const auto closed = wip(n, k, omega);
            t.check(closed == rec[static_cast<std::size_t>(n)] && closed == conv[static_cast<std::size_t>(n)], [&] {
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " w=" + weight_text(omega, top);
            });
        }
    }
    return t.finish();
}

SuiteResult wip_lattice(std::uint64_t seed)
{
    Tally t("wip_lattice");
    Rng rng(seed);
    for (int trial = 0; trial < 5; ++trial) {
        const auto omega = sampling::random_weight(rng, 8);
        std::map<ExponentVector, Rational> coeff;
        // Levels increase strictly along covers, so building by level works.
        for (int n = 1; n <= 8; ++n) {
            for (const auto &alpha : exponents_of_level(n, n)) {
                Rational c = 0;
                if (alpha.depth() == 1) {
                    c = omega[alpha.box()];
                } else {
                    for (const auto &cover : lattice_covers(alpha)) {
                        c += coeff.at(cover.below);
                    }
                }
                coeff[alpha] = c;
                t.check(c == wip_coefficient(alpha, omega), [&] { return "level " + std::to_string(n); });
            }
        }
    }
    return t.finish();
}

SuiteResult wip_additivity(std::uint64_t seed)
{
    Tally t("wip_additivity");
    Rng rng(seed);
    for (int trial = 0; trial < 30; ++trial) {
        const auto w1 = sampling::random_weight(rng, 10);
        const auto w2 = trial % 3 == 0 ? WeightVector::naturals() : sampling::random_weight(rng, 10);
        for (int n = 1; n <= 10; ++n) {
            const int k = 1 + (n + trial) % n;
            t.check(wip(n, k, w1 + w2) == wip(n, k, w1) + wip(n, k, w2), [&] { return "n=" + std::to_string(n); });
        }
    }
    return t.finish();
}

SuiteResult wip_integrality(std::uint64_t seed)
{
    Tally t("wip_integrality");
    Rng rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> w;
        for (int i = 0; i < 10; ++i) {
            w.emplace_back(entry(rng));
        }
        const WeightVector omega(std::move(w));
        for (int n = 1; n <= 10; ++n) {
            const auto p = wip(n, n, omega);
            const bool ok = std::all_of(p.terms().begin(), p.terms().end(),
                                        [](const auto &term) { return is_integer(term.second); });
            t.check(ok, [&] { return "n=" + std::to_string(n) + " w=" + weight_text(omega, n); });
        }
    }
    return t.finish();
}

SuiteResult weight_faithfulness(std::uint64_t seed)
{
    Tally t("weight_faithfulness");
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto omega = sampling::random_weight(rng, 8);
        for (int n = 1; n <= 8; ++n) {
            const auto detected = detect_weight(wip(n, n, omega));
            t.check(detected && equal_prefix(*detected, omega, n), [&] { return "n=" + std::to_string(n); });
        }
    }
    return t.finish();
}

SuiteResult wip_term_count(std::uint64_t seed)
{
    Tally t("wip_term_count");
    Rng rng(seed);
    // Nonzero weights of mixed sign can cancel, e.g. w = (1, -1, 1) kills t1 t2,
    // so the full count is asserted for positive weights only.
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> w;
        for (int i = 0; i < 12; ++i) {
            w.push_back(abs(sampling::random_rational(rng, 9, 9, true)));
        }
        const WeightVector omega(std::move(w));
        for (int n = 1; n <= 12; ++n) {
            t.check(wip(n, n, omega).size() == partitions_of(n).size(), [&] { return "n=" + std::to_string(n); });
        }
    }
    const WeightVector mixed({Rational(1), Rational(-1), Rational(1)});
    t.check(wip(3, 3, mixed).size() == partitions_of(3).size() - 1,
            [] { return std::string("mixed-sign cancellation"); });
    return t.finish();
}

// ---------------------------------------------------------------- schur

SuiteResult reference_table(std::uint64_t)
{
    Tally t("reference_table");
    for (const auto &row : published_schur_reflects()) {
        const auto published = parse_poly_text(row.text, row.lambda.size());
        const auto e = schur_reflect(row.lambda, DeterminantBasis::elementary);
        const auto h = schur_reflect(row.lambda, DeterminantBasis::complete);
        t.check(e == published && h == published, [&] {
            return "(" + row.lambda.to_string() + "): computed " + format_poly_text(e) + ", published "
                   + format_poly_text(published);
        });
    }
    return t.finish();
}

SuiteResult determinant_consistency(std::uint64_t)
{
    Tally t("determinant_consistency");
    for (int n = 1; n <= 8; ++n) {
        for (const auto &lambda : partitions_of(n)) {
            const auto e = schur_reflect(lambda, DeterminantBasis::elementary);
            t.check(e.level() == n && e == schur_reflect(lambda, DeterminantBasis::complete),
                    [&] { return "(" + lambda.to_string() + ")"; });
        }
    }
    return t.finish();
}

SuiteResult hook_laws(std::uint64_t)
{
    Tally t("hook_laws");
    for (int n = 1; n <= 8; ++n) {
        for (int r = 0; r < n; ++r) {
            const auto h = hook_reflect(n, r);
            t.check(h == schur_reflect(Partition::hook(n, r)),
                    [&] { return "equivalence n=" + std::to_string(n) + " r=" + std::to_string(r); });
            const auto w = detect_weight(h);
            t.check(w && equal_prefix(*w, hook_weight(r), n),
                    [&] { return "weight n=" + std::to_string(n) + " r=" + std::to_string(r); });
        }
    }
    return t.finish();
}

SuiteResult non_hook_exclusion(std::uint64_t)
{
    Tally t("non_hook_exclusion");
    for (int n = 1; n <= 8; ++n) {
        for (const auto &lambda : partitions_of(n)) {
            const bool weighted = detect_weight(schur_reflect(lambda)).has_value();
            t.check(weighted == lambda.is_hook(), [&] { return "(" + lambda.to_string() + ")"; });
        }
    }
    return t.finish();
}

SuiteResult smallest_monomial(std::uint64_t)
{
    Tally t("smallest_monomial");
    for (int n = 1; n <= 8; ++n) {
        for (const auto &lambda : partitions_of(n)) {
            const auto s = schur_reflect(lambda);
            const auto delta = conjugate(lambda).to_exponent();
            const Rational sign = ((n - lambda[1]) % 2 == 0) ? 1 : -1;
            t.check(!s.is_zero() && s.terms().begin()->first == delta && s.terms().begin()->second == sign,
                    [&] { return "(" + lambda.to_string() + ")"; });
        }
    }
    return t.finish();
}

SuiteResult hook_basis_expansion(std::uint64_t seed)
{
    Tally t("hook_basis_expansion");
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto omega = sampling::random_weight(rng, 9);
        for (int n = 1; n <= 8; ++n) {
            const auto c = to_hook_basis(omega, n);
            IsobaricPolynomial sum(n);
            for (int i = 0; i < n; ++i) {
                sum += poly_scale(hook_reflect(n, i), c[static_cast<std::size_t>(i)]);
            }
            t.check(sum == wip(n, n, omega), [&] { return "n=" + std::to_string(n); });
        }
    }
    return t.finish();
}

SuiteResult character_orthogonality(std::uint64_t)
{
    Tally t("character_orthogonality");
    for (int n = 1; n <= 5; ++n) {
        const auto table = character_table(n);
        const auto size = table.rows.size();
        bool integral = true;
        for (const auto &row : table.entries) {
            integral = std::all_of(row.begin(), row.end(), [](const Rational &x) { return is_integer(x); }) && integral;
        }
        t.check(integral, [&] { return "integer entries n=" + std::to_string(n); });
        t.check(std::all_of(table.entries[0].begin(), table.entries[0].end(), [](const Rational &x) { return x == 1; }),
                [&] { return "trivial row n=" + std::to_string(n); });
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b = 0; b < size; ++b) {
                Rational inner = 0;
                for (std::size_t m = 0; m < size; ++m) {
                    inner += table.at(a, m) * table.at(b, m) / Rational(table.columns[m].centralizer_order());
                }
                t.check(inner == (a == b ? 1 : 0), [&] { return "orthogonality n=" + std::to_string(n); });
            }
        }
    }
    return t.finish();
}

// ---------------------------------------------------------------- roots

SuiteResult root_identity(std::uint64_t seed)
{
    Tally t("root_identity");
    Rng rng(seed);
    for (int n = 1; n <= 10; ++n) {
        t.check(root({n, n, WeightVector::ones(), 1}) == wip(n, n, WeightVector::ones()),
                [&] { return "GFP n=" + std::to_string(n); });
    }
    for (int trial = 0; trial < 5; ++trial) {
        const auto omega = sampling::random_weight(rng, 8);
        for (int n = 1; n <= 8; ++n) {
            t.check(root({n, n, omega, 1}) == wip(n, n, omega), [&] { return "random n=" + std::to_string(n); });
        }
    }
    return t.finish();
}

SuiteResult root_group_law(std::uint64_t seed)
{
    Tally t("root_group_law");
    Rng rng(seed);
    constexpr int top = 6;
    for (const auto &omega : grid_weights(rng, top)) {
        for (const auto &q1 : q_grid()) {
            const auto h1 = root_sequence(top, top, omega, q1);
            for (const auto &q2 : q_grid()) {
                const auto h2 = root_sequence(top, top, omega, q2);
                t.check(level_product(h1, h2) == root_sequence(top, top, omega, q1 + q2), [&] {
                    return "q=" + to_string(q1) + " q'=" + to_string(q2) + " w=" + weight_text(omega, top);
                });
            }
        }
    }
    return t.finish();
}

SuiteResult root_inverse(std::uint64_t seed)
{
    Tally t("root_inverse");
    Rng rng(seed);
    constexpr int top = 5;
    for (const auto &omega : grid_weights(rng, top)) {
        for (const auto &q : q_grid()) {
            const auto h = root_sequence(top, top, omega, q);
            const auto inv = level_inverse(h);
            t.check(inv == root_sequence(top, top, omega, -q), [&] { return "q=" + to_string(q); });
            const auto id = IsobaricSequence::identity(top, top);
            t.check(level_product(h, inv) == id && level_product(inv, h) == id,
                    [&] { return "two-sided q=" + to_string(q); });
        }
    }
    return t.finish();
}

SuiteResult root_integer_power(std::uint64_t)
{
    Tally t("root_integer_power");
    constexpr int top = 6;
    const auto f = gfp_sequence(top, top);
    for (int s = -3; s <= 4; ++s) {
        t.check(root_sequence(top, top, WeightVector::ones(), s) == level_power(f, s),
                [&] { return "s=" + std::to_string(s); });
    }
    return t.finish();
}

SuiteResult root_specialization(std::uint64_t)
{
    Tally t("root_specialization");
    const auto ones = WeightVector::ones();
    for (int n = 1; n <= 8; ++n) {
        for (const auto &alpha : exponents_of_level(n, n)) {
            const int d = alpha.depth();
            for (int j = 0; j <= d; ++j) {
                t.check(total_differential_at(j, alpha, ones) == Rational(factorial(d) / factorial(d - j)),
                        [&] { return "differential at ones, level " + std::to_string(n); });
            }
            for (const auto &q : q_grid()) {
                const Rational expected = b_rising(q, d - 1) / Rational(factorial_product(alpha));
                t.check(l_coefficient(alpha, ones, q) == expected,
                        [&] { return "coefficient, level " + std::to_string(n) + " q=" + to_string(q); });
            }
        }
    }
    return t.finish();
}

SuiteResult rising_from_falling(std::uint64_t seed)
{
    Tally t("rising_from_falling");
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto q = sampling::random_rational(rng);
        for (int p = 0; p <= 10; ++p) {
            Rational sum = 0;
            for (int j = 0; j <= p; ++j) {
                sum += Rational(binomial(p, j) * factorial(p + 1) / factorial(j + 1)) * b_falling(q, j);
            }
            t.check(sum == b_rising(q, p), [&] { return "p=" + std::to_string(p) + " q=" + to_string(q); });
        }
    }
    return t.finish();
}

SuiteResult falling_vandermonde(std::uint64_t seed)
{
    Tally t("falling_vandermonde");
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto q1 = sampling::random_rational(rng);
        const auto q2 = sampling::random_rational(rng);
        for (int n = 0; n <= 10; ++n) {
            Rational full = 0;
            Rational truncated = 0;
            for (int j = 0; j <= n + 1; ++j) {
                full += Rational(binomial(n + 1, j)) * falling_power(q1, n + 1 - j) * falling_power(q2, j);
                truncated += Rational(binomial(n + 1, j)) * b_falling(q1, n - j) * b_falling(q2, j - 1);
            }
            const auto desc = [&] { return "n=" + std::to_string(n) + " q=" + to_string(q1) + " q'=" + to_string(q2); };
            t.check(full == b_falling(q1 + q2, n), desc);
            // Dropping the empty products loses exactly the two end terms.
            t.check(truncated == b_falling(q1 + q2, n) - b_falling(q1, n) - b_falling(q2, n), desc);
        }
    }
    return t.finish();
}

SuiteResult differential_product(std::uint64_t)
{
    Tally t("differential_product");
    for (const auto &alpha : bounded_exponents(4, 5)) {
        const int n = alpha.depth();
        std::map<std::pair<ExponentVector, int>, WeightMonomialPoly> memo;
        const auto d = [&memo](int p, const ExponentVector &a) -> const WeightMonomialPoly & {
            auto [it, inserted] = memo.try_emplace({a, p});
            if (inserted) {
                it->second = total_differential(p, a);
            }
            return it->second;
        };
        for (int m = 0; m <= n; ++m) {
            const auto betas = sub_exponents(alpha, m);
            for (int p = 0; p <= n; ++p) {
                for (int q = 0; p + q <= n; ++q) {
                    WeightMonomialPoly lhs;
                    for (const auto &beta : betas) {
                        Integer c = 1;
                        for (int i = 1; i <= alpha.box(); ++i) {
                            c *= binomial(alpha[i], beta[i]);
                        }
                        lhs += Rational(c) * (d(p, beta) * d(q, alpha - beta));
                    }
                    const auto rhs = Rational(binomial(n - p - q, m - p)) * d(p + q, alpha);
                    t.check(lhs == rhs, [&] {
                        return "m=" + std::to_string(m) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
                    });
                }
            }
        }
    }
    return t.finish();
}

SuiteResult binomial_convolution(std::uint64_t)
{
    Tally t("binomial_convolution");
    for (int n = 1; n <= 12; ++n) {
        for (int p = 0; p < n; ++p) {
            for (int q = 0; p + q < n; ++q) {
                Integer sum = 0;
                for (int i = 0; i <= n - p - q; ++i) {
                    sum += binomial(p + i, p) * binomial(n - p - i, q);
                }
                t.check(sum == binomial(n + 1, p + q + 1), [&] {
                    return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
                });
            }
        }
    }
    return t.finish();
}

SuiteResult differential_closed_form(std::uint64_t seed)
{
    Tally t("differential_closed_form");
    Rng rng(seed);
    const auto omega = sampling::random_weight(rng, 4);
    for (const auto &alpha : bounded_exponents(4, 6)) {
        const int d = alpha.depth();
        for (int p = 0; p <= d + 1; ++p) {
            const auto closed = total_differential(p, alpha);
            t.check(closed == total_differential_recursive(p, alpha), [&] { return "p=" + std::to_string(p); });
            t.check(closed.evaluate(omega) == total_differential_at(p, alpha, omega),
                    [&] { return "evaluation p=" + std::to_string(p); });
        }
        if (d >= 1) {
            WeightMonomialPoly expected;
            for (int i = 1; i <= alpha.box(); ++i) {
                expected.add_term(ExponentVector::unit(i), Rational(factorial(d - 1) * alpha[i]));
            }
            t.check(total_differential(d - 1, alpha) == expected, [] { return std::string("top differential"); });
        }
    }
    return t.finish();
}

// ---------------------------------------------------------------- arith

CoreFunctionSpec random_spec(Rng &rng, int k)
{
    CoreFunctionSpec spec;
    for (int i = 0; i < k; ++i) {
        spec.a.push_back(sampling::random_rational(rng, 5, 4));
    }
    return spec;
}

SuiteResult arith_inverse_law(std::uint64_t seed)
{
    Tally t("arith_inverse_law");
    Rng rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 1 + trial % 5;
        const int top = 10;
        const auto spec = random_spec(rng, k);
        const auto product = dirichlet_convolve(positive_values(spec, top), negative_values(spec, top));
        t.check(product == LocalSequence::identity(top), [&] { return "k=" + std::to_string(k); });
    }
    return t.finish();
}

SuiteResult arith_power_consistency(std::uint64_t seed)
{
    Tally t("arith_power_consistency");
    Rng rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 1 + trial % 4;
        std::vector<Rational> tv;
        std::vector<Rational> local = {1};
        for (int i = 0; i < k; ++i) {
            tv.push_back(sampling::random_rational(rng));
            local.push_back(tv.back());
        }
        local.resize(9, Rational(0));
        const LocalSequence f(local);
        for (int s = 0; s <= 5; ++s) {
            const auto iterated = convolution_power(f, s);
            for (int n = 0; n <= 8; ++n) {
                const auto value = conv_power_int(tv, s, n);
                t.check(value == iterated[n] && value == poly_evaluate(conv_power_poly(k, s, n), tv),
                        [&] { return "s=" + std::to_string(s) + " n=" + std::to_string(n); });
            }
        }
    }
    return t.finish();
}

SuiteResult arith_root_law(std::uint64_t seed)
{
    Tally t("arith_root_law");
    Rng rng(seed);
    std::vector<CoreFunctionSpec> specs = {CoreFunctionSpec{{1, 1}}, CoreFunctionSpec{{2}}};
    for (int i = 0; i < 3; ++i) {
        specs.push_back(random_spec(rng, 1 + i));
    }
    constexpr int top = 8;
    for (const auto &spec : specs) {
        for (const auto &q1 : q_grid()) {
            for (const auto &q2 : q_grid()) {
                const auto lhs = dirichlet_convolve(rational_power(spec, q1, top), rational_power(spec, q2, top));
                t.check(lhs == rational_power(spec, q1 + q2, top),
                        [&] { return "q=" + to_string(q1) + " q'=" + to_string(q2); });
            }
        }
        t.check(rational_power(spec, 1, top) == positive_values(spec, top), [] { return std::string("q=1"); });
        t.check(rational_power(spec, -1, top) == negative_values(spec, top), [] { return std::string("q=-1"); });
    }
    return t.finish();
}

SuiteResult arith_multiplicativity(std::uint64_t seed)
{
    Tally t("arith_multiplicativity");
    Rng rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(1, 1'000'000);
    const CoreFunctionSpec spec{{1, 1}};
    const auto q = make_rational(1, 2);
    int found = 0;
    while (found < 100) {
        const auto m = pick(rng);
        const auto n = pick(rng);
        if (std::gcd(m, n) != 1) {
            continue;
        }
        ++found;
        t.check(evaluate_global(spec, q, m * n) == evaluate_global(spec, q, m) * evaluate_global(spec, q, n),
                [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
    }
    return t.finish();
}

SuiteResult arith_local_global(std::uint64_t seed)
{
    Tally t("arith_local_global");
    Rng rng(seed);
    const auto spec = random_spec(rng, 3);
    const auto q = make_rational(-2, 3);
    constexpr int top = 12;
    const auto local = rational_power(spec, q, top);
    for (std::int64_t p : {2, 3, 5, 7, 101}) {
        std::int64_t pe = 1;
        for (int e = 0; e <= top && pe <= 1'000'000'000'000LL; ++e) {
            t.check(evaluate_global(spec, q, pe) == local[e],
                    [&] { return std::to_string(p) + "^" + std::to_string(e); });
            if (pe > 1'000'000'000'000LL / p) {
                break;
            }
            pe *= p;
        }
    }
    return t.finish();
}

// ---------------------------------------------------------------- io

SuiteResult serialization_round_trip(std::uint64_t seed)
{
    Tally t("serialization_round_trip");
    Rng rng(seed);
    std::uniform_int_distribution<int> level(0, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = level(rng);
        const auto p = sampling::random_polynomial(rng, n, std::max(n, 1));
        const auto json_back = poly_from_json(nlohmann::json::parse(format_poly(p, OutputFormat::json)));
        t.check(json_back == p, [&] { return "json: " + format_poly_text(p); });
        t.check(parse_poly_text(format_poly_text(p), n) == p, [&] { return "text: " + format_poly_text(p); });
    }
    return t.finish();
}

} // namespace

const std::vector<Suite> &suites()
{
    static const std::vector<Suite> all = {
        {"order_and_covers", order_and_covers},
        {"ring_axioms", ring_axioms},
        {"wip_triple_route", wip_triple_route},
        {"wip_lattice", wip_lattice},
        {"wip_additivity", wip_additivity},
        {"wip_integrality", wip_integrality},
        {"weight_faithfulness", weight_faithfulness},
        {"wip_term_count", wip_term_count},
        {"reference_table", reference_table},
        {"determinant_consistency", determinant_consistency},
        {"hook_laws", hook_laws},
        {"non_hook_exclusion", non_hook_exclusion},
        {"smallest_monomial", smallest_monomial},
        {"hook_basis_expansion", hook_basis_expansion},
        {"character_orthogonality", character_orthogonality},
        {"root_identity", root_identity},
        {"root_group_law", root_group_law},
        {"root_inverse", root_inverse},
        {"root_integer_power", root_integer_power},
        {"root_specialization", root_specialization},
        {"rising_from_falling", rising_from_falling},
        {"falling_vandermonde", falling_vandermonde},
        {"differential_product", differential_product},
        {"binomial_convolution", binomial_convolution},
        {"differential_closed_form", differential_closed_form},
        {"arith_inverse_law", arith_inverse_law},
        {"arith_power_consistency", arith_power_consistency},
        {"arith_root_law", arith_root_law},
        {"arith_multiplicativity", arith_multiplicativity},
        {"arith_local_global", arith_local_global},
        {"serialization_round_trip", serialization_round_trip},
    };
    return all;
}

std::vector<SuiteResult> run_all(std::uint64_t seed)
{
    const auto &all = suites();
    std::vector<SuiteResult> results(all.size());
    const auto count = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        const auto &suite = all[static_cast<std::size_t>(i)];
        try {
            results[static_cast<std::size_t>(i)] = suite.run(sampling::derive_seed(seed, static_cast<std::uint64_t>(i)));
        } catch (const std::exception &e) {
            SuiteResult failed;
            failed.name = suite.name;
            failed.total = 1;
            failed.failures.push_back(std::string("exception: ") + e.what());
            results[static_cast<std::size_t>(i)] = std::move(failed);
        } catch (...) {
            SuiteResult failed;
            failed.name = suite.name;
            failed.total = 1;
            failed.failures.push_back("unknown exception");
            results[static_cast<std::size_t>(i)] = std::move(failed);
        }
    }
    return results;
}

} // namespace isobar::verify
