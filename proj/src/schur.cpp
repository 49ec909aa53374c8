#include <isobar/schur.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>

#include <isobar/errors.hpp>
#include <isobar/exponent.hpp>
#include <isobar/kernels.hpp>

namespace isobar
{

namespace
{

using Entry = std::optional<IsobaricPolynomial>; // nullopt is a structural zero
using EntryFn = std::function<Entry(int row, int col)>;

void accumulate(Entry &sum, IsobaricPolynomial term)
{
    if (sum) {
        *sum += term;
    } else {
        sum = std::move(term);
    }
}

// Laplace expansion along successive rows, memoized on the set of columns
// already used. Only ring operations on polynomials, no division.
IsobaricPolynomial determinant(int size, int level, const EntryFn &entry)
{
    if (size == 0) {
        return IsobaricPolynomial::constant(1);
    }
    std::unordered_map<std::uint32_t, Entry> memo;
    std::function<Entry(std::uint32_t)> minor = [&](std::uint32_t used) -> Entry {
        const int row = std::popcount(used);
        if (row == size) {
            return IsobaricPolynomial::constant(1);
        }
        if (const auto it = memo.find(used); it != memo.end()) {
            return it->second;
        }
        Entry sum;
        int free_before = 0;
        for (int col = 0; col < size; ++col) {
            if (used & (1u << col)) {
                continue;
            }
            const Entry e = entry(row, col);
            if (e && !e->is_zero()) {
                const Entry rest = minor(used | (1u << col));
                if (rest && !rest->is_zero()) {
                    IsobaricPolynomial term = poly_mul(*e, *rest);
                    if (free_before % 2 == 1) {
                        term *= -1;
                    }
                    accumulate(sum, std::move(term));
                }
            }
            ++free_before;
        }
        memo.emplace(used, sum);
        return sum;
    };
    Entry det = minor(0);
    return det ? *det : IsobaricPolynomial(level);
}

// e^_m = (-1)^{m+1} t_m, e^_0 = 1, zero below.
Entry reflected_elementary(int m)
{
    if (m < 0) {
        return std::nullopt;
    }
    if (m == 0) {
        return IsobaricPolynomial::constant(1);
    }
    return IsobaricPolynomial::monomial(ExponentVector::unit(m), (m % 2 == 1) ? 1 : -1);
}

} // namespace

IsobaricPolynomial schur_reflect(const Partition &lambda, DeterminantBasis basis)
{
    const int n = lambda.size();
    if (n == 0) {
        return IsobaricPolynomial::constant(1);
    }
    if (lambda.length() > 31 || lambda[1] > 31) {
        throw domain_error("partition too large for the determinant expansion");
    }
    if (basis == DeterminantBasis::elementary) {
        const Partition conj = lambda.conjugate();
        return determinant(conj.length(), n,
                           [&conj](int i, int j) { return reflected_elementary(conj[i + 1] - (i + 1) + (j + 1)); });
    }
    const auto f = gfp_levels(n, n);
    return determinant(lambda.length(), n, [&](int i, int j) -> Entry {
        const int m = lambda[i + 1] - (i + 1) + (j + 1);
        if (m < 0) {
            return std::nullopt;
        }
        return f[static_cast<std::size_t>(m)];
    });
}

IsobaricPolynomial hook_reflect(int n, int r)
{
    if (n < 1 || r < 0 || r > n - 1) {
        throw domain_error("hook_reflect needs 0 <= r <= n - 1");
    }
    const auto f = gfp_levels(n, n);
    IsobaricPolynomial s(n);
    for (int j = r + 1; j <= n; ++j) {
        s += times_variable(f[static_cast<std::size_t>(n - j)], j);
    }
    if (r % 2 == 1) {
        s *= -1;
    }
    return s;
}

WeightVector hook_weight(int r)
{
    return WeightVector::hook(r);
}

std::vector<Rational> to_hook_basis(const WeightVector &omega, int n)
{
    if (n < 1) {
        throw domain_error("to_hook_basis needs n >= 1");
    }
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rational diff = omega[i] - omega[i + 1];
        c.push_back((i % 2 == 1) ? diff : Rational(-diff));
    }
    return c;
}

CharacterTable character_table(int n, int bound)
{
    if (n < 1 || n > bound) {
        throw domain_error("character_table needs 1 <= n <= " + std::to_string(bound));
    }
    const auto monomials = exponents_of_level(n, n);
    const auto columns = partitions_of(n);
    const auto size = monomials.size();

    std::vector<Partition> rows(columns.rbegin(), columns.rend());

    std::vector<IsobaricPolynomial> g(size);
    std::vector<IsobaricPolynomial> s(size);
    const auto count = static_cast<std::ptrdiff_t>(size);
    kernels::ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        errors.guard([&] {
            const auto u = static_cast<std::size_t>(i);
            g[u] = basis_products(columns[u], WeightVector::naturals(), n);
            s[u] = schur_reflect(rows[u], DeterminantBasis::elementary);
        });
    }
    errors.rethrow();

    // Augmented system [G | S]: column mu of G holds G_mu over the monomial
    // basis; each right-hand side is one Schur reflect.
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(2 * size));
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            m[r][c] = g[c].coefficient(monomials[r]);
            m[r][size + c] = s[c].coefficient(monomials[r]);
        }
    }
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == size) {
            throw internal_inconsistency("GLP products are linearly dependent at n = " + std::to_string(n));
        }
        std::swap(m[pivot], m[col]);
        const Rational inv = 1 / m[col][col];
        for (auto &x : m[col]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < size; ++r) {
            if (r == col || m[r][col] == 0) {
                continue;
            }
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < 2 * size; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }

    CharacterTable table;
    table.n = n;
    table.rows = std::move(rows);
    table.columns = columns;
    table.entries.assign(size, std::vector<Rational>(size));
    for (std::size_t l = 0; l < size; ++l) {
        for (std::size_t c = 0; c < size; ++c) {
            Rational chi = m[c][size + l] * Rational(columns[c].centralizer_order());
            if (!is_integer(chi)) {
                throw internal_inconsistency("non-integral character value for lambda = " + table.rows[l].to_string());
            }
            table.entries[l][c] = std::move(chi);
        }
    }
    return table;
}

} // namespace isobar
