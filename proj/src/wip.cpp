#include <isobar/wip.hpp>

#include <algorithm>
#include <limits>
#include <string>

#include <isobar/errors.hpp>
#include <isobar/kernels.hpp>

namespace isobar
{

WeightVector::WeightVector(std::vector<Rational> entries) : prefix_(std::move(entries)) {}

WeightVector::WeightVector(std::vector<Rational> prefix, AffineTail tail) : prefix_(std::move(prefix)), tail_(std::move(tail))
{
}

WeightVector WeightVector::zero()
{
    return WeightVector({}, AffineTail{0, 0});
}

WeightVector WeightVector::ones()
{
    return WeightVector({}, AffineTail{1, 0});
}

WeightVector WeightVector::naturals()
{
    return WeightVector({}, AffineTail{0, 1});
}

WeightVector WeightVector::hook(int r)
{
    if (r < 0) {
        throw domain_error("hook weight needs r >= 0");
    }
    const Rational sign = (r % 2 == 0) ? 1 : -1;
    return WeightVector(std::vector<Rational>(static_cast<std::size_t>(r), Rational(0)), AffineTail{sign, 0});
}

Rational WeightVector::operator[](int i) const
{
    if (i < 0) {
        throw domain_error("weight index must be non-negative");
    }
    if (i == 0) {
        return 0;
    }
    if (i <= static_cast<int>(prefix_.size())) {
        return prefix_[static_cast<std::size_t>(i - 1)];
    }
    if (!tail_) {
        throw domain_error("weight w_" + std::to_string(i) + " was not supplied (only "
                           + std::to_string(prefix_.size()) + " entries)");
    }
    return tail_->at(i);
}

bool WeightVector::defined_through(int i) const noexcept
{
    return tail_.has_value() || i <= static_cast<int>(prefix_.size());
}

std::vector<Rational> WeightVector::take(int n) const
{
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 1; i <= n; ++i) {
        out.push_back((*this)[i]);
    }
    return out;
}

WeightVector weight_add(const WeightVector &w1, const WeightVector &w2)
{
    constexpr int unbounded = std::numeric_limits<int>::max();
    const auto defined = [](const WeightVector &w) {
        return w.tail() ? unbounded : static_cast<int>(w.prefix().size());
    };
    int length = std::min(defined(w1), defined(w2));
    if (length == unbounded) {
        length = static_cast<int>(std::max(w1.prefix().size(), w2.prefix().size()));
    }
    std::vector<Rational> sum;
    sum.reserve(static_cast<std::size_t>(length));
    for (int i = 1; i <= length; ++i) {
        sum.push_back(w1[i] + w2[i]);
    }
    if (w1.tail() && w2.tail()) {
        return WeightVector(std::move(sum),
                            AffineTail{w1.tail()->constant + w2.tail()->constant, w1.tail()->slope + w2.tail()->slope});
    }
    return WeightVector(std::move(sum));
}

WeightVector operator+(const WeightVector &w1, const WeightVector &w2)
{
    return weight_add(w1, w2);
}

WeightVector weight_scale(const WeightVector &w, const Rational &c)
{
    std::vector<Rational> scaled;
    scaled.reserve(w.prefix().size());
    for (const auto &x : w.prefix()) {
        scaled.push_back(c * x);
    }
    if (w.tail()) {
        return WeightVector(std::move(scaled), AffineTail{c * w.tail()->constant, c * w.tail()->slope});
    }
    return WeightVector(std::move(scaled));
}

bool equal_prefix(const WeightVector &w1, const WeightVector &w2, int length)
{
    for (int i = 1; i <= length; ++i) {
        if (w1[i] != w2[i]) {
            return false;
        }
    }
    return true;
}

WeightVector NamedFamily::weights() const
{
    switch (tag) {
    case FamilyTag::gfp:
        return WeightVector::ones();
    case FamilyTag::glp:
        return WeightVector::naturals();
    case FamilyTag::hook:
        return WeightVector::hook(r);
    }
    throw internal_inconsistency("unknown family tag");
}

std::string NamedFamily::name() const
{
    switch (tag) {
    case FamilyTag::gfp:
        return "GFP";
    case FamilyTag::glp:
        return "GLP";
    case FamilyTag::hook:
        return "HOOK(" + std::to_string(r) + ")";
    }
    throw internal_inconsistency("unknown family tag");
}

Rational wip_coefficient(const ExponentVector &alpha, const WeightVector &omega)
{
    const int depth = alpha.depth();
    if (depth == 0) {
        throw domain_error("the constant monomial has no WIP coefficient");
    }
    Rational weighted = 0;
    for (int i = 1; i <= alpha.box(); ++i) {
        if (alpha[i] != 0) {
            weighted += alpha[i] * omega[i];
        }
    }
    return Rational(multinomial(alpha)) * weighted / depth;
}

IsobaricPolynomial wip(int n, int k, const WeightVector &omega)
{
    if (n < 1 || k < 1) {
        throw domain_error("wip needs n >= 1 and k >= 1");
    }
    return kernels::tabulate_parallel(n, k, [&omega](const ExponentVector &alpha) { return wip_coefficient(alpha, omega); });
}

std::vector<IsobaricPolynomial> gfp_levels(int top_level, int k)
{
    if (top_level < 0 || k < 1) {
        throw domain_error("gfp_levels needs N >= 0 and k >= 1");
    }
    std::vector<IsobaricPolynomial> f;
    f.reserve(static_cast<std::size_t>(top_level) + 1);
    f.push_back(IsobaricPolynomial::constant(1));
    for (int n = 1; n <= top_level; ++n) {
        IsobaricPolynomial fn(n);
        for (int j = 1; j <= std::min(n, k); ++j) {
            fn += times_variable(f[static_cast<std::size_t>(n - j)], j);
        }
        f.push_back(std::move(fn));
    }
    return f;
}

IsobaricSequence gfp_sequence(int k, int top_level)
{
    return IsobaricSequence(k, gfp_levels(top_level, k));
}

std::vector<IsobaricPolynomial> wip_levels_via_recursion(int top_level, int k, const WeightVector &omega)
{
    if (top_level < 0 || k < 1) {
        throw domain_error("wip recursion needs N >= 0 and k >= 1");
    }
    std::vector<IsobaricPolynomial> p;
    p.reserve(static_cast<std::size_t>(top_level) + 1);
    p.emplace_back(0);
    for (int n = 1; n <= top_level; ++n) {
        IsobaricPolynomial pn(n);
        for (int j = 1; j <= std::min(n - 1, k); ++j) {
            pn += times_variable(p[static_cast<std::size_t>(n - j)], j);
        }
        if (n <= k) {
            pn.add_term(ExponentVector::unit(n), omega[n]);
        }
        p.push_back(std::move(pn));
    }
    return p;
}

IsobaricPolynomial wip_via_recursion(int n, int k, const WeightVector &omega)
{
    if (n < 1) {
        throw domain_error("wip needs n >= 1");
    }
    return std::move(wip_levels_via_recursion(n, k, omega).back());
}

std::vector<IsobaricPolynomial> wip_levels_via_convolution(int top_level, int k, const WeightVector &omega)
{
    const auto f = gfp_levels(top_level, k);
    std::vector<IsobaricPolynomial> p;
    p.reserve(static_cast<std::size_t>(top_level) + 1);
    p.emplace_back(0);
    for (int n = 1; n <= top_level; ++n) {
        IsobaricPolynomial pn(n);
        for (int j = 1; j <= std::min(n, k); ++j) {
            pn += times_variable(f[static_cast<std::size_t>(n - j)], j, omega[j]);
        }
        p.push_back(std::move(pn));
    }
    return p;
}

IsobaricPolynomial wip_via_convolution(int n, int k, const WeightVector &omega)
{
    if (n < 1) {
        throw domain_error("wip needs n >= 1");
    }
    return std::move(wip_levels_via_convolution(n, k, omega).back());
}

IsobaricSequence wip_sequence(int k, int top_level, const WeightVector &omega)
{
    std::vector<IsobaricPolynomial> polys;
    polys.reserve(static_cast<std::size_t>(top_level) + 1);
    polys.push_back(IsobaricPolynomial::constant(1));
    for (int n = 1; n <= top_level; ++n) {
        polys.push_back(wip(n, k, omega));
    }
    return IsobaricSequence(k, std::move(polys));
}

std::optional<WeightVector> detect_weight(const IsobaricPolynomial &p)
{
    const int n = p.level();
    if (n < 1) {
        throw domain_error("detect_weight needs a polynomial of level >= 1");
    }
    std::vector<Rational> omega(static_cast<std::size_t>(n));
    omega[0] = p.coefficient(ExponentVector({n}));
    for (int i = 2; i <= n; ++i) {
        const ExponentVector first_in_box = ExponentVector({n - i}) + ExponentVector::unit(i);
        omega[static_cast<std::size_t>(i - 1)] = p.coefficient(first_in_box) - (n - i) * omega[0];
    }
    WeightVector w(std::move(omega));
    for (const auto &alpha : exponents_of_level(n, n)) {
        if (p.coefficient(alpha) != wip_coefficient(alpha, w)) {
            return std::nullopt;
        }
    }
    return w;
}

namespace
{

// Product of power series in y whose y^n coefficient has level n.
std::vector<IsobaricPolynomial> series_mul(const std::vector<IsobaricPolynomial> &a,
                                           const std::vector<IsobaricPolynomial> &b)
{
    std::vector<IsobaricPolynomial> c;
    c.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        IsobaricPolynomial cn(static_cast<int>(n));
        for (std::size_t i = 0; i <= n; ++i) {
            if (!a[i].is_zero() && !b[n - i].is_zero()) {
                cn += poly_mul(a[i], b[n - i]);
            }
        }
        c.push_back(std::move(cn));
    }
    return c;
}

} // namespace

IsobaricSequence generating_series(const WeightVector &omega, int k, int top_level)
{
    if (top_level < 1 || k < 1) {
        throw domain_error("generating_series needs N >= 1 and k >= 1");
    }
    const auto size = static_cast<std::size_t>(top_level) + 1;

    std::vector<IsobaricPolynomial> p_of_y;
    std::vector<IsobaricPolynomial> numerator;
    for (std::size_t n = 0; n < size; ++n) {
        const int level = static_cast<int>(n);
        IsobaricPolynomial pn(level);
        IsobaricPolynomial wn(level);
        if (level >= 1 && level <= k) {
            pn.add_term(ExponentVector::unit(level), 1);
            wn.add_term(ExponentVector::unit(level), omega[level]);
        }
        p_of_y.push_back(std::move(pn));
        numerator.push_back(std::move(wn));
    }

    // 1 / (1 - p(y)) = sum_m p(y)^m; p has no constant term, so m <= N suffices.
    std::vector<IsobaricPolynomial> geometric;
    geometric.push_back(IsobaricPolynomial::constant(1));
    for (std::size_t n = 1; n < size; ++n) {
        geometric.emplace_back(static_cast<int>(n));
    }
    std::vector<IsobaricPolynomial> power = geometric;
    for (int m = 1; m <= top_level; ++m) {
        power = series_mul(power, p_of_y);
        for (std::size_t n = 0; n < size; ++n) {
            geometric[n] += power[n];
        }
    }
    return IsobaricSequence(k, series_mul(numerator, geometric));
}

IsobaricPolynomial basis_products(const Partition &lambda, const WeightVector &omega, int k)
{
    IsobaricPolynomial product = IsobaricPolynomial::constant(1);
    for (int part : lambda.parts()) {
        product = poly_mul(product, wip(part, k, omega));
    }
    return product;
}

} // namespace isobar
