#include <isobar/exponent.hpp>

#include <algorithm>
#include <string>

#include <isobar/errors.hpp>

namespace isobar
{

ExponentVector::ExponentVector(std::initializer_list<int> entries) : ExponentVector(std::vector<int>(entries)) {}

ExponentVector::ExponentVector(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int a : entries_) {
        if (a < 0) {
            throw domain_error("negative exponent");
        }
    }
    trim();
}

ExponentVector ExponentVector::unit(int j)
{
    if (j < 1) {
        throw domain_error("variable index must be >= 1");
    }
    std::vector<int> e(static_cast<std::size_t>(j), 0);
    e.back() = 1;
    return ExponentVector(std::move(e));
}

int ExponentVector::operator[](int j) const noexcept
{
    if (j < 1 || j > box()) {
        return 0;
    }
    return entries_[static_cast<std::size_t>(j - 1)];
}

int ExponentVector::level() const noexcept
{
    int n = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        n += static_cast<int>(i + 1) * entries_[i];
    }
    return n;
}

int ExponentVector::depth() const noexcept
{
    int d = 0;
    for (int a : entries_) {
        d += a;
    }
    return d;
}

ExponentVector ExponentVector::lowered(int j) const
{
    if ((*this)[j] == 0) {
        throw domain_error("cannot lower exponent " + std::to_string(j) + " below zero");
    }
    ExponentVector r = *this;
    --r.entries_[static_cast<std::size_t>(j - 1)];
    r.trim();
    return r;
}

ExponentVector ExponentVector::raised(int j) const
{
    if (j < 1) {
        throw domain_error("variable index must be >= 1");
    }
    ExponentVector r = *this;
    if (static_cast<int>(r.entries_.size()) < j) {
        r.entries_.resize(static_cast<std::size_t>(j), 0);
    }
    ++r.entries_[static_cast<std::size_t>(j - 1)];
    return r;
}

bool ExponentVector::divides(const ExponentVector &other) const noexcept
{
    if (box() > other.box()) {
        return false;
    }
    for (int j = 1; j <= box(); ++j) {
        if ((*this)[j] > other[j]) {
            return false;
        }
    }
    return true;
}

std::vector<int> ExponentVector::parts() const
{
    std::vector<int> p;
    p.reserve(static_cast<std::size_t>(depth()));
    for (int i = box(); i >= 1; --i) {
        p.insert(p.end(), static_cast<std::size_t>((*this)[i]), i);
    }
    return p;
}

ExponentVector ExponentVector::from_parts(std::span<const int> parts)
{
    std::vector<int> e;
    for (int part : parts) {
        if (part < 1) {
            throw domain_error("partition parts must be positive");
        }
        if (static_cast<int>(e.size()) < part) {
            e.resize(static_cast<std::size_t>(part), 0);
        }
        ++e[static_cast<std::size_t>(part - 1)];
    }
    return ExponentVector(std::move(e));
}

ExponentVector operator+(const ExponentVector &a, const ExponentVector &b)
{
    std::vector<int> e(static_cast<std::size_t>(std::max(a.box(), b.box())), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const int j = static_cast<int>(i) + 1;
        e[i] = a[j] + b[j];
    }
    return ExponentVector(std::move(e));
}

ExponentVector operator-(const ExponentVector &a, const ExponentVector &b)
{
    if (!b.divides(a)) {
        throw domain_error("exponent difference would be negative");
    }
    std::vector<int> e(a.entries_.begin(), a.entries_.end());
    for (std::size_t i = 0; i < b.entries_.size(); ++i) {
        e[i] -= b.entries_[i];
    }
    return ExponentVector(std::move(e));
}

void ExponentVector::trim() noexcept
{
    while (!entries_.empty() && entries_.back() == 0) {
        entries_.pop_back();
    }
}

bool PartitionLess::operator()(const ExponentVector &a, const ExponentVector &b) const noexcept
{
    // Both part lists agree down to part i + 1. If a has fewer copies of i,
    // its next part is smaller (or it ends), so a comes first.
    for (int i = std::max(a.box(), b.box()); i >= 1; --i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

MonomialStats monomial_stats(const ExponentVector &alpha)
{
    return {alpha.level(), alpha.depth(), alpha.box()};
}

namespace
{

// Partitions of `remaining` with parts <= max_part, largest parts chosen
// first; the caller sorts.
void collect(int remaining, int max_part, std::vector<int> &counts, std::vector<ExponentVector> &out)
{
    if (remaining == 0) {
        out.emplace_back(counts);
        return;
    }
    if (max_part == 0) {
        return;
    }
    for (int c = remaining / max_part; c >= 0; --c) {
        counts[static_cast<std::size_t>(max_part - 1)] = c;
        collect(remaining - c * max_part, max_part - 1, counts, out);
    }
    counts[static_cast<std::size_t>(max_part - 1)] = 0;
}

} // namespace

std::vector<ExponentVector> exponents_of_level(int n, int k)
{
    if (n < 0 || k < 1) {
        throw domain_error("exponents_of_level needs n >= 0 and k >= 1");
    }
    const int top = std::min(n, k);
    std::vector<ExponentVector> out;
    if (top == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> counts(static_cast<std::size_t>(top), 0);
    collect(n, top, counts, out);
    std::sort(out.begin(), out.end(), PartitionLess{});
    return out;
}

std::vector<LatticeCover> lattice_covers(const ExponentVector &alpha)
{
    if (alpha.empty()) {
        throw domain_error("the bottom monomial 1 has no lattice predecessors");
    }
    std::vector<LatticeCover> out;
    for (int j = 1; j <= alpha.box(); ++j) {
        if (alpha[j] > 0) {
            out.push_back({j, alpha.lowered(j)});
        }
    }
    return out;
}

Integer multinomial(const ExponentVector &alpha)
{
    return factorial(alpha.depth()) / factorial_product(alpha);
}

Integer factorial_product(const ExponentVector &alpha)
{
    Integer r = 1;
    for (int a : alpha.entries()) {
        r *= factorial(a);
    }
    return r;
}

} // namespace isobar
