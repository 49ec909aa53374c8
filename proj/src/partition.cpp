#include <isobar/partition.hpp>

#include <algorithm>
#include <charconv>
#include <string>

#include <isobar/errors.hpp>

namespace isobar
{

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw domain_error("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw domain_error("partition parts must be weakly decreasing");
        }
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::hook(int n, int r)
{
    if (n < 1 || r < 0 || r > n - 1) {
        throw domain_error("hook (n - r, 1^r) needs 0 <= r <= n - 1");
    }
    std::vector<int> parts(static_cast<std::size_t>(r) + 1, 1);
    parts.front() = n - r;
    return Partition(std::move(parts));
}

int Partition::size() const noexcept
{
    int n = 0;
    for (int p : parts_) {
        n += p;
    }
    return n;
}

int Partition::operator[](int i) const noexcept
{
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const
{
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++c[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(c));
}

bool Partition::is_hook() const noexcept
{
    return std::all_of(parts_.begin() + std::min<std::ptrdiff_t>(1, length()), parts_.end(),
                       [](int p) { return p == 1; });
}

ExponentVector Partition::to_exponent() const
{
    return ExponentVector::from_parts(parts_);
}

Partition Partition::from_exponent(const ExponentVector &alpha)
{
    return Partition(alpha.parts());
}

Integer Partition::centralizer_order() const
{
    const ExponentVector m = to_exponent();
    Integer z = 1;
    for (int i = 1; i <= m.box(); ++i) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m[i]));
        z *= power * factorial(m[i]);
    }
    return z;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition conjugate(const Partition &lambda)
{
    return lambda.conjugate();
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for (const auto &alpha : exponents_of_level(n, std::max(n, 1))) {
        out.push_back(Partition::from_exponent(alpha));
    }
    return out;
}

namespace
{

std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Partition parse_partition(std::string_view text)
{
    const std::string original(text);
    text = strip(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') {
            throw parse_error("unbalanced brackets in partition '" + original + "'");
        }
        text = text.substr(1, text.size() - 2);
    }
    std::vector<int> parts;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto field = strip(text.substr(0, comma));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size() || value < 1) {
            throw parse_error("malformed partition '" + original + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
        if (strip(text).empty()) {
            throw parse_error("trailing comma in partition '" + original + "'");
        }
    }
    if (parts.empty()) {
        throw parse_error("empty partition");
    }
    if (!std::is_sorted(parts.rbegin(), parts.rend())) {
        throw parse_error("partition parts must be weakly decreasing: '" + original + "'");
    }
    return Partition(std::move(parts));
}

} // namespace isobar
