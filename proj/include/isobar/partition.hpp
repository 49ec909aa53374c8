#ifndef ISOBAR_PARTITION_HPP
#define ISOBAR_PARTITION_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <isobar/exponent.hpp>
#include <isobar/rational.hpp>

namespace isobar
{

// Integer partition with strictly positive parts in weakly decreasing order.
class Partition
{
public:
    Partition() = default;
    // Throws domain_error unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // (n - r, 1^r)
    static Partition hook(int n, int r);

    std::span<const int> parts() const noexcept
    {
        return parts_;
    }
    int size() const noexcept; // n
    int length() const noexcept
    {
        return static_cast<int>(parts_.size());
    }
    int operator[](int i) const noexcept; // 1-based, zero past the end

    Partition conjugate() const;
    bool is_hook() const noexcept;

    // alpha with a_i = multiplicity of part i.
    ExponentVector to_exponent() const;
    static Partition from_exponent(const ExponentVector &alpha);

    // z_mu = prod_i i^{m_i} m_i!, the centralizer order in Sym(n).
    Integer centralizer_order() const;

    std::string to_string() const; // "3,1,1"

    friend bool operator==(const Partition &, const Partition &) = default;
    // Lexicographic on the descending part lists.
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition &lambda);

// All partitions of n in ascending lexicographic order: (1^n) first, (n) last.
std::vector<Partition> partitions_of(int n);

// Comma-separated positive integers, e.g. "3,2" or "[3,2]".
Partition parse_partition(std::string_view text);

} // namespace isobar

#endif
