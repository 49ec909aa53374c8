#ifndef ISOBAR_EXPONENT_HPP
#define ISOBAR_EXPONENT_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <isobar/rational.hpp>

namespace isobar
{

/// Exponent vector (a_1, ..., a_k) of the monomial t_1^a_1 ... t_k^a_k.
///
/// Entries are stored with trailing zeros trimmed, so two vectors denote the
/// same monomial exactly when they compare equal. Index access is 1-based and
/// reads zero past the stored entries. The same type also carries exponents of
/// monomials in the weight variables w_1, ..., w_k.
class ExponentVector
{
public:
    ExponentVector() = default;
    ExponentVector(std::initializer_list<int> entries);
    explicit ExponentVector(std::vector<int> entries);

    // e_j
    static ExponentVector unit(int j);

    int operator[](int j) const noexcept;
    std::span<const int> entries() const noexcept
    {
        return entries_;
    }
    bool empty() const noexcept
    {
        return entries_.empty();
    }

    // sum_i i * a_i
    int level() const noexcept;
    // sum_i a_i
    int depth() const noexcept;
    // largest i with a_i != 0, 0 for the empty vector
    int box() const noexcept
    {
        return static_cast<int>(entries_.size());
    }

    ExponentVector lowered(int j) const; // this - e_j, requires a_j > 0
    ExponentVector raised(int j) const;  // this + e_j

    // Componentwise order of the monomial lattice.
    bool divides(const ExponentVector &other) const noexcept;

    // The partition (1^a_1, 2^a_2, ...) with parts in descending order.
    std::vector<int> parts() const;
    static ExponentVector from_parts(std::span<const int> parts);

    friend ExponentVector operator+(const ExponentVector &a, const ExponentVector &b);
    friend ExponentVector operator-(const ExponentVector &a, const ExponentVector &b);

    friend bool operator==(const ExponentVector &, const ExponentVector &) = default;
    friend auto operator<=>(const ExponentVector &, const ExponentVector &) = default;

private:
    void trim() noexcept;

    std::vector<int> entries_;
};

/// Lexicographic order on the partitions (1^a_1, ..., k^a_k): compare the
/// descending part lists entry by entry. For monomials of one level this is
/// the order t_1^n < t_1^{n-2} t_2 < ... < t_n, and it reduces to comparing
/// multiplicities from the largest part down.
struct PartitionLess {
    bool operator()(const ExponentVector &a, const ExponentVector &b) const noexcept;
};

struct MonomialStats {
    int level;
    int depth;
    int box;

    friend bool operator==(const MonomialStats &, const MonomialStats &) = default;
};

MonomialStats monomial_stats(const ExponentVector &alpha);

// Every alpha of level n with a_j = 0 for j > k, ascending in PartitionLess.
std::vector<ExponentVector> exponents_of_level(int n, int k);

struct LatticeCover {
    int index;
    ExponentVector below;

    friend bool operator==(const LatticeCover &, const LatticeCover &) = default;
};

// The depth-(|alpha| - 1) predecessors alpha - e_j, one per j with a_j > 0,
// in increasing j. Throws domain_error for the empty vector.
std::vector<LatticeCover> lattice_covers(const ExponentVector &alpha);

// (sum a_i)! / prod a_i!
Integer multinomial(const ExponentVector &alpha);

// prod a_i!
Integer factorial_product(const ExponentVector &alpha);

} // namespace isobar

#endif
