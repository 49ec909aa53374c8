#include <isobar/reference_table.hpp>

#include <array>

namespace isobar
{

namespace
{

// Rows as printed, n = 1..6. The n = 5 block in print also repeats the n = 4
// row for (2,1^2); it is listed once here.
const std::array<PublishedReflect, 29> &table()
{
    static const std::array<PublishedReflect, 29> rows{{
        {Partition{1}, "t1"},

        {Partition{2}, "t1^2+t2"},
        {Partition{1, 1}, "-t2"},

        {Partition{3}, "t1^3+2t1t2+t3"},
        {Partition{2, 1}, "-t1t2 -t3"},
        {Partition{1, 1, 1}, "t3"},

        {Partition{4}, "t1^4+3t1^2t2+t2^2+ 2t1t3+ t4"},
        {Partition{3, 1}, "-t1^2t2-t2^2-t1t3 -t4"},
        {Partition{2, 2}, "t2^2-t1t3"},
        {Partition{2, 1, 1}, "t1t3 +t4"},
        {Partition{1, 1, 1, 1}, "-t4"},

        {Partition{5}, "t1^5+4t1^3t2+3t1t2^2+ 3t1^2t3+2t2t3+2t1 t4+t5"},
        {Partition{4, 1}, "-t1^3t2-2t1t2^2-t1^2t3 -2t2t3 -t1t4-t5"},
        {Partition{3, 2}, "t1t2^2-t1^2t3 +t2t3-t1t4"},
        {Partition{3, 1, 1}, "t1^2t3+t2t3+t1t4+t5"},
        {Partition{2, 2, 1}, "-t2t3+t1t4"},
        {Partition{2, 1, 1, 1}, "-t1t4 -t5"},
        {Partition{1, 1, 1, 1, 1}, "t5"},

        {Partition{6}, "t1^6+5t1^4t2+6t1^2t2^2+ t2^3 +4t1^3t3 +t3^2 + 6t1t2t3+3t1^2t4+2t2t4+2t1t5+  t6"},
        {Partition{5, 1}, "-t1^4t2- 3t1^2t2^2-t2^3-t1^3t3-4t1t2t3-t3^2-2t2t4 -2t1t5-t6"},
        {Partition{4, 2}, "t1^2t2^2+t2^3 -t1^3t3-t1^2t4 +t2t4-t1t5"},
        {Partition{4, 1, 1}, "t1^3t3+2t1t2t3+t3^2+t1^2t4+t2t4+t1t5+t6"},
        {Partition{3, 3}, "2t1t2t3-t2^3+t3^2-t1^2t4-t2t4"},
        {Partition{3, 2, 1}, "-t1t2t3-t3^2 +t1^2t4+t1t5"},
        {Partition{2, 2, 2}, "t3^2-t2t4"},
        {Partition{3, 1, 1, 1}, "-t1^2t4-t2t4 -t1t5-t6"},
        {Partition{2, 2, 1, 1}, "t2t4- t1t5"},
        {Partition{2, 1, 1, 1, 1}, "t1t5 +t6"},
        {Partition{1, 1, 1, 1, 1, 1}, "- t6"},
    }};
    return rows;
}

} // namespace

std::span<const PublishedReflect> published_schur_reflects()
{
    return table();
}

} // namespace isobar
