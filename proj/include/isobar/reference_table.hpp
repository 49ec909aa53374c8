#ifndef ISOBAR_REFERENCE_TABLE_HPP
#define ISOBAR_REFERENCE_TABLE_HPP

#include <span>
#include <string_view>

#include <isobar/partition.hpp>

namespace isobar
{

// Published table of Schur reflects for n = 1..6, one row per partition,
// transcribed term for term (including any misprints) into the text syntax
// of format_poly_text.
struct PublishedReflect {
    Partition lambda;
    std::string_view text;
};

std::span<const PublishedReflect> published_schur_reflects();

} // namespace isobar

#endif
