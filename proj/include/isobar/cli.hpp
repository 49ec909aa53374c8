#ifndef ISOBAR_CLI_HPP
#define ISOBAR_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <isobar/wip.hpp>

namespace isobar::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_computation_error = 1;
inline constexpr int exit_usage_error = 2;

// "ones", "naturals", "hook:r", or a comma list of exact rationals.
// Throws parse_error on anything else.
WeightVector parse_weight_spec(std::string_view spec);

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace isobar::cli

#endif
