#ifndef ISOBAR_VERIFY_HPP
#define ISOBAR_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace isobar::verify
{

struct SuiteResult {
    std::string name;
    long passed = 0;
    long total = 0;
    std::vector<std::string> failures; // first few only

    bool ok() const noexcept
    {
        return passed == total;
    }
};

struct Suite {
    std::string name;
    std::function<SuiteResult(std::uint64_t seed)> run;
};

// The identity suites behind `isobar verify`, in a fixed order. Random
// instances are drawn from the given seed, so results are reproducible.
const std::vector<Suite> &suites();

std::vector<SuiteResult> run_all(std::uint64_t seed);

} // namespace isobar::verify

#endif
