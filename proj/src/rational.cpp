#include <isobar/rational.hpp>

#include <cctype>
#include <string>

#include <isobar/errors.hpp>

namespace isobar
{

namespace
{

bool is_digit_run(std::string_view s) noexcept
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    const auto bad = [&] { return parse_error("malformed fraction '" + std::string(text) + "'"); };

    std::string_view num = text;
    std::string_view den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_digit_run(den)) {
            throw bad();
        }
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!is_digit_run(digits)) {
        throw bad();
    }

    Integer n(std::string(digits), 10);
    if (num.front() == '-') {
        n = -n;
    }
    Integer d = 1;
    if (!den.empty()) {
        d = Integer(std::string(den), 10);
        if (d == 0) {
            throw parse_error("zero denominator in '" + std::string(text) + "'");
        }
    }
    return make_rational(n, d);
}

std::string to_string(const Rational &value)
{
    return value.get_str();
}

bool is_integer(const Rational &value)
{
    return value.get_den() == 1;
}

Integer factorial(int n)
{
    if (n < 0) {
        throw domain_error("factorial of a negative integer");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace isobar
