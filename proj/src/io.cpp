#include <isobar/io.hpp>

#include <cctype>
#include <string>

#include <isobar/errors.hpp>

namespace isobar
{

using nlohmann::json;

namespace
{

std::string monomial_text(const ExponentVector &alpha)
{
    std::string s;
    for (int i = 1; i <= alpha.box(); ++i) {
        if (alpha[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += 't' + std::to_string(i);
        if (alpha[i] > 1) {
            s += '^' + std::to_string(alpha[i]);
        }
    }
    return s;
}

// Magnitude of a term, sign handled by the caller.
std::string term_text(const ExponentVector &alpha, const Rational &magnitude)
{
    if (alpha.empty()) {
        return to_string(magnitude);
    }
    const std::string mono = monomial_text(alpha);
    if (magnitude == 1) {
        return mono;
    }
    if (is_integer(magnitude)) {
        return to_string(magnitude) + mono;
    }
    return "(" + to_string(magnitude) + ")" + mono;
}

class TextParser
{
public:
    explicit TextParser(std::string_view text) : text_(text) {}

    IsobaricPolynomial parse(int level_if_zero)
    {
        std::vector<std::pair<ExponentVector, Rational>> terms;
        skip_space();
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (peek() == '-') ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [alpha, coeff] = term();
            terms.emplace_back(std::move(alpha), sign * coeff);
            first = false;
            skip_space();
        }
        if (terms.empty()) {
            fail("empty polynomial");
        }
        int level = -1;
        for (const auto &[alpha, c] : terms) {
            if (c == 0) {
                continue;
            }
            if (level >= 0 && alpha.level() != level) {
                fail("terms of different level");
            }
            level = alpha.level();
        }
        IsobaricPolynomial p(level < 0 ? level_if_zero : level);
        for (const auto &[alpha, c] : terms) {
            if (c != 0) {
                p.add_term(alpha, c);
            }
        }
        return p;
    }

private:
    std::pair<ExponentVector, Rational> term()
    {
        Rational coeff = 1;
        bool have_coeff = false;
        if (peek() == '(') {
            ++pos_;
            skip_space();
            coeff = fraction();
            skip_space();
            expect(')');
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = fraction();
            have_coeff = true;
        }
        skip_space();
        if (have_coeff && peek() == '*') {
            ++pos_;
            skip_space();
        }
        if (peek() != 't') {
            if (!have_coeff) {
                fail("expected a coefficient or a variable");
            }
            return {ExponentVector{}, coeff};
        }
        ExponentVector alpha;
        while (true) {
            expect('t');
            const int index = integer();
            if (index < 1) {
                fail("variable index must be >= 1");
            }
            int exponent = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                exponent = integer();
            }
            for (int e = 0; e < exponent; ++e) {
                alpha = alpha.raised(index);
            }
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                continue;
            }
            // juxtaposed variables, as in "t1t2"
            if (peek() == 't') {
                continue;
            }
            break;
        }
        return {alpha, coeff};
    }

    Rational fraction()
    {
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
            ++pos_;
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }

    int integer()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_ || pos_ - start > 6) {
            fail("expected an integer");
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    char peek() const noexcept
    {
        return at_end() ? '\0' : text_[pos_];
    }
    bool at_end() const noexcept
    {
        return pos_ >= text_.size();
    }
    void skip_space() noexcept
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

template <typename F>
auto translating_json_errors(F &&f)
{
    try {
        return f();
    } catch (const json::exception &e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string format_poly_text(const IsobaricPolynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[alpha, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_text(alpha, magnitude);
        first = false;
    }
    return out;
}

IsobaricPolynomial parse_poly_text(std::string_view text, int level_if_zero)
{
    return TextParser(text).parse(level_if_zero);
}

json poly_to_json(const IsobaricPolynomial &p)
{
    json terms = json::array();
    for (const auto &[alpha, c] : p.terms()) {
        terms.push_back({{"alpha", std::vector<int>(alpha.entries().begin(), alpha.entries().end())},
                         {"coeff", to_string(c)}});
    }
    return {{"level", p.level()}, {"terms", std::move(terms)}};
}

IsobaricPolynomial poly_from_json(const json &j)
{
    return translating_json_errors([&] {
        const int level = j.at("level").get<int>();
        if (level < 0) {
            throw parse_error("negative level");
        }
        IsobaricPolynomial p(level);
        for (const auto &term : j.at("terms")) {
            const auto alpha = ExponentVector(term.at("alpha").get<std::vector<int>>());
            if (alpha.level() != level) {
                throw parse_error("term of level " + std::to_string(alpha.level()) + " in a level-"
                                  + std::to_string(level) + " polynomial");
            }
            p.add_term(alpha, parse_rational(term.at("coeff").get<std::string>()));
        }
        return p;
    });
}

std::string format_poly(const IsobaricPolynomial &p, OutputFormat mode)
{
    return mode == OutputFormat::json ? poly_to_json(p).dump() : format_poly_text(p);
}

json sequence_to_json(const IsobaricSequence &s)
{
    json polys = json::array();
    for (const auto &p : s.polys()) {
        polys.push_back(poly_to_json(p));
    }
    return {{"k", s.truncation()}, {"polys", std::move(polys)}};
}

IsobaricSequence sequence_from_json(const json &j)
{
    return translating_json_errors([&] {
        std::vector<IsobaricPolynomial> polys;
        for (const auto &p : j.at("polys")) {
            polys.push_back(poly_from_json(p));
        }
        return IsobaricSequence(j.at("k").get<int>(), std::move(polys));
    });
}

json rationals_to_json(std::span<const Rational> values)
{
    json out = json::array();
    for (const auto &v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

std::vector<Rational> rationals_from_json(const json &j)
{
    return translating_json_errors([&] {
        std::vector<Rational> out;
        for (const auto &v : j) {
            out.push_back(parse_rational(v.get<std::string>()));
        }
        return out;
    });
}

json core_spec_to_json(const CoreFunctionSpec &spec)
{
    return {{"a", rationals_to_json(spec.a)}, {"k", spec.degree()}};
}

CoreFunctionSpec core_spec_from_json(const json &j)
{
    return translating_json_errors([&] {
        CoreFunctionSpec spec{rationals_from_json(j.at("a"))};
        if (j.contains("k") && j.at("k").get<int>() != spec.degree()) {
            throw parse_error("core spec degree k does not match the number of coefficients");
        }
        return spec;
    });
}

json partition_to_json(const Partition &lambda)
{
    return std::vector<int>(lambda.parts().begin(), lambda.parts().end());
}

json character_table_to_json(const CharacterTable &table)
{
    json rows = json::array();
    json columns = json::array();
    json entries = json::array();
    for (const auto &lambda : table.rows) {
        rows.push_back(partition_to_json(lambda));
    }
    for (const auto &mu : table.columns) {
        columns.push_back(partition_to_json(mu));
    }
    for (const auto &row : table.entries) {
        entries.push_back(rationals_to_json(row));
    }
    return {{"n", table.n}, {"rows", std::move(rows)}, {"columns", std::move(columns)}, {"entries", std::move(entries)}};
}

} // namespace isobar
