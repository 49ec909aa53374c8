#ifndef ISOBAR_IO_HPP
#define ISOBAR_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include <isobar/arith.hpp>
#include <isobar/polynomial.hpp>
#include <isobar/schur.hpp>
#include <isobar/wip.hpp>

namespace isobar
{

enum class OutputFormat { text, json };

// Text form: terms ascending, e.g. "t1^2 + t2", "-t1*t2 - t3",
// "(3/8)t1^2 + (1/2)t2", "2t1*t3". The zero polynomial prints as "0" and a
// constant prints as its rational value.
std::string format_poly_text(const IsobaricPolynomial &p);

// Inverse of format_poly_text. Also accepts an explicit "*" after a
// coefficient and whitespace anywhere between tokens. The level is inferred
// from the terms; pass it for the zero polynomial.
IsobaricPolynomial parse_poly_text(std::string_view text, int level_if_zero = 0);

// {"level": n, "terms": [{"alpha": [a1, ...], "coeff": "p/q"}, ...]}
nlohmann::json poly_to_json(const IsobaricPolynomial &p);
IsobaricPolynomial poly_from_json(const nlohmann::json &j);

std::string format_poly(const IsobaricPolynomial &p, OutputFormat mode);

// {"k": k, "polys": [poly, ...]}
nlohmann::json sequence_to_json(const IsobaricSequence &s);
IsobaricSequence sequence_from_json(const nlohmann::json &j);

// Array of fraction strings.
nlohmann::json rationals_to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const nlohmann::json &j);

// {"a": ["1", "1"], "k": 2}
nlohmann::json core_spec_to_json(const CoreFunctionSpec &spec);
CoreFunctionSpec core_spec_from_json(const nlohmann::json &j);

nlohmann::json partition_to_json(const Partition &lambda);

// {"n": n, "rows": [[...], ...], "columns": [[...], ...], "entries": [["1", ...], ...]}
nlohmann::json character_table_to_json(const CharacterTable &table);

} // namespace isobar

#endif
