#include <isobar/cli.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include <isobar/arith.hpp>
#include <isobar/errors.hpp>
#include <isobar/io.hpp>
#include <isobar/roots.hpp>
#include <isobar/schur.hpp>
#include <isobar/verify.hpp>

namespace isobar::cli
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

struct Options {
    int n = -1;
    int k = -1;
    std::string weights = "ones";
    std::vector<std::string> q;
    std::string lambda;
    int r = -1;
    std::string coeffs;
    std::int64_t m = 0;
    std::string format = "text";
    std::uint64_t seed = 20240601;
    std::string out;
    std::string route = "closed";
    std::string basis = "E";
    std::vector<std::string> inputs;
};

OutputFormat output_format(const Options &o)
{
    return o.format == "json" ? OutputFormat::json : OutputFormat::text;
}

int truncation(const Options &o)
{
    return o.k > 0 ? o.k : std::max(o.n, 1);
}

Rational single_q(const Options &o, const Rational &fallback)
{
    if (o.q.empty()) {
        return fallback;
    }
    if (o.q.size() > 1) {
        throw parse_error("this command takes a single --q");
    }
    return parse_rational(o.q.front());
}

std::string format_sequence(const IsobaricSequence &s, OutputFormat mode)
{
    if (mode == OutputFormat::json) {
        return sequence_to_json(s).dump();
    }
    std::ostringstream text;
    for (int n = 0; n <= s.top_level(); ++n) {
        text << n << ": " << format_poly_text(s[n]) << '\n';
    }
    return text.str();
}

IsobaricSequence read_sequence(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw parse_error(path + ": " + e.what());
    }
    return sequence_from_json(j);
}

// The sequence operands of levelmul / levelinv: input files, or roots H(q)
// of the chosen family.
std::vector<IsobaricSequence> sequence_operands(const Options &o)
{
    std::vector<IsobaricSequence> operands;
    for (const auto &path : o.inputs) {
        operands.push_back(read_sequence(path));
    }
    if (!o.q.empty()) {
        if (o.n < 0) {
            throw parse_error("--n is required with --q");
        }
        const auto omega = parse_weight_spec(o.weights);
        for (const auto &q : o.q) {
            operands.push_back(root_sequence(truncation(o), o.n, omega, parse_rational(q)));
        }
    }
    return operands;
}

std::string run_wip(const Options &o)
{
    const auto omega = parse_weight_spec(o.weights);
    const int k = truncation(o);
    IsobaricPolynomial p;
    if (o.route == "closed") {
        p = wip(o.n, k, omega);
    } else if (o.route == "recursion") {
        p = wip_via_recursion(o.n, k, omega);
    } else {
        p = wip_via_convolution(o.n, k, omega);
    }
    return format_poly(p, output_format(o));
}

std::string run_schur(const Options &o)
{
    const auto lambda = parse_partition(o.lambda);
    const auto basis = o.basis == "H" ? DeterminantBasis::complete : DeterminantBasis::elementary;
    return format_poly(schur_reflect(lambda, basis), output_format(o));
}

std::string run_hooks(const Options &o, bool expand)
{
    const int n = o.n;
    if (expand) {
        const auto c = to_hook_basis(parse_weight_spec(o.weights), n);
        if (output_format(o) == OutputFormat::json) {
            return rationals_to_json(c).dump();
        }
        std::ostringstream text;
        for (int r = 0; r < n; ++r) {
            text << "c" << r << " = " << to_string(c[static_cast<std::size_t>(r)]) << '\n';
        }
        return text.str();
    }
    int first = 0;
    int last = n - 1;
    if (o.r >= 0) {
        if (o.r >= n) {
            throw domain_error("hook needs 0 <= r <= n-1");
        }
        first = last = o.r;
    }
    if (output_format(o) == OutputFormat::json) {
        auto list = nlohmann::json::array();
        for (int r = first; r <= last; ++r) {
            list.push_back({{"r", r},
                            {"lambda", partition_to_json(Partition::hook(n, r))},
                            {"weight", rationals_to_json(hook_weight(r).take(n))},
                            {"poly", poly_to_json(hook_reflect(n, r))}});
        }
        return list.dump();
    }
    std::ostringstream text;
    for (int r = first; r <= last; ++r) {
        text << "(" << Partition::hook(n, r).to_string() << ") " << format_poly_text(hook_reflect(n, r)) << '\n';
    }
    return text.str();
}

std::string run_root(const Options &o)
{
    const RootQuery query{o.n, truncation(o), parse_weight_spec(o.weights), single_q(o, 1)};
    return format_poly(root(query), output_format(o));
}

std::string run_levelmul(const Options &o)
{
    const auto operands = sequence_operands(o);
    if (operands.size() < 2) {
        throw parse_error("levelmul needs at least two operands (--q or --input)");
    }
    IsobaricSequence product = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) {
        product = level_product(product, operands[i]);
    }
    return format_sequence(product, output_format(o));
}

std::string run_levelinv(const Options &o)
{
    const auto operands = sequence_operands(o);
    if (operands.size() != 1) {
        throw parse_error("levelinv needs exactly one operand (--q or --input)");
    }
    return format_sequence(level_inverse(operands.front()), output_format(o));
}

std::string run_arith(const Options &o)
{
    const auto parsed = parse_weight_spec(o.coeffs);
    if (parsed.tail()) {
        throw parse_error("--coeffs takes an explicit list of rationals");
    }
    const CoreFunctionSpec spec{parsed.prefix()};
    if (spec.a.empty()) {
        throw parse_error("--coeffs needs at least one coefficient");
    }
    const Rational q = single_q(o, 1);
    if (o.m != 0) {
        const auto value = evaluate_global(spec, q, o.m);
        if (output_format(o) == OutputFormat::json) {
            return nlohmann::json{{"m", o.m}, {"q", to_string(q)}, {"value", to_string(value)}}.dump();
        }
        return to_string(value);
    }
    const int top = o.n >= 0 ? o.n : 10;
    const auto values = rational_power(spec, q, top);
    if (output_format(o) == OutputFormat::json) {
        return nlohmann::json{{"spec", core_spec_to_json(spec)}, {"q", to_string(q)}, {"values", rationals_to_json(values.values())}}
            .dump();
    }
    std::string text;
    for (const auto &v : values.values()) {
        text += (text.empty() ? "" : " ") + to_string(v);
    }
    return text;
}

std::string run_chartable(const Options &o)
{
    const auto table = character_table(o.n);
    if (output_format(o) == OutputFormat::json) {
        return character_table_to_json(table).dump();
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header = {""};
    for (const auto &mu : table.columns) {
        header.push_back("(" + mu.to_string() + ")");
    }
    cells.push_back(header);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        std::vector<std::string> row = {"(" + table.rows[i].to_string() + ")"};
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            row.push_back(to_string(table.at(i, j)));
        }
        cells.push_back(row);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto &row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            width[j] = std::max(width[j], row[j].size());
        }
    }
    std::ostringstream text;
    for (const auto &row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            text << (j == 0 ? "" : "  ") << std::setw(static_cast<int>(width[j])) << row[j];
        }
        text << '\n';
    }
    return text.str();
}

std::string run_verify(const Options &o, bool &all_ok)
{
    const auto results = verify::run_all(o.seed);
    all_ok = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.ok(); });
    if (output_format(o) == OutputFormat::json) {
        auto list = nlohmann::json::array();
        for (const auto &r : results) {
            list.push_back({{"suite", r.name}, {"passed", r.passed}, {"total", r.total}, {"failures", r.failures}});
        }
        return nlohmann::json{{"seed", o.seed}, {"ok", all_ok}, {"suites", list}}.dump();
    }
    std::ostringstream text;
    for (const auto &r : results) {
        text << (r.ok() ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.total << '\n';
        for (const auto &f : r.failures) {
            text << "    " << f << '\n';
        }
    }
    text << (all_ok ? "all suites passed" : "some suites failed") << " (seed " << o.seed << ")\n";
    return text.str();
}

void emit(const Options &o, std::string text, std::ostream &out)
{
    if (text.empty() || text.back() != '\n') {
        text += '\n';
    }
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file || !(file << text)) {
        throw domain_error("cannot write " + o.out);
    }
}

} // namespace

WeightVector parse_weight_spec(std::string_view spec)
{
    const auto s = trim(spec);
    if (s == "ones") {
        return WeightVector::ones();
    }
    if (s == "naturals") {
        return WeightVector::naturals();
    }
    if (s.starts_with("hook:")) {
        const auto digits = trim(s.substr(5));
        int r = 0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
        if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || r < 0) {
            throw parse_error("bad hook weight spec '" + std::string(spec) + "'");
        }
        return WeightVector::hook(r);
    }
    if (s.empty()) {
        throw parse_error("empty weight spec");
    }
    std::vector<Rational> entries;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        const auto item = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (item.empty()) {
            throw parse_error("empty entry in weight spec '" + std::string(spec) + "'");
        }
        entries.push_back(parse_rational(item));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return WeightVector(std::move(entries));
}

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Weighted isobaric polynomials, Schur reflects and level-product roots", "isobar"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&o](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "Write output to FILE instead of stdout");
    };
    const auto add_family = [&o](CLI::App *sub) {
        sub->add_option("--k", o.k, "Truncation (default: n)")->check(CLI::PositiveNumber);
        sub->add_option("--weights", o.weights, "ones | naturals | hook:r | comma list of rationals");
    };

    auto *wip_cmd = app.add_subcommand("wip", "Level-n weighted isobaric polynomial");
    wip_cmd->add_option("--n", o.n, "Level")->required();
    add_family(wip_cmd);
    wip_cmd->add_option("--route", o.route, "Construction route")
        ->check(CLI::IsMember({"closed", "recursion", "convolution"}));
    add_format(wip_cmd);

    auto *schur_cmd = app.add_subcommand("schur", "Isobaric reflect of a Schur polynomial");
    schur_cmd->add_option("--lambda", o.lambda, "Partition, e.g. 3,2")->required();
    schur_cmd->add_option("--basis", o.basis, "Determinant form: E (elementary) or H (complete)")
        ->check(CLI::IsMember({"E", "H"}));
    add_format(schur_cmd);

    auto *hooks_cmd = app.add_subcommand("hooks", "Hook reflects, or hook-basis coefficients with --weights");
    hooks_cmd->add_option("--n", o.n, "Level")->required();
    hooks_cmd->add_option("--r", o.r, "Only the hook (n-r, 1^r)")->check(CLI::NonNegativeNumber);
    auto *hooks_weights = hooks_cmd->add_option("--weights", o.weights, "Expand wip(n, n, w) in the hook basis");
    add_format(hooks_cmd);

    auto *root_cmd = app.add_subcommand("root", "Level-product root H(t, q)");
    root_cmd->add_option("--n", o.n, "Level")->required();
    add_family(root_cmd);
    root_cmd->add_option("--q", o.q, "Exponent q (rational, default 1)")->expected(1);
    add_format(root_cmd);

    auto *mul_cmd = app.add_subcommand("levelmul", "Level product of sequences H(q1) * H(q2) * ...");
    mul_cmd->add_option("--n", o.n, "Top level");
    add_family(mul_cmd);
    mul_cmd->add_option("--q", o.q, "Exponent of one root operand (repeatable)");
    mul_cmd->add_option("--input", o.inputs, "Sequence JSON file operand (repeatable)");
    add_format(mul_cmd);

    auto *inv_cmd = app.add_subcommand("levelinv", "Level-product inverse of H(q) or a sequence file");
    inv_cmd->add_option("--n", o.n, "Top level");
    add_family(inv_cmd);
    inv_cmd->add_option("--q", o.q, "Exponent of the root operand");
    inv_cmd->add_option("--input", o.inputs, "Sequence JSON file operand");
    add_format(inv_cmd);

    auto *arith_cmd = app.add_subcommand("arith", "Core arithmetic function: local values or f(m)");
    arith_cmd->add_option("--coeffs", o.coeffs, "Core coefficients a1,...,ak")->required();
    arith_cmd->add_option("--q", o.q, "Power q (default 1)")->expected(1);
    arith_cmd->add_option("--n", o.n, "Top prime-power exponent for local values (default 10)");
    arith_cmd->add_option("--m", o.m, "Evaluate at the integer m")->check(CLI::PositiveNumber);
    add_format(arith_cmd);

    auto *table_cmd = app.add_subcommand("chartable", "Character table of Sym(n) from Schur reflects");
    table_cmd->add_option("--n", o.n, "n")->required();
    add_format(table_cmd);

    auto *verify_cmd = app.add_subcommand("verify", "Run the identity suites");
    verify_cmd->add_option("--seed", o.seed, "Seed for random instances");
    add_format(verify_cmd);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("isobar");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        std::string text;
        bool ok = true;
        if (wip_cmd->parsed()) {
            text = run_wip(o);
        } else if (schur_cmd->parsed()) {
            text = run_schur(o);
        } else if (hooks_cmd->parsed()) {
            text = run_hooks(o, hooks_weights->count() > 0);
        } else if (root_cmd->parsed()) {
            text = run_root(o);
        } else if (mul_cmd->parsed()) {
            text = run_levelmul(o);
        } else if (inv_cmd->parsed()) {
            text = run_levelinv(o);
        } else if (arith_cmd->parsed()) {
            text = run_arith(o);
        } else if (table_cmd->parsed()) {
            text = run_chartable(o);
        } else if (verify_cmd->parsed()) {
            text = run_verify(o, ok);
        }
        emit(o, std::move(text), out);
        return ok ? exit_ok : exit_computation_error;
    } catch (const parse_error &e) {
        err << "isobar: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const std::exception &e) {
        err << "isobar: " << e.what() << '\n';
        return exit_computation_error;
    }
}

} // namespace isobar::cli
