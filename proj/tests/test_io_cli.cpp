#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <isobar/cli.hpp>
#include <isobar/errors.hpp>
#include <isobar/io.hpp>
#include <isobar/roots.hpp>
#include <isobar/sampling.hpp>

using namespace isobar;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("text format")
{
    CHECK(format_poly_text(schur_reflect(Partition{2, 1})) == "-t1*t2 - t3");
    CHECK(format_poly_text(IsobaricPolynomial(3)) == "0");
    CHECK(format_poly_text(IsobaricPolynomial::constant(make_rational(-5, 2))) == "-5/2");
    CHECK(format_poly_text(root({2, 2, WeightVector::ones(), make_rational(1, 2)})) == "(3/8)t1^2 + (1/2)t2");
    CHECK(format_poly_text(wip(4, 4, WeightVector::naturals())) == "t1^4 + 4t1^2*t2 + 2t2^2 + 4t1*t3 + 4t4");
    CHECK(format_poly_text(IsobaricPolynomial::monomial(ExponentVector{1, 1}, make_rational(-3, 8)))
          == "-(3/8)t1*t2");
}

TEST_CASE("text parsing")
{
    const auto p = parse_poly_text("t1^4 + 3t1^2*t2 + t2^2 + 2 t1 t3 + t4");
    CHECK(p == wip(4, 4, WeightVector::ones()));
    CHECK(parse_poly_text("-t1^4t2- 3t1^2t2^2") == parse_poly_text("-t1^4*t2 - 3t1^2*t2^2"));
    CHECK(parse_poly_text("(3/8)t1^2 + (1/2)*t2") == root({2, 2, WeightVector::ones(), make_rational(1, 2)}));
    CHECK(parse_poly_text("0", 4) == IsobaricPolynomial(4));
    CHECK_THROWS_AS(parse_poly_text("t1 + t2"), parse_error);
    CHECK_THROWS_AS(parse_poly_text("t1 +"), parse_error);
    CHECK_THROWS_AS(parse_poly_text("x1"), parse_error);
}

TEST_CASE("json")
{
    const auto f2 = wip(2, 2, WeightVector::ones());
    CHECK(format_poly(f2, OutputFormat::json)
          == R"({"level":2,"terms":[{"alpha":[2],"coeff":"1"},{"alpha":[0,1],"coeff":"1"}]})");
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"level":2,"terms":[{"alpha":[1],"coeff":"1"}]})")),
                    parse_error);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"terms":[]})")), parse_error);

    sampling::Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = trial % 9;
        const auto p = sampling::random_polynomial(rng, n, std::max(n, 1));
        REQUIRE(poly_from_json(nlohmann::json::parse(format_poly(p, OutputFormat::json))) == p);
        REQUIRE(parse_poly_text(format_poly_text(p), n) == p);
    }

    const auto seq = root_sequence(3, 4, WeightVector::naturals(), make_rational(-1, 3));
    CHECK(sequence_from_json(nlohmann::json::parse(sequence_to_json(seq).dump())) == seq);

    const CoreFunctionSpec spec{{1, make_rational(-1, 2)}};
    CHECK(core_spec_to_json(spec).dump() == R"({"a":["1","-1/2"],"k":2})");
    CHECK(core_spec_from_json(core_spec_to_json(spec)).a == spec.a);
    CHECK_THROWS_AS(core_spec_from_json(nlohmann::json::parse(R"({"a":["1"],"k":2})")), parse_error);
}

TEST_CASE("weight specs")
{
    CHECK(cli::parse_weight_spec("ones") == WeightVector::ones());
    CHECK(cli::parse_weight_spec("naturals") == WeightVector::naturals());
    CHECK(cli::parse_weight_spec("hook:2").take(4) == std::vector<Rational>{0, 0, 1, 1});
    CHECK(cli::parse_weight_spec("1,-1/2").take(2) == std::vector<Rational>{1, make_rational(-1, 2)});
    CHECK(cli::parse_weight_spec(" 3 , 4 ").take(2) == std::vector<Rational>{3, 4});
    CHECK_THROWS_AS(cli::parse_weight_spec("hook:"), parse_error);
    CHECK_THROWS_AS(cli::parse_weight_spec("hook:-1"), parse_error);
    CHECK_THROWS_AS(cli::parse_weight_spec("evens"), parse_error);
    CHECK_THROWS_AS(cli::parse_weight_spec("1,,2"), parse_error);
    CHECK_THROWS_AS(cli::parse_weight_spec("1/0"), parse_error);
}

TEST_CASE("command line")
{
    auto r = run({"wip", "--n", "4", "--k", "4", "--weights", "ones"});
    CHECK(r.code == 0);
    CHECK(r.out == "t1^4 + 3t1^2*t2 + t2^2 + 2t1*t3 + t4\n");

    for (const char *route : {"recursion", "convolution"}) {
        CHECK(run({"wip", "--n", "4", "--route", route}).out == r.out);
    }

    r = run({"schur", "--lambda", "3,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "t1*t2^2 - t1^2*t3 + t2*t3 - t1*t4\n");
    CHECK(run({"schur", "--lambda", "3,2", "--basis", "H"}).out == r.out);

    r = run({"root", "--n", "2", "--k", "2", "--weights", "ones", "--q", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(3/8)t1^2 + (1/2)t2\n");

    r = run({"hooks", "--n", "3"});
    CHECK(r.out == "(3) t1^3 + 2t1*t2 + t3\n(2,1) -t1*t2 - t3\n(1,1,1) t3\n");
    CHECK(run({"hooks", "--n", "3", "--r", "1"}).out == "(2,1) -t1*t2 - t3\n");
    CHECK(run({"hooks", "--n", "3", "--weights", "1,2,3"}).out == "c0 = 1\nc1 = -1\nc2 = 1\n");

    r = run({"levelmul", "--n", "3", "--q", "1/2", "--q", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0: 1\n1: t1\n2: t1^2 + t2\n3: t1^3 + 2t1*t2 + t3\n");
    CHECK(run({"levelinv", "--n", "3", "--q", "1"}).out == "0: 1\n1: -t1\n2: -t2\n3: -t3\n");

    CHECK(run({"arith", "--coeffs", "1,1", "--n", "7"}).out == "1 1 2 3 5 8 13 21\n");
    CHECK(run({"arith", "--coeffs", "1,1", "--q", "1/2", "--n", "2"}).out == "1 1/2 7/8\n");
    CHECK(run({"arith", "--coeffs", "1,1", "--m", "12"}).out == "2\n");
    CHECK(run({"arith", "--coeffs", "1,1", "--m", "100", "--format", "json"}).out
          == "{\"m\":100,\"q\":\"1\",\"value\":\"4\"}\n");

    r = run({"chartable", "--n", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["entries"] == nlohmann::json::parse(R"([["1","1"],["1","-1"]])"));

    r = run({"wip", "--n", "2", "--format", "json"});
    CHECK(r.out == "{\"level\":2,\"terms\":[{\"alpha\":[2],\"coeff\":\"1\"},{\"alpha\":[0,1],\"coeff\":\"1\"}]}\n");
}

TEST_CASE("command line files")
{
    const std::string path = "isobar_test_sequence.json";
    auto r = run({"levelmul", "--n", "4", "--weights", "naturals", "--q", "1/3", "--q", "1/3", "--format", "json",
                  "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    r = run({"levelmul", "--input", path, "--n", "4", "--weights", "naturals", "--q", "1/3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto combined = sequence_from_json(nlohmann::json::parse(r.out));
    CHECK(combined == root_sequence(4, 4, WeightVector::naturals(), 1));
    r = run({"levelinv", "--input", path});
    CHECK(r.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("command line errors")
{
    CHECK(run({}).code == cli::exit_usage_error);
    CHECK(run({"frobnicate"}).code == cli::exit_usage_error);
    CHECK(run({"wip"}).code == cli::exit_usage_error);
    CHECK(run({"wip", "--n", "3", "--weights", "1/0"}).code == cli::exit_usage_error);
    CHECK(run({"wip", "--n", "3", "--weights", "sevens"}).code == cli::exit_usage_error);
    CHECK(run({"wip", "--n", "3", "--format", "xml"}).code == cli::exit_usage_error);
    CHECK(run({"schur", "--lambda", "1,2"}).code == cli::exit_usage_error);
    CHECK(run({"root", "--n", "2", "--q", "0.5"}).code == cli::exit_usage_error);
    CHECK(run({"levelinv", "--input", "no/such/file.json"}).code == cli::exit_usage_error);

    // well-formed requests the library rejects
    CHECK(run({"wip", "--n", "0"}).code == cli::exit_computation_error);
    CHECK(run({"wip", "--n", "4", "--weights", "1,2"}).code == cli::exit_computation_error);
    CHECK(run({"hooks", "--n", "3", "--r", "3"}).code == cli::exit_computation_error);
    CHECK(run({"chartable", "--n", "9"}).code == cli::exit_computation_error);
    CHECK(run({"arith", "--coeffs", "1,1", "--m", "1000000000001"}).code == cli::exit_computation_error);
    const auto r = run({"wip", "--n", "4", "--weights", "1,2"});
    CHECK(r.err.find("isobar:") == 0);

    CHECK(run({"--help"}).code == cli::exit_ok);
}
