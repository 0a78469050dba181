#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "pcp/cli.hpp"
#include "pcp/problem_io.hpp"

using namespace pcp;

namespace {

Rational eval2(const std::string& src, const Rational& a, const Rational& b) {
    RingPtr r = make_ring({"x1", "x2"}, OrderKind::grevlex);
    std::vector<Rational> pt{a, b};
    return lower_to_poly(parse_expression(src), r).evaluate(pt);
}

std::size_t offset_of(const std::string& src) {
    try {
        parse_expression(src);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for: ", src);
    return static_cast<std::size_t>(-1);
}

bool is_on_grid(const Rational& r, int digits) {
    return (r * Rational::power_of_ten(digits)).den() == 1;
}

} // namespace

TEST_CASE("expression grammar") {
    CHECK(eval2("x1^2 - x2 - 1", Rational(3), Rational(5)) == Rational(3));
    CHECK(eval2("3/4 * x1 + 2", Rational(4), Rational(0)) == Rational(5));
    CHECK(eval2("-x1^2", Rational(3), Rational(0)) == Rational(-9));
    CHECK(eval2("(x1 + x2)^3", Rational(1), Rational(2)) == Rational(27));
    CHECK(eval2("2^10", Rational(0), Rational(0)) == Rational(1024));
    CHECK(eval2("+x1", Rational(7), Rational(0)) == Rational(7));
    CHECK(eval2("  x1 * ( x2 - 1/2 ) ", Rational(2), Rational(3)) == Rational(5));
    CHECK(eval2("((x1))", Rational(9), Rational(0)) == Rational(9));
    CHECK(eval2("x1 - x2 - x2", Rational(0), Rational(1)) == Rational(-2));
    CHECK(eval2("x1^0", Rational(5), Rational(0)) == Rational(1));
    CHECK(eval2("1/4 + 1/4", Rational(0), Rational(0)) + Rational(1, 2) == Rational(1));
    // Literals are integers or fractions; decimal points are rejected.
    CHECK_THROWS_AS(parse_expression("1/4 + 0.5"), ParseError);
}

TEST_CASE("expression errors point into the source") {
    CHECK(offset_of("x1 +") == 4);
    CHECK(offset_of("(x1") == 3);
    CHECK(offset_of("x1 x2") == 3);
    CHECK(offset_of("@") == 0);
    CHECK(offset_of("x1 ^ -2") == 5);
    CHECK(offset_of("") == 0);

    RingPtr r = make_ring({"x1"}, OrderKind::grevlex);
    try {
        lower_to_poly(parse_expression("x1 + qq"), r);
        FAIL("unknown variable accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
        CHECK(std::string(e.what()).find("qq") != std::string::npos);
    }
}

TEST_CASE("problem files parse and lower") {
    const std::string text = R"({
      "name": "sample",
      "variables": ["x1", "x2"],
      "f": ["x1^2 - x2 - 1", "x2^2 - x1 - 1"],
      "expected_solutions": [["1", 2]],
      "expected_deg_w": 16
    })";
    ProblemFile f = parse_problem_file(text);
    REQUIRE(f.name.has_value());
    CHECK(*f.name == "sample");
    CHECK((f.variables == std::vector<std::string>{"x1", "x2"}));
    REQUIRE(f.expected_solutions.has_value());
    REQUIRE(f.expected_solutions->size() == 1);
    CHECK((*f.expected_solutions)[0][0] == Rational(1));
    CHECK((*f.expected_solutions)[0][1] == Rational(2));
    CHECK(f.expected_deg_w == 16);

    PCPProblem p = to_problem(f);
    CHECK(p.n() == 2);
    CHECK(p.max_degree() == 2);
    std::vector<Rational> pt{Rational(2), Rational(3)};
    CHECK(p.f[0].evaluate(pt) == Rational(0));
    CHECK(p.f[1].evaluate(pt) == Rational(6));

    CHECK_THROWS_AS(parse_problem_file("[]"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("{\"f\": []}"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("{\"variables\": [], \"f\": []}"), ParseError);
    CHECK_THROWS_AS(parse_problem_file(R"({"variables": ["x", "x"], "f": ["x", "x"]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_problem_file(R"({"variables": ["x", "y"], "f": ["x"]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_problem_file(R"({"variables": ["x"], "f": [7]})"), ParseError);
    CHECK_THROWS_AS(parse_problem_file(R"({"variables": ["x"], "f": ["x"], "name": 3})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_problem_file(
            R"({"variables": ["x"], "f": ["x"], "expected_solutions": [[1, 2]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_problem_file(R"({"variables": ["x"], "f": ["x"], "expected_deg_w": "6"})"),
        ParseError);
    CHECK_THROWS_AS(parse_problem_file("{nope"), ParseError);
}

TEST_CASE("output documents round-trip") {
    OutputDoc doc;
    doc.status = "solved";
    doc.task = "bench";
    doc.problem_name = "q_n1";
    doc.n = 1;
    doc.is_d0 = true;
    doc.deg_w = 6;
    doc.w = std::vector<Rational>{Rational(0), Rational(-3), Rational(1)};
    doc.v = std::vector<std::vector<Rational>>{{Rational(1, 2), Rational(7)}};
    doc.phi = std::vector<Rational>{Rational(2), Rational(0), Rational(5)};
    doc.h = std::vector<std::vector<Rational>>{{Rational(1), Rational(2)},
                                               {Rational(0), Rational(1)}};
    doc.s = 3;
    doc.seed = 12345678901234567890ull;
    doc.k = 0;
    doc.omega = std::vector<std::vector<int>>{{1}, {2}};
    doc.sol_ln = 1;
    doc.sol_sp = 2;
    doc.a = std::vector<Rational>{Rational(1, 1000000)};
    SolutionRecord rec;
    rec.decimal = {"0.5000000000"};
    rec.bounds = {{Rational(499, 1000), Rational(501, 1000)}};
    rec.residual = Rational(1, 100000);
    doc.solutions = std::vector<SolutionRecord>{rec};
    StageTimings t;
    t.groebner = 1.5;
    t.radical = 0.125;
    t.shape = 0.002;
    t.enumeration = 0.0;
    doc.timings = t;
    doc.total_seconds = 3.25;

    std::string text = serialize_output(doc);
    CHECK(text.find("\"status\"") != std::string::npos);
    CHECK(text.find("\"residual\"") != std::string::npos);
    CHECK(text.back() == '\n');

    OutputDoc back = read_output_document(text);
    CHECK(back.status == doc.status);
    CHECK(back.task == doc.task);
    CHECK(back.problem_name == doc.problem_name);
    CHECK(back.n == doc.n);
    CHECK(back.is_d0 == doc.is_d0);
    CHECK(back.deg_w == doc.deg_w);
    CHECK(back.w == doc.w);
    CHECK(back.v == doc.v);
    CHECK(back.phi == doc.phi);
    CHECK(back.h == doc.h);
    CHECK(back.s == doc.s);
    CHECK(back.seed == doc.seed);
    CHECK(back.k == doc.k);
    CHECK(back.omega == doc.omega);
    CHECK(back.sol_ln == doc.sol_ln);
    CHECK(back.sol_sp == doc.sol_sp);
    CHECK(back.a == doc.a);
    REQUIRE(back.solutions.has_value());
    REQUIRE(back.solutions->size() == 1);
    CHECK((*back.solutions)[0].decimal == rec.decimal);
    CHECK((*back.solutions)[0].bounds == rec.bounds);
    CHECK((*back.solutions)[0].residual == rec.residual);
    REQUIRE(back.timings.has_value());
    CHECK(back.timings->groebner == 1.5);
    CHECK(back.timings->radical == 0.125);
    CHECK(back.timings->shape == 0.002);
    CHECK(back.timings->enumeration == 0.0);
    CHECK(back.total_seconds == 3.25);

    OutputDoc minimal;
    minimal.status = "error";
    minimal.task = "solve";
    minimal.error = "boom";
    OutputDoc mback = read_output_document(serialize_output(minimal));
    CHECK(mback.status == "error");
    CHECK(mback.error == std::string("boom"));
    CHECK_FALSE(mback.deg_w.has_value());
    CHECK_FALSE(mback.solutions.has_value());
    CHECK_FALSE(mback.timings.has_value());

    CHECK_THROWS_AS(read_output_document("{oops"), ParseError);
}

TEST_CASE("matrix files") {
    RationalMatrix m = parse_matrix_file(R"([[1, 2], [3, "4/5"]])");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m.at(0, 0) == Rational(1));
    CHECK(m.at(1, 1) == Rational(4, 5));

    CHECK_THROWS_AS(parse_matrix_file("[]"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("[[]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("[[1], [2, 3]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("{}"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file(R"([[1, "x"]])"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("[[1,"), ParseError);
}

TEST_CASE("solution records shed bisection denominators") {
    Solution s;
    Rational third(1, 3);
    Rational tiny = Rational::power_of_ten(-30);
    s.x.emplace_back(third - tiny, third + tiny);
    s.x.emplace_back(Rational(0));
    s.residual_bound = Rational(1, 7);

    auto recs = to_records({s}, 0);
    REQUIRE(recs.size() == 1);
    const SolutionRecord& r = recs[0];
    REQUIRE(r.decimal.size() == 2);
    CHECK(r.decimal[0] == "0.3333333333");
    CHECK(r.decimal[1] == "0");

    // Bounds widen onto the decimal grid, the residual rounds up onto it.
    REQUIRE(r.bounds.size() == 2);
    CHECK(r.bounds[0].first <= third - tiny);
    CHECK(r.bounds[0].second >= third + tiny);
    CHECK(is_on_grid(r.bounds[0].first, 12));
    CHECK(is_on_grid(r.bounds[0].second, 12));
    CHECK(r.bounds[0].second - r.bounds[0].first <= Rational(2, 1000000000000L));
    CHECK(r.bounds[1].first == Rational(0));
    CHECK(r.bounds[1].second == Rational(0));
    CHECK(r.residual >= s.residual_bound);
    CHECK(is_on_grid(r.residual, 12));
    CHECK(r.residual - s.residual_bound < Rational(1, 1000000000000L));

    // Negative lower bounds still round outward, away from zero.
    Solution neg;
    neg.x.emplace_back(-tiny, tiny);
    neg.residual_bound = Rational(0);
    auto nrecs = to_records({neg}, 2);
    CHECK(nrecs[0].bounds[0].first <= -tiny);
    CHECK(nrecs[0].bounds[0].second >= tiny);
    CHECK(nrecs[0].bounds[0].first.sign() < 0);
}

TEST_CASE("rational argument forms") {
    CHECK(parse_rational_arg("1e-6") == Rational::power_of_ten(-6));
    CHECK(parse_rational_arg("2.5") == Rational(5, 2));
    CHECK(parse_rational_arg("-0.125") == Rational(-1, 8));
    CHECK(parse_rational_arg("3/4") == Rational(3, 4));
    CHECK(parse_rational_arg("17") == Rational(17));
    CHECK(parse_rational_arg("1.5e2") == Rational(150));
    CHECK(parse_rational_arg("2e+3") == Rational(2000));
    CHECK(parse_rational_arg(".5") == Rational(1, 2));
    CHECK(parse_rational_arg("5.") == Rational(5));
    CHECK(parse_rational_arg("+0.25") == Rational(1, 4));
    CHECK(parse_rational_arg("0.0") == Rational(0));
    // Leading zeros are decimal, never octal.
    CHECK(parse_rational_arg("0.125") == Rational(1, 8));
    CHECK(Rational::from_string("025") == Rational(25));
    CHECK(Rational::from_string("007/010") == Rational(7, 10));

    CHECK_THROWS_AS(parse_rational_arg(""), ParseError);
    CHECK_THROWS_AS(parse_rational_arg("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational_arg("1e"), ParseError);
    CHECK_THROWS_AS(parse_rational_arg("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rational_arg("1 2"), ParseError);
    CHECK_THROWS_AS(parse_rational_arg("e5"), ParseError);
    CHECK_THROWS_AS(parse_rational_arg("1e100000"), ParseError);
}
