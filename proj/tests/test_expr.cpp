#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tfrac/expr.hpp"
#include "tfrac/problem_file.hpp"

#include <cmath>

using namespace tfrac;

namespace {

double ev(const std::string& text, ExprEnv env = {}) { return Expr::parse(text).eval(env); }

}  // namespace

TEST_CASE("arithmetic and precedence") {
    CHECK(ev("1 + 2 * 3") == doctest::Approx(7.0));
    CHECK(ev("(1 + 2) * 3") == doctest::Approx(9.0));
    CHECK(ev("2 ^ 3 ^ 2") == doctest::Approx(512.0));  // right associative
    CHECK(ev("-2 ^ 2") == doctest::Approx(-4.0));      // unary binds the power
    CHECK(ev("7 / 2 / 2") == doctest::Approx(1.75));
    CHECK(ev("1 - 2 - 3") == doctest::Approx(-4.0));
    CHECK(ev("pow(2, 10)") == doctest::Approx(1024.0));
}

TEST_CASE("functions, constants, variables") {
    ExprEnv env;
    env.x = 0.5;
    env.t = 0.25;
    env.alpha = 0.75;
    env.T = 2.0;
    CHECK(ev("sin(pi * x)", env) == doctest::Approx(1.0));
    CHECK(ev("cos(0)", env) == doctest::Approx(1.0));
    CHECK(ev("exp(1)", env) == doctest::Approx(M_E));
    CHECK(ev("t ^ alpha", env) == doctest::Approx(std::pow(0.25, 0.75)));
    CHECK(ev("T - t", env) == doctest::Approx(1.75));
    CHECK(ev("y", env) == doctest::Approx(0.0));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Expr::parse(""), ExprError);
    CHECK_THROWS_AS(Expr::parse("1 +"), ExprError);
    CHECK_THROWS_AS(Expr::parse("(1"), ExprError);
    CHECK_THROWS_AS(Expr::parse("foo(1)"), ExprError);
    CHECK_THROWS_AS(Expr::parse("sin 1"), ExprError);
    CHECK_THROWS_AS(Expr::parse("1 2"), ExprError);
    CHECK_THROWS_AS(Expr::parse("pow(1)"), ExprError);
}

TEST_CASE("problem file round trip") {
    const std::string text =
        "# comment\n"
        "domain = interval\n"
        "L = 1\n"
        "alpha = 0.75\n"
        "T = 1\n"
        "K = 2\n"
        "N = 128\n"
        "solver = l1\n"
        "u0 = sin(pi * x)\n"
        "f = t * sin(pi * x)   # trailing comment\n"
        "estimates = esti-u-1, ode-1-1\n";
    const ProblemFile pf = ProblemFile::parse(text);
    CHECK(pf.spec.alpha == doctest::Approx(0.75));
    CHECK(pf.spec.K == 2);
    CHECK(pf.spec.N == 128);
    CHECK(pf.spec.solver == SolverId::l1);
    CHECK(pf.spec.u0({0.5, 0.0}) == doctest::Approx(1.0));
    CHECK(pf.spec.f({0.5, 0.0}, 0.25) == doctest::Approx(0.25));
    CHECK(pf.estimates == std::vector<std::string>{"esti-u-1", "ode-1-1"});
    CHECK(pf.hash == fnv1a64(text));
    CHECK(pf.hash != 0);
}

TEST_CASE("problem file rejects malformed input") {
    CHECK_THROWS_AS(ProblemFile::parse("u0 = 0\nu0 = 1\nalpha = 0.75\n"), ProblemFileError);
    CHECK_THROWS_AS(ProblemFile::parse("bogus_key = 1\nu0 = 0\n"), ProblemFileError);
    CHECK_THROWS_AS(ProblemFile::parse("alpha = 0.75\n"), ProblemFileError);  // no u0
    CHECK_THROWS_AS(ProblemFile::parse("domain = triangle\nu0 = 0\n"), ProblemFileError);
    CHECK_THROWS_AS(ProblemFile::parse("alpha = abc\nu0 = 0\n"), ProblemFileError);
    CHECK_THROWS_AS(ProblemFile::parse("no equals sign\n"), ProblemFileError);
    CHECK_THROWS_AS(ProblemFile::parse("u0 = sin(\n"), ProblemFileError);
    // Valid syntax, invalid model parameter.
    CHECK_THROWS_AS(ProblemFile::parse("alpha = 0.4\nu0 = 0\n"), std::invalid_argument);
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 12638187200555641996ull);
}
