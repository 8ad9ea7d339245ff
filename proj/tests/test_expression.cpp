#include <doctest.h>

#include <sepstar/errors.hpp>
#include <sepstar/expression.hpp>
#include <sepstar/potentials.hpp>
#include <sepstar/serialize.hpp>

#include "helpers.hpp"

using namespace sepstar;
using namespace helpers;

TEST_CASE("flat potential written out")
{
    const ExprPtr e = parse_expression("z1*zbar1 + z2*zbar2", 2);
    CHECK(e->kind == Expr::Kind::add);
    CHECK(evaluate(*e, 2, 6) == builtin_potential("flat", 2, 6));
    CHECK(expression_degree(*e) == 2);
}

TEST_CASE("rational coefficients")
{
    const ExprPtr e = parse_expression("zbar1^2 + 3/4*z1", 1);
    CHECK(to_string(*e) == "(zbar1^2 + 3/4*z1)");
    CHECK(evaluate(*e, 1, 4) == poly(1, 4, {{{}, {0, 0}, q(1)}, {{0}, {}, q(3, 4)}}));
    CHECK(expression_degree(*e) == 2);
}

TEST_CASE("signs, powers, parentheses, i and builtins")
{
    CHECK(evaluate_expression("-z1 + +zbar1", 1, 3) == poly(1, 3, {{{0}, {}, q(-1)}, {{}, {0}, q(1)}}));
    CHECK(evaluate_expression("(1 + z1*zbar1)^2", 1, 4) ==
          poly(1, 4, {{{}, {}, q(1)}, {{0}, {0}, q(2)}, {{0, 0}, {0, 0}, q(1)}}));
    CHECK(evaluate_expression("i*z1", 1, 2) == Jet::monomial(1, 2, mono({0}, {}), GaussRational::i()));
    CHECK(evaluate_expression("fubini-study + 1/4*z1^2*zbar1^2", 1, 6) ==
          builtin_potential("fubini-study", 1, 6) + poly(1, 6, {{{0, 0}, {0, 0}, q(1, 4)}}));
    CHECK(evaluate_expression("z1^9", 1, 4).is_zero());
    CHECK(expression_degree(*parse_expression("(z1 + zbar2)^3*z2", 2)) == 4);
}

TEST_CASE("parse errors carry a position")
{
    try {
        parse_expression("z3", 2);
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        CHECK(std::string(e.what()).find("index 3 exceeds dimension 2") != std::string::npos);
        CHECK(e.position() == 0);
    }
    CHECK_THROWS_AS(parse_expression("", 1), parse_error);
    CHECK_THROWS_AS(parse_expression("z0", 1), parse_error);
    CHECK_THROWS_AS(parse_expression("1/0", 1), parse_error);
    CHECK_THROWS_AS(parse_expression("(z1", 1), parse_error);
    CHECK_THROWS_AS(parse_expression("z1 $ 2", 1), parse_error);
    CHECK_THROWS_AS(parse_expression("z1^", 1), parse_error);
    try {
        parse_expression("z1 + w", 1);
    } catch (const parse_error &e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("JSON for coefficients, jets and series")
{
    CHECK(coefficient_json(q(3, 4)) == "3/4");
    CHECK(coefficient_json(GaussRational(mpq_class(1, 2), mpq_class(-2))) == Json::array({"1/2", "-2"}));
    const Jet j = poly(1, 2, {{{}, {}, q(1)}, {{0}, {0}, q(-1, 2)}});
    CHECK(jet_json(j).dump() == R"({"1":"1","z1*zbar1":"-1/2"})");
    NuSeries<Jet> s({j, Jet(1, 2)});
    CHECK(series_text(s).dump() == R"({"0":"1 - 1/2*z1*zbar1","1":"0"})");
    CHECK(series_json(s).dump() == R"({"0":{"1":"1","z1*zbar1":"-1/2"},"1":{}})");
    Symbol t(1, 2);
    t.add_term(fiber({}, {0}, {0, 0}), c(1, 2, 1, 2));
    CHECK(symbol_json(t).dump() == R"({"eta1*etabar1^2":"1/2"})");
    CHECK(monomial_name(mono({0}, {}), fiber({0}, {}, {}), 1) == "z1*zetabar1");
}

TEST_CASE("report JSON")
{
    VerificationReport r;
    r.config = {"flat", 1, 8, 2, 2, 5};
    r.checks.push_back({"unit", true, ""});
    r.checks.push_back({"associativity", false, "triple 1"});
    const Json j = report_json(r);
    CHECK(j["passed"] == false);
    CHECK(j["config"]["seed"] == 5);
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK(j["checks"][1]["witness"] == "triple 1");
}
