#include <doctest.h>

#include <sepstar/potentials.hpp>
#include <sepstar/verify.hpp>

#include "helpers.hpp"

using namespace sepstar;
using namespace helpers;

namespace
{

void require_all_pass(const VerificationReport &report)
{
    CHECK(!report.checks.empty());
    for (const auto &check : report.checks) {
        INFO(check.name << ": " << check.witness);
        CHECK(check.passed);
        CHECK(check.witness.empty());
    }
}

VerifyOptions options_for(const char *label, int n)
{
    VerifyOptions options;
    options.seed = 7;
    options.samples = 2;
    options.potential_label = label;
    options.expand_potential = [label, n](int order) { return builtin_potential(label, n, order); };
    return options;
}

} // namespace

TEST_CASE("flat potential passes every suite, including the Wick formula")
{
    const GeometryCache geom(builtin_potential("flat", 2, conservative_phi_order(2, 4)));
    const VerificationReport report = verify_all(geom, 4, options_for("flat", 2));
    require_all_pass(report);
    CHECK(report.find("wick_formula") != nullptr);
    CHECK(report.config.potential == "flat");
    CHECK(report.config.nu_order == 4);
    CHECK(report.config.seed == 7);
}

TEST_CASE("curved builtins pass every suite")
{
    for (const char *name : {"fubini-study", "hyperbolic"}) {
        const GeometryCache geom(builtin_potential(name, 1, conservative_phi_order(2, 4)));
        const VerificationReport report = verify_all(geom, 4, options_for(name, 1));
        INFO(name);
        require_all_pass(report);
        CHECK(report.find("wick_formula") == nullptr);
        CHECK(report.find("phi_order_stability") != nullptr);
    }
}

TEST_CASE("random plane potential: associativity at nu^3")
{
    const GeometryCache geom(random_potential(2, conservative_phi_order(2, 3), 21));
    VerifyOptions options;
    options.samples = 1;
    const VerificationReport report = verify_star_laws(geom, 3, options);
    require_all_pass(report);
}

TEST_CASE("at nu^0 associativity is commutativity of the pointwise product")
{
    const GeometryCache geom(builtin_potential("hyperbolic", 2, 8));
    VerifyOptions options;
    options.only = {"associativity", "unit"};
    require_all_pass(verify_star_laws(geom, 0, options));
}

TEST_CASE("negative control: wrong connection sign breaks the canonical relations")
{
    const GeometryCache geom(builtin_potential("fubini-study", 1, 10));
    VerifyOptions options;
    options.corrupt_connection_sign = true;
    const VerificationReport report = verify_algebraic_identities(geom, options);
    const CheckResult *r = report.find("canonical_relations");
    REQUIRE(r != nullptr);
    CHECK_FALSE(r->passed);
    CHECK(r->witness.find("coefficient of") != std::string::npos);
    CHECK_FALSE(report.passed());
    CHECK(report.find("symbol_commutators")->passed);
}

TEST_CASE("check filter")
{
    const GeometryCache geom(builtin_potential("fubini-study", 1, 10));
    VerifyOptions options;
    options.only = {"rho22_paths_agree"};
    const VerificationReport report = verify_cross_checks(geom, 4, options);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].name == "rho22_paths_agree");
}

TEST_CASE("difference descriptions")
{
    const Jet a = poly(1, 3, {{{0}, {0}, q(1)}});
    const Jet b = poly(1, 3, {{{0}, {0}, q(2)}});
    CHECK(jet_difference(a, a, 3).empty());
    CHECK(jet_difference(a, b, 3) == "coefficient of z1*zbar1 is 1 vs 2");
    CHECK(jet_difference(a, b, 1).empty());
    const Jet f = poly(1, 4, {{{0, 0}, {}, q(1)}, {{0}, {0}, q(3)}, {{}, {0}, q(5)}});
    CHECK(holomorphic_part(f) == poly(1, 4, {{{0, 0}, {}, q(1)}}));
    CHECK(antiholomorphic_part(f) == poly(1, 4, {{{}, {0}, q(5)}}));
}
