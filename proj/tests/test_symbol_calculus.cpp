#include <doctest.h>

#include <sepstar/errors.hpp>
#include <sepstar/potentials.hpp>
#include <sepstar/symbol_calculus.hpp>
#include <sepstar/verify.hpp>

#include "helpers.hpp"

using namespace sepstar;
using namespace helpers;

namespace
{

GeometryCache builtin(const char *name, int n, int order) { return GeometryCache(builtin_potential(name, n, order)); }

Symbol sym(int n, int order, std::initializer_list<std::pair<FiberIndex, Jet>> terms)
{
    Symbol s(n, order);
    for (const auto &[m, coeff] : terms) {
        s.add_term(m, coeff);
    }
    return s;
}

Jet z(int order) { return Jet::variable(1, order, Variable::z(0)); }
Jet zb(int order) { return Jet::variable(1, order, Variable::zbar(0)); }

bool same(const Symbol &a, const Symbol &b)
{
    return symbol_difference(a, b, std::min(a.order(), b.order())).empty();
}

} // namespace

TEST_CASE("Euler operator counts etabar only")
{
    const Symbol a = Symbol::monomial(1, 4, fiber({}, {}, {0, 0}), zb(4));
    CHECK(euler_apply(a) == a.scaled(q(2)));
    CHECK(euler_apply(Symbol::scalar(z(4))).is_zero());
    const Symbol b = Symbol::monomial(1, 4, fiber({}, {0}, {0}));
    CHECK(euler_apply(b) == b);
}

TEST_CASE("inverse Euler operator")
{
    const Symbol a = Symbol::monomial(1, 4, fiber({}, {}, {0, 0}), z(4));
    CHECK(euler_inverse(a) == a.scaled(q(1, 2)));
    const Symbol b = sym(1, 4, {{fiber({}, {}, {0}), c(1, 4, 1)}, {fiber({}, {}, {0, 0, 0}), c(1, 4, 1)}});
    const Symbol expected = sym(1, 4, {{fiber({}, {}, {0}), c(1, 4, 1)}, {fiber({}, {}, {0, 0, 0}), c(1, 4, 1, 3)}});
    CHECK(euler_inverse(b) == expected);
    CHECK(euler_apply(euler_inverse(b)) == b);
    try {
        euler_inverse(Symbol::scalar(c(1, 4, 1)));
        FAIL("expected not_in_image");
    } catch (const not_in_image &e) {
        CHECK(std::string(e.what()) == "symbol not in the image of E");
    }
}

TEST_CASE("operator Q")
{
    const GeometryCache flat = builtin("flat", 1, 8);
    CHECK(same(q_apply(flat, Symbol::scalar(zb(6))), Symbol::monomial(1, 5, fiber({}, {}, {0}))));
    CHECK(q_apply(flat, Symbol::monomial(1, 6, fiber({}, {}, {0}))).is_zero());

    // Q(etabar) = -Gamma etabar^2 = (2 z - 2 z^2 zbar + ...) etabar^2
    const GeometryCache fs = builtin("fubini-study", 1, 10);
    const Symbol qe = q_apply(fs, Symbol::monomial(1, 8, fiber({}, {}, {0})));
    const Jet coeff = qe.coeff(fiber({}, {}, {0, 0}));
    CHECK(coeff.coeff(mono({0}, {})) == q(2));
    CHECK(coeff.coeff(mono({0, 0}, {0})) == q(-2));
    CHECK(jet_difference(coeff, -fs.christoffel_bar(0, 0, 0), coeff.order()).empty());
    CHECK(qe.terms().size() == 1);
}

TEST_CASE("Q in invariant and chart form")
{
    const GeometryCache geom(random_potential(2, 10, 2));
    Rng rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        Symbol f(2, 6);
        f.add_term(fiber({}, {}, {0, 1}), random_test_polynomial(2, 2, 6, rng));
        f.add_term(fiber({}, {1}, {1, 1, 0}), random_test_polynomial(2, 2, 6, rng));
        f.add_term(fiber({}, {}, {}), random_test_polynomial(2, 3, 6, rng));
        CHECK(same(q_apply(geom, f), q_apply_coordinate(geom, f)));
    }
}

TEST_CASE("composition")
{
    const GeometryCache flat = builtin("flat", 1, 8);
    const Symbol etabar = Symbol::monomial(1, 6, fiber({}, {}, {0}));
    const Symbol zetabar = Symbol::monomial(1, 6, fiber({0}, {}, {}));
    CHECK(same(compose(flat, etabar, Symbol::scalar(z(6))),
               sym(1, 5, {{fiber({}, {}, {0}), z(5)}, {fiber({}, {}, {}), c(1, 5, 1)}})));
    CHECK(same(compose(flat, Symbol::scalar(zb(6)), zetabar),
               sym(1, 5, {{fiber({0}, {}, {}), zb(5)}, {fiber({}, {}, {}), c(1, 5, -1)}})));

    const GeometryCache fs = builtin("fubini-study", 1, 8);
    const Jet phi_bar = fs.potential_derivative(mono({}, {0}));
    const Symbol f = sym(1, 5, {{fiber({0}, {}, {0}), z(5) * zb(5)}, {fiber({}, {}, {0, 0}), c(1, 5, 3)}});
    CHECK(same(compose(fs, Symbol::scalar(phi_bar), f), phi_bar * f));
}

TEST_CASE("composition is associative and represents operator products")
{
    const GeometryCache geom(random_potential(2, 9, 6));
    VerifyOptions options;
    options.samples = 3;
    options.only = {"composition_associative", "composition_faithful", "symbol_commutators", "canonical_relations"};
    const VerificationReport report = verify_algebraic_identities(geom, options);
    CHECK(report.checks.size() == 4);
    for (const auto &check : report.checks) {
        INFO(check.name << ": " << check.witness);
        CHECK(check.passed);
    }
}

TEST_CASE("applying symbols to functions")
{
    const GeometryCache flat = builtin("flat", 1, 8);
    CHECK(apply_symbol_operator(flat, Symbol::monomial(1, 6, fiber({}, {}, {0})), z(6)) == c(1, 5, 1));
    const Jet f = z(6) * zb(6) + c(1, 6, 2);
    const Jet g = zb(6) * zb(6);
    CHECK(apply_symbol_operator(flat, Symbol::scalar(f), g) == f * g);
    const Jet r = apply_symbol_operator(flat, Symbol::monomial(1, 6, fiber({0}, {}, {})), zb(6));
    CHECK(jet_difference(r, c(1, 6, 1), r.order()).empty());
    CHECK_THROWS_AS(apply_symbol_operator(flat, Symbol::monomial(1, 6, fiber({}, {0}, {})), g), std::invalid_argument);

    // Memoized chains give the same result as direct application.
    const GeometryCache fs = builtin("fubini-study", 2, 10);
    Rng rng(9);
    const Jet u = random_test_polynomial(2, 3, 8, rng);
    Symbol s(2, 6);
    s.add_term(fiber({}, {}, {0, 1, 1}), random_test_polynomial(2, 2, 6, rng));
    s.add_term(fiber({1}, {}, {0}), random_test_polynomial(2, 2, 6, rng));
    ContravariantChains chains(fs, u);
    CHECK(apply_symbol_operator(fs, s, u) == apply_symbol_operator(fs, s, chains));
}

TEST_CASE("left multiplication symbols")
{
    const GeometryCache flat = builtin("flat", 1, 10);
    const auto lz = left_mult_symbol(flat, NuSeries<Jet>({zb(8)}), 2);
    CHECK(lz.order() == 2);
    CHECK(same(lz[0], Symbol::scalar(zb(8))));
    CHECK(same(lz[1], Symbol::monomial(1, 7, fiber({}, {}, {0}))));
    CHECK(lz[2].is_zero());

    const auto l2 = left_mult_symbol(flat, NuSeries<Jet>({zb(8) * zb(8)}), 2);
    CHECK(same(l2[1], Symbol::monomial(1, 7, fiber({}, {}, {0}), zb(7).scaled(q(2)))));
    CHECK(same(l2[2], Symbol::monomial(1, 6, fiber({}, {}, {0, 0}))));

    const GeometryCache fs = builtin("fubini-study", 2, 10);
    const auto l1 = left_mult_symbol(fs, NuSeries<Jet>({c(2, 8, 1)}), 3);
    CHECK(same(l1[0], Symbol::scalar(c(2, 8, 1))));
    for (int r = 1; r <= 3; ++r) {
        CHECK(l1[r].is_zero());
    }
}

TEST_CASE("left symbol components satisfy the governing equation")
{
    const GeometryCache geom(random_potential(2, 12, 8));
    Rng rng(3);
    const Jet f = random_test_polynomial(2, 3, 10, rng);
    const auto s = left_mult_symbol(geom, NuSeries<Jet>({f}), 3);
    for (int r = 1; r <= 3; ++r) {
        CHECK(same(euler_apply(s[r]), q_apply(geom, s[r - 1])));
    }
}

TEST_CASE("right multiplication by dPhi/dzbar")
{
    const GeometryCache fs = builtin("fubini-study", 1, 8);
    const auto r = right_mult_phi_symbol(fs, 0);
    CHECK(r.order() == 1);
    CHECK(r[0] == Symbol::scalar(fs.potential_derivative(mono({}, {0}))));
    CHECK(r[1].coeff(fiber({0}, {}, {})).constant_term() == q(1));
    CHECK(r[1].coeff(fiber({}, {}, {0})) == fs.potential_derivative(mono({}, {0, 0})));
}
