#include <doctest.h>

#include <thread>

#include <sepstar/errors.hpp>
#include <sepstar/geometry.hpp>
#include <sepstar/potentials.hpp>
#include <sepstar/verify.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace sepstar;
using namespace helpers;

namespace
{

GeometryCache builtin(const char *name, int n, int order) { return GeometryCache(builtin_potential(name, n, order)); }

// sum_k (-1)^k x^k truncated at total degree `order`, x = z zbar on the line.
Jet geometric(int order, int sign)
{
    Jet j(1, order);
    for (int k = 0; 2 * k <= order; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k), 0);
        j.add_term(mono(idx, idx), q(sign > 0 || k % 2 == 0 ? 1 : -1));
    }
    return j;
}

} // namespace

TEST_CASE("potential derivatives")
{
    CHECK(builtin("flat", 1, 6).potential_derivative(mono({0}, {0})) == c(1, 4, 1));
    CHECK(builtin("fubini-study", 1, 8).potential_derivative(mono({0, 0}, {0, 0})).constant_term() == q(-2));
    const GeometryCache flat = builtin("flat", 2, 6);
    CHECK(flat.potential_derivative(mono({0, 1}, {})).is_zero());
    CHECK(flat.potential_derivative(mono({}, {1, 1})).is_zero());
    CHECK(flat.potential_derivative(mono({0}, {0, 1})).is_zero());
    CHECK_THROWS_AS(builtin("flat", 1, 4).potential_derivative(mono({0, 0, 0}, {0, 0})), order_exhausted);
}

TEST_CASE("inverse metric")
{
    const GeometryCache flat = builtin("flat", 2, 6);
    for (int l = 0; l < 2; ++l) {
        for (int k = 0; k < 2; ++k) {
            CHECK(flat.g_up(l, k) == c(2, 4, l == k ? 1 : 0));
        }
    }
    const GeometryCache fs = builtin("fubini-study", 1, 6);
    CHECK(fs.g_up(0, 0) == poly(1, 4, {{{}, {}, q(1)}, {{0}, {0}, q(2)}, {{0, 0}, {0, 0}, q(1)}}));
    CHECK(fs.g_up(0, 0) * fs.g_low(0, 0) == c(1, 4, 1));
    const GeometryCache hyp = builtin("hyperbolic", 1, 4);
    CHECK(hyp.g_up(0, 0) == poly(1, 2, {{{}, {}, q(1)}, {{0}, {0}, q(-2)}}));
    CHECK(hyp.g_up(0, 0) * hyp.g_low(0, 0) == c(1, 2, 1));
}

TEST_CASE("inverse metric of an indefinite, non-diagonal metric")
{
    // g = [[1, 1], [1, -1]] at the origin plus curvature terms.
    const Jet phi = poly(2, 6,
                         {{{0}, {0}, q(1)},
                          {{0}, {1}, q(1)},
                          {{1}, {0}, q(1)},
                          {{1}, {1}, q(-1)},
                          {{0, 0}, {0, 1}, q(1, 3)},
                          {{0, 1}, {1, 1}, q(-1, 2)}});
    const GeometryCache geom(phi);
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            Jet sum(2, 4);
            for (int l = 0; l < 2; ++l) {
                sum += geom.g_low(k, l) * geom.g_up(l, m);
            }
            CHECK(sum == c(2, 4, k == m ? 1 : 0));
        }
    }
}

TEST_CASE("degenerate metric")
{
    const Jet phi = poly(2, 4, {{{0}, {0}, q(1)}, {{0, 1}, {1}, q(1)}});
    try {
        const GeometryCache geom(phi);
        FAIL("expected degenerate_metric");
    } catch (const degenerate_metric &e) {
        CHECK(std::string(e.what()) == "degenerate metric at base point");
    }
}

TEST_CASE("contravariant derivatives")
{
    const GeometryCache flat = builtin("flat", 1, 6);
    const Jet z2 = poly(1, 4, {{{0, 0}, {}, q(1)}});
    const Jet zb2 = poly(1, 4, {{{}, {0, 0}, q(1)}});
    CHECK(flat.contravariant_apply(z2, 0, Orientation::antiholo) == poly(1, 3, {{{0}, {}, q(2)}}));
    CHECK(flat.contravariant_apply(zb2, 0, Orientation::holo) == poly(1, 3, {{{}, {0}, q(2)}}));
    const GeometryCache fs = builtin("fubini-study", 1, 6);
    CHECK(fs.contravariant_apply(Jet::variable(1, 4, Variable::zbar(0)), 0, Orientation::antiholo).is_zero());
    // Dbar^1 z = g^{1bar 1} on the line.
    CHECK(fs.contravariant_apply(Jet::variable(1, 4, Variable::z(0)), 0, Orientation::antiholo) == fs.g_up(0, 0).truncated(3));
}

TEST_CASE("Christoffel symbols")
{
    const GeometryCache flat = builtin("flat", 2, 6);
    for (int t = 0; t < 2; ++t) {
        for (int l = 0; l < 2; ++l) {
            for (int p = 0; p < 2; ++p) {
                CHECK(flat.christoffel_bar(t, l, p).is_zero());
                CHECK(flat.christoffel(t, l, p).is_zero());
            }
        }
    }
    // Gammabar = -2 z / (1 + z zbar), Gamma its conjugate.
    const GeometryCache fs = builtin("fubini-study", 1, 8);
    const Jet gamma_bar = fs.christoffel_bar(0, 0, 0);
    CHECK(gamma_bar == Jet::variable(1, 5, Variable::z(0)).scaled(q(-2)) * geometric(5, -1));
    CHECK(gamma_bar.coeff(mono({0, 0}, {0})) == q(2));
    CHECK(fs.christoffel(0, 0, 0) == Jet::variable(1, 5, Variable::zbar(0)).scaled(q(-2)) * geometric(5, -1));
    CHECK(builtin("hyperbolic", 1, 6).christoffel_bar(0, 0, 0).constant_term().is_zero());
}

TEST_CASE("curvature against the fourth-derivative oracle")
{
    CHECK(builtin("flat", 2, 6).curvature_low(0, 1, 1, 0).is_zero());
    const GaussRational fs_oracle = -oracle::fourth_derivative_at_origin(oracle::log_potential(1, 8, false));
    const GaussRational hyp_oracle = -oracle::fourth_derivative_at_origin(oracle::log_potential(1, 8, true));
    CHECK(fs_oracle == q(2));
    CHECK(hyp_oracle == q(-2));
    CHECK(builtin("fubini-study", 1, 8).curvature_low(0, 0, 0, 0).constant_term() == fs_oracle);
    CHECK(builtin("hyperbolic", 1, 8).curvature_low(0, 0, 0, 0).constant_term() == hyp_oracle);
}

TEST_CASE("curvature with raised indices")
{
    const GeometryCache flat = builtin("flat", 2, 8);
    CHECK(flat.curvature_upper({0, 1}, 1, 1).is_zero());
    CHECK(flat.curvature_upper({0, 1, 1}, 0, 1).is_zero());
    const GeometryCache fs = builtin("fubini-study", 1, 10);
    CHECK(fs.curvature_upper({0, 0}, 0, 0).constant_term() == q(2));
    CHECK(fs.curvature_upper({0, 0, 0}, 0, 0).constant_term().is_zero());
    CHECK(fs.curvature_upper_holo({0, 0}, 0, 0).constant_term() == q(2));
    CHECK_THROWS_AS(fs.curvature_upper({0}, 0, 0), std::invalid_argument);
}

TEST_CASE("canonical tensors agree on the symmetric overlap")
{
    const GeometryCache geom(random_potential(2, 9, 4));
    for (int k = 0; k < 2; ++k) {
        for (int p = 0; p < 2; ++p) {
            for (int l = 0; l < 2; ++l) {
                for (int q2 = 0; q2 < 2; ++q2) {
                    const Jet r = geom.canonical_tensor_r({k, p}, l, q2);
                    CHECK(jet_difference(r, geom.canonical_tensor_s(k, p, {l, q2}), r.order()).empty());
                    CHECK(jet_difference(r, geom.curvature_low(k, p, l, q2), r.order()).empty());
                }
            }
        }
    }
}

TEST_CASE("rho symbols at the origin")
{
    const GeometryCache flat = builtin("flat", 2, 10);
    CHECK(rho_symbol(flat, 2, 2).is_zero());
    CHECK(rho_tilde_symbol(flat).is_zero());
    const GeometryCache fs = builtin("fubini-study", 1, 10);
    const Symbol rho22 = rho_symbol(fs, 2, 2).at_origin();
    CHECK(rho22.terms().size() == 1);
    CHECK(rho22.coeff(fiber({}, {0, 0}, {0, 0})) == c(1, rho22.order(), 2));
    const Symbol tilde = rho_tilde_symbol(fs).at_origin();
    CHECK(tilde.terms().size() == 1);
    CHECK(tilde.coeff(fiber({}, {0, 0}, {0, 0})).constant_term() == q(4));
    const Symbol gamma = gamma_symbol(fs);
    CHECK(gamma.coeff(fiber({}, {0}, {0})) == fs.g_low(0, 0));
}

TEST_CASE("symmetrized covariant derivative")
{
    const GeometryCache flat = builtin("flat", 1, 6);
    CHECK(symmetrized_covariant_derivative(flat, Symbol::scalar(c(1, 4, 3)), Orientation::antiholo).is_zero());
    const GeometryCache fs = builtin("fubini-study", 1, 8);
    const Jet f = poly(1, 6, {{{0}, {0, 0}, q(1)}, {{}, {0}, q(5)}});
    const Symbol expected = Symbol::monomial(1, 5, fiber({}, {}, {0}), f.partial(Variable::zbar(0)));
    CHECK(symmetrized_covariant_derivative(fs, Symbol::scalar(f), Orientation::antiholo) == expected);

    const GeometryCache fs10 = builtin("fubini-study", 1, 12);
    const Symbol d = symmetrized_covariant_derivative(fs10, rho_symbol(fs10, 2, 2), Orientation::antiholo);
    const Symbol rho23 = rho_symbol(fs10, 2, 3);
    CHECK(symbol_difference(d, rho23, std::min(d.order(), rho23.order())).empty());
    CHECK(symbol_difference(d.at_origin(), rho23.at_origin(), 0).empty());
}

TEST_CASE("metric identities on a random potential")
{
    const GeometryCache geom(random_potential(2, 8, 3));
    VerifyOptions options;
    options.samples = 2;
    options.only = {"inverse_metric", "jacobi_identities", "inverse_metric_derivatives", "curvature_symmetries",
                    "contravariant_commute", "contravariant_symmetric_tensors"};
    const VerificationReport report = verify_algebraic_identities(geom, options);
    CHECK(report.checks.size() == options.only.size());
    for (const auto &check : report.checks) {
        INFO(check.name << ": " << check.witness);
        CHECK(check.passed);
    }
}

TEST_CASE("one cache shared by concurrent readers")
{
    const GeometryCache geom(random_potential(2, 8, 5));
    std::vector<Jet> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] { results[t] = geom.curvature_upper({0, 1, t % 2}, 1, 0); });
    }
    for (auto &th : threads) {
        th.join();
    }
    CHECK(results[0] == results[2]);
    CHECK(results[1] == results[3]);
}
