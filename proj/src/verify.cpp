#include <sepstar/verify.hpp>

#include <algorithm>
#include <exception>
#include <set>

#include <sepstar/potentials.hpp>

namespace sepstar
{

namespace
{

int draw(Rng &rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

std::string ctx(const std::string &what, std::initializer_list<int> indices)
{
    std::string s = what;
    if (indices.size() > 0) {
        s += " [";
        bool first = true;
        for (int i : indices) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
        s += "]";
    }
    return s;
}

// Collects the outcome of one named identity over many instances; keeps the
// first counterexample.
class Check
{
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void fail(const std::string &witness)
    {
        if (result_.passed) {
            result_.passed = false;
            result_.witness = witness;
        }
    }

    void expect(const Jet &a, const Jet &b, const std::string &where)
    {
        const int order = std::min(a.order(), b.order());
        if (order < 0) {
            fail(where + ": no valid order left to compare");
            return;
        }
        if (auto d = jet_difference(a, b, order); !d.empty()) {
            fail(where + ": " + d);
        }
    }

    void expect(const Symbol &a, const Symbol &b, const std::string &where)
    {
        const int order = std::min(a.order(), b.order());
        if (order < 0) {
            fail(where + ": no valid order left to compare");
            return;
        }
        if (auto d = symbol_difference(a, b, order); !d.empty()) {
            fail(where + ": " + d);
        }
    }

    template <typename Body>
    void run(Body body)
    {
        try {
            body();
        } catch (const std::exception &e) {
            fail(std::string("raised: ") + e.what());
        }
    }

    CheckResult result() const { return result_; }

private:
    CheckResult result_;
};

class Suite
{
public:
    Suite(const GeometryCache &geom, int nu_order, const VerifyOptions &options) : only_(options.only)
    {
        report_.config = {options.potential_label, geom.dim(), geom.phi_order(), nu_order, options.jet_order, options.seed};
    }

    template <typename Body>
    void add(const std::string &name, Body body)
    {
        if (!only_.empty() && !only_.contains(name)) {
            return;
        }
        Check c(name);
        c.run([&] { body(c); });
        report_.checks.push_back(c.result());
    }

    VerificationReport take() { return std::move(report_); }

private:
    std::set<std::string> only_;
    VerificationReport report_;
};

Jet zero(int n, int order) { return Jet(n, order); }

Jet variable(int n, int order, Variable v) { return Jet::variable(n, order, v); }

Jet random_function(const GeometryCache &geom, Rng &rng, int order)
{
    return random_test_polynomial(geom.dim(), 3, order, rng);
}

// A few fiber monomials with zetabar-degree <= max_zeta and etabar-degree
// <= max_etabar, each with a random degree-<=2 coefficient.
Symbol random_symbol(const GeometryCache &geom, Rng &rng, int order, int max_zeta, int max_etabar)
{
    const int n = geom.dim();
    Symbol s(n, order);
    const int count = draw(rng, 1, 3);
    for (int t = 0; t < count; ++t) {
        std::vector<int> zeta, etabar;
        for (int d = draw(rng, 0, max_zeta); d > 0; --d) {
            zeta.push_back(draw(rng, 0, n - 1));
        }
        for (int d = draw(rng, 0, max_etabar); d > 0; --d) {
            etabar.push_back(draw(rng, 0, n - 1));
        }
        const FiberIndex m = FiberIndex::from_list(FiberKind::zeta_bar, zeta) + FiberIndex::from_list(FiberKind::eta_bar, etabar);
        s.add_term(m, random_test_polynomial(n, 2, order, rng));
    }
    return s;
}

Jet phi_bar(const GeometryCache &geom, int q) { return geom.potential_derivative(MultiIndex::from_lists({}, {q})); }

// Dbar_l with the sign of its connection term flipped.
Jet corrupted_dbar_lower(const GeometryCache &geom, const Jet &f, int l)
{
    Jet out = f.partial(Variable::zbar(l));
    for (int q = 0; q < geom.dim(); ++q) {
        out += geom.potential_derivative(MultiIndex::from_lists({}, {l, q})) * geom.contravariant_apply(f, q, Orientation::antiholo);
    }
    return out;
}

bool is_flat(const GeometryCache &geom)
{
    return geom.phi() == builtin_potential("flat", geom.dim(), geom.phi_order());
}

NuSeries<Jet> single(const Jet &f) { return NuSeries<Jet>({f}); }

void expect_series(Check &c, const NuSeries<Jet> &a, const NuSeries<Jet> &b, const std::string &where)
{
    if (a.order() != b.order()) {
        c.fail(where + ": series lengths differ");
        return;
    }
    for (int r = 0; r <= a.order(); ++r) {
        c.expect(a[r], b[r], where + ", nu^" + std::to_string(r));
    }
}

NuSeries<Jet> expected_product(const Jet &product, int nu_order, int order)
{
    NuSeries<Jet> s;
    s.components.push_back(product.truncated(order));
    for (int r = 1; r <= nu_order; ++r) {
        s.components.push_back(zero(product.dim(), order));
    }
    return s;
}

} // namespace

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const CheckResult *VerificationReport::find(const std::string &name) const
{
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

void VerificationReport::append(const VerificationReport &other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string jet_difference(const Jet &a, const Jet &b, int order)
{
    if (a.dim() != b.dim()) {
        return "dimensions differ";
    }
    std::set<MultiIndex> keys;
    for (const auto &[m, c] : a.terms()) {
        keys.insert(m);
    }
    for (const auto &[m, c] : b.terms()) {
        keys.insert(m);
    }
    for (const MultiIndex &m : keys) {
        if (m.degree() > order) {
            break;
        }
        const GaussRational x = a.coeff(m), y = b.coeff(m);
        if (x != y) {
            return "coefficient of " + m.to_string(a.dim()) + " is " + x.to_string() + " vs " + y.to_string();
        }
    }
    return {};
}

std::string symbol_difference(const Symbol &a, const Symbol &b, int order)
{
    if (a.dim() != b.dim()) {
        return "dimensions differ";
    }
    std::set<FiberIndex> keys;
    for (const auto &[m, c] : a.terms()) {
        keys.insert(m);
    }
    for (const auto &[m, c] : b.terms()) {
        keys.insert(m);
    }
    for (const FiberIndex &m : keys) {
        if (auto d = jet_difference(a.coeff(m), b.coeff(m), order); !d.empty()) {
            return "fiber monomial " + m.to_string(a.dim()) + ", " + d;
        }
    }
    return {};
}

Jet holomorphic_part(const Jet &f)
{
    Jet out(f.dim(), f.order());
    for (const auto &[m, c] : f.terms()) {
        if (m.antiholo_degree() == 0) {
            out.add_term(m, c);
        }
    }
    return out;
}

Jet antiholomorphic_part(const Jet &f)
{
    Jet out(f.dim(), f.order());
    for (const auto &[m, c] : f.terms()) {
        if (m.holo_degree() == 0) {
            out.add_term(m, c);
        }
    }
    return out;
}

NuSeries<Jet> wick_product(const Jet &f, const Jet &g, int nu_order)
{
    if (f.dim() != g.dim()) {
        throw std::invalid_argument("wick_product: functions on charts of different dimension");
    }
    const int n = f.dim();
    NuSeries<Jet> out;
    mpz_class factorial = 1;
    for (int r = 0; r <= nu_order; ++r) {
        if (r > 0) {
            factorial *= r;
        }
        const int order = std::min(f.order(), g.order()) - r;
        Jet sum(n, std::max(order, 0));
        if (order >= 0) {
            std::vector<int> tuple(static_cast<std::size_t>(r), 0);
            while (true) {
                Jet df = f, dg = g;
                for (int l : tuple) {
                    df = df.partial(Variable::zbar(l));
                    dg = dg.partial(Variable::z(l));
                }
                sum += df * dg;
                int i = r - 1;
                while (i >= 0 && tuple[i] == n - 1) {
                    tuple[i--] = 0;
                }
                if (i < 0) {
                    break;
                }
                ++tuple[i];
            }
        }
        out.components.push_back(sum.scaled(GaussRational(mpq_class(mpz_class(1), factorial))));
    }
    return out;
}

VerificationReport verify_algebraic_identities(const GeometryCache &geom, const VerifyOptions &options)
{
    Suite suite(geom, 0, options);
    const int n = geom.dim();
    // Random inputs live at a bounded order; every comparison is still exact
    // on all coefficients that survive.
    const int order = std::min(geom.metric_order(), options.jet_order + 4);
    Rng rng(options.seed);
    std::vector<Jet> samples;
    for (int s = 0; s < options.samples; ++s) {
        samples.push_back(random_function(geom, rng, order));
    }
    auto for_samples = [&](auto body) {
        for (int s = 0; s < static_cast<int>(samples.size()); ++s) {
            body(samples[s], "sample " + std::to_string(s + 1) + ": ");
        }
    };

    suite.add("inverse_metric", [&](Check &c) {
        for (int k = 0; k < n; ++k) {
            for (int m = 0; m < n; ++m) {
                Jet sum(n, order);
                for (int l = 0; l < n; ++l) {
                    sum += geom.g_low(k, l) * geom.g_up(l, m);
                }
                c.expect(sum, Jet::constant(n, order, GaussRational(k == m ? 1 : 0)), ctx("g g^-1", {k, m}));
            }
        }
    });

    suite.add("jacobi_identities", [&](Check &c) {
        for (int l = 0; l < n; ++l) {
            for (int q = 0; q < n; ++q) {
                for (int p = 0; p < n; ++p) {
                    Jet lhs(n, order), rhs(n, order);
                    for (int k = 0; k < n; ++k) {
                        lhs += geom.g_up(l, k) * geom.g_up(q, p).partial(Variable::z(k));
                        rhs += geom.g_up(q, k) * geom.g_up(l, p).partial(Variable::z(k));
                    }
                    c.expect(lhs, rhs, ctx("holomorphic", {l, q, p}));
                    Jet lhs_bar(n, order), rhs_bar(n, order);
                    for (int m = 0; m < n; ++m) {
                        lhs_bar += geom.g_up(m, l) * geom.g_up(q, p).partial(Variable::zbar(m));
                        rhs_bar += geom.g_up(m, p) * geom.g_up(q, l).partial(Variable::zbar(m));
                    }
                    c.expect(lhs_bar, rhs_bar, ctx("antiholomorphic", {l, q, p}));
                }
            }
        }
    });

    suite.add("inverse_metric_derivatives", [&](Check &c) {
        for (int l = 0; l < n; ++l) {
            for (int k = 0; k < n; ++k) {
                for (int p = 0; p < n; ++p) {
                    Jet by_z(n, order), by_zbar(n, order);
                    for (int s = 0; s < n; ++s) {
                        for (int t = 0; t < n; ++t) {
                            const Jet outer = geom.g_up(l, s) * geom.g_up(t, k);
                            by_z -= outer * geom.potential_derivative(MultiIndex::from_lists({s, p}, {t}));
                            by_zbar -= outer * geom.potential_derivative(MultiIndex::from_lists({s}, {t, p}));
                        }
                    }
                    c.expect(geom.g_up(l, k).partial(Variable::z(p)), by_z, ctx("d/dz", {l, k, p}));
                    c.expect(geom.g_up(l, k).partial(Variable::zbar(p)), by_zbar, ctx("d/dzbar", {l, k, p}));
                }
            }
        }
    });

    suite.add("curvature_symmetries", [&](Check &c) {
        for (int k = 0; k < n; ++k) {
            for (int p = 0; p < n; ++p) {
                for (int l = 0; l < n; ++l) {
                    for (int q = 0; q < n; ++q) {
                        c.expect(geom.curvature_low(k, p, l, q), geom.curvature_low(p, k, l, q), ctx("k<->p", {k, p, l, q}));
                        c.expect(geom.curvature_low(k, p, l, q), geom.curvature_low(k, p, q, l), ctx("l<->q", {k, p, l, q}));
                    }
                }
            }
        }
    });

    suite.add("contravariant_commute", [&](Check &c) {
        for_samples([&](const Jet &u, const std::string &tag) {
            for (auto o : {Orientation::antiholo, Orientation::holo}) {
                const char *name = o == Orientation::antiholo ? "Dbar" : "D";
                for (int a = 0; a < n; ++a) {
                    for (int b = a + 1; b < n; ++b) {
                        c.expect(contravariant_chain(geom, u, {a, b}, o), contravariant_chain(geom, u, {b, a}, o),
                                 tag + ctx(name, {a, b}));
                    }
                }
            }
        });
    });

    suite.add("contravariant_symmetric_tensors", [&](Check &c) {
        for_samples([&](const Jet &u, const std::string &tag) {
            for (auto o : {Orientation::antiholo, Orientation::holo}) {
                const char *name = o == Orientation::antiholo ? "Dbar" : "D";
                std::vector<int> idx{draw(rng, 0, n - 1), draw(rng, 0, n - 1), draw(rng, 0, n - 1)};
                std::sort(idx.begin(), idx.end());
                const Jet reference = contravariant_chain(geom, u, idx, o);
                while (std::next_permutation(idx.begin(), idx.end())) {
                    c.expect(contravariant_chain(geom, u, idx, o), reference, tag + ctx(name, {idx[0], idx[1], idx[2]}));
                }
            }
        });
    });

    suite.add("canonical_relations", [&](Check &c) {
        auto lower = [&](const Jet &f, int l) {
            return options.corrupt_connection_sign ? corrupted_dbar_lower(geom, f, l) : geom.dbar_lower_apply(f, l);
        };
        auto upper = [&](const Jet &f, int l) { return geom.contravariant_apply(f, l, Orientation::antiholo); };
        for_samples([&](const Jet &u, const std::string &tag) {
            for (int l = 0; l < n; ++l) {
                for (int q = 0; q < n; ++q) {
                    const Jet pq = phi_bar(geom, q);
                    const Jet zq = variable(n, order, Variable::zbar(q));
                    const Jet delta_u = l == q ? u : zero(n, order);
                    c.expect(lower(pq * u, l) - pq * lower(u, l), zero(n, order), tag + ctx("[Dbar_l, Phi_qbar]", {l, q}));
                    c.expect(lower(upper(u, q), l) - upper(lower(u, l), q), zero(n, order), tag + ctx("[Dbar_l, Dbar^q]", {l, q}));
                    c.expect(lower(zq * u, l) - zq * lower(u, l), delta_u, tag + ctx("[Dbar_l, zbar^q]", {l, q}));
                    c.expect(upper(pq * u, l) - pq * upper(u, l), delta_u, tag + ctx("[Dbar^l, Phi_qbar]", {l, q}));
                }
            }
        });
    });

    std::vector<Symbol> symbols;
    for (int s = 0; s < options.samples; ++s) {
        symbols.push_back(random_symbol(geom, rng, order, 1, 2));
    }

    suite.add("symbol_commutators", [&](Check &c) {
        for (int s = 0; s < static_cast<int>(symbols.size()); ++s) {
            const Symbol &f = symbols[s];
            const std::string tag = "symbol " + std::to_string(s + 1) + ": ";
            for (int l = 0; l < n; ++l) {
                const Symbol phi_l = Symbol::scalar(phi_bar(geom, l));
                const Symbol etabar = Symbol::monomial(n, order, FiberIndex::unit(FiberVar::eta_bar(l)));
                const Symbol zetabar = Symbol::monomial(n, order, FiberIndex::unit(FiberVar::zeta_bar(l)));
                c.expect(commutator(geom, f, phi_l), f.fiber_partial(FiberVar::eta_bar(l)), tag + ctx("[F, Phi_lbar]", {l}));
                c.expect(commutator(geom, etabar, f), dbar_upper_coefficients(geom, f, l), tag + ctx("[etabar^l, F]", {l}));
                c.expect(commutator(geom, zetabar, f), dbar_lower_coefficients(geom, f, l), tag + ctx("[zetabar_l, F]", {l}));
            }
        }
    });

    suite.add("composition_associative", [&](Check &c) {
        for (int s = 0; s < static_cast<int>(symbols.size()); ++s) {
            const Symbol &f = symbols[s];
            const Symbol &g = symbols[(s + 1) % symbols.size()];
            const Symbol h = random_symbol(geom, rng, order, 1, 1);
            c.expect(compose(geom, compose(geom, f, g), h), compose(geom, f, compose(geom, g, h)),
                     "triple " + std::to_string(s + 1));
        }
    });

    suite.add("composition_faithful", [&](Check &c) {
        for (int s = 0; s < static_cast<int>(symbols.size()); ++s) {
            const Symbol &f = symbols[s];
            const Symbol &g = symbols[(s + 1) % symbols.size()];
            const Jet &u = samples[s % samples.size()];
            c.expect(apply_symbol_operator(geom, compose(geom, f, g), u),
                     apply_symbol_operator(geom, f, apply_symbol_operator(geom, g, u)), "pair " + std::to_string(s + 1));
        }
    });

    suite.add("q_forms_agree", [&](Check &c) {
        for (int s = 0; s < static_cast<int>(symbols.size()); ++s) {
            const Symbol f = symbols[s].without(FiberKind::zeta_bar) + random_symbol(geom, rng, order, 0, 3);
            c.expect(q_apply(geom, f), q_apply_coordinate(geom, f), "symbol " + std::to_string(s + 1));
        }
    });

    return suite.take();
}

VerificationReport verify_star_laws(const GeometryCache &geom, int nu_order, const VerifyOptions &options)
{
    Suite suite(geom, nu_order, options);
    const int n = geom.dim();
    const int m = options.jet_order;
    const int inner = m + nu_order;
    const int order = geom.metric_order();
    const int N = nu_order;
    Rng rng(options.seed);
    auto draw_function = [&] { return random_function(geom, rng, order); };

    suite.add("associativity", [&](Check &c) {
        for (int s = 0; s < options.samples; ++s) {
            const Jet f = draw_function(), g = draw_function(), h = draw_function();
            const auto fg = star(geom, f, g, N, inner).series;
            const auto gh = star(geom, g, h, N, inner).series;
            expect_series(c, star(geom, fg, single(h), N, m).series, star(geom, single(f), gh, N, m).series,
                          "triple " + std::to_string(s + 1));
        }
    });

    suite.add("unit", [&](Check &c) {
        const Jet one = Jet::constant(n, order, GaussRational(1));
        for (int s = 0; s < options.samples; ++s) {
            const Jet f = draw_function();
            const auto expected = expected_product(f, N, m);
            expect_series(c, star(geom, f, one, N, m).series, expected, "f*1, sample " + std::to_string(s + 1));
            expect_series(c, star(geom, one, f, N, m).series, expected, "1*f, sample " + std::to_string(s + 1));
        }
    });

    suite.add("separation_of_variables", [&](Check &c) {
        for (int s = 0; s < options.samples; ++s) {
            const Jet a = holomorphic_part(draw_function()) + variable(n, order, Variable::z(s % n));
            const Jet b = antiholomorphic_part(draw_function()) + variable(n, order, Variable::zbar(s % n));
            const Jet u = draw_function();
            expect_series(c, star(geom, a, u, N, m).series, expected_product(a * u, N, m),
                          "holomorphic left factor, sample " + std::to_string(s + 1));
            expect_series(c, star(geom, u, b, N, m).series, expected_product(u * b, N, m),
                          "antiholomorphic right factor, sample " + std::to_string(s + 1));
        }
    });

    suite.add("left_multiplication_by_dphi", [&](Check &c) {
        for (int s = 0; s < options.samples; ++s) {
            const Jet u = draw_function();
            for (int k = 0; k < n; ++k) {
                const Jet dphi = geom.potential_derivative(MultiIndex::from_lists({k}, {}));
                NuSeries<Jet> expected = expected_product(dphi * u, N, m);
                if (N >= 1) {
                    expected[1] = u.partial(Variable::z(k)).truncated(m);
                }
                expect_series(c, star(geom, dphi, u, N, m).series, expected, ctx("sample " + std::to_string(s + 1) + ", k", {k}));
            }
        }
    });

    if (N >= 1) {
        suite.add("poisson_bracket", [&](Check &c) {
            for (int s = 0; s < options.samples; ++s) {
                const Jet f = draw_function(), g = draw_function();
                const Jet c1 = star(geom, f, g, 1, m).series[1] - star(geom, g, f, 1, m).series[1];
                Jet bracket(n, order);
                for (int l = 0; l < n; ++l) {
                    for (int k = 0; k < n; ++k) {
                        bracket += geom.g_up(l, k)
                                   * (f.partial(Variable::zbar(l)) * g.partial(Variable::z(k))
                                      - g.partial(Variable::zbar(l)) * f.partial(Variable::z(k)));
                    }
                }
                c.expect(c1, bracket.truncated(m), "pair " + std::to_string(s + 1));
            }
        });
    }

    std::vector<NuSeries<Symbol>> left_symbols;
    suite.add("governing_equation", [&](Check &c) {
        for (int s = 0; s < options.samples; ++s) {
            const NuSeries<Symbol> big_f = left_mult_symbol(geom, single(draw_function()), N, m);
            for (int r = 1; r <= N; ++r) {
                c.expect(euler_apply(big_f[r]), q_apply(geom, big_f[r - 1]),
                         "sample " + std::to_string(s + 1) + ", nu^" + std::to_string(r));
            }
            c.expect(big_f[0], Symbol::scalar(big_f[0].coeff(FiberIndex{})), "sample " + std::to_string(s + 1) + ", F_0");
            left_symbols.push_back(big_f);
        }
    });

    suite.add("commutes_with_right_multiplication", [&](Check &c) {
        for (int s = 0; s < static_cast<int>(left_symbols.size()); ++s) {
            const NuSeries<Symbol> &big_f = left_symbols[s];
            for (int l = 0; l < n; ++l) {
                const NuSeries<Symbol> right = right_mult_phi_symbol(geom, l);
                for (int r = 0; r <= N; ++r) {
                    Symbol sum(n, big_f[r].order());
                    for (int b = 0; b <= std::min(r, right.order()); ++b) {
                        sum += commutator(geom, big_f[r - b], right[b]);
                    }
                    c.expect(sum, Symbol(n, sum.order()), ctx("sample " + std::to_string(s + 1) + ", nu^" + std::to_string(r) + ", l", {l}));
                }
            }
        }
    });

    if (is_flat(geom)) {
        suite.add("wick_formula", [&](Check &c) {
            for (int s = 0; s < options.samples; ++s) {
                const Jet f = draw_function(), g = draw_function();
                NuSeries<Jet> wick = wick_product(f, g, N);
                for (auto &w : wick.components) {
                    w = w.truncated(m);
                }
                expect_series(c, star(geom, f, g, N, m).series, wick, "pair " + std::to_string(s + 1));
            }
        });
    }

    return suite.take();
}

VerificationReport verify_cross_checks(const GeometryCache &geom, int nu_order, const VerifyOptions &options)
{
    Suite suite(geom, nu_order, options);
    const int n = geom.dim();
    const int m = options.jet_order;
    const int N = nu_order;
    const int closed = std::min(N, 4);
    Rng rng(options.seed);

    std::optional<TensorT> t;
    std::optional<TensorT> reference;
    suite.add("closed_form_T", [&](Check &c) {
        t = tensor_T(geom, N, m);
        reference = closed_form_T_reference(geom, m);
        for (int r = 0; r <= closed; ++r) {
            c.expect(t->series[r], reference->series[r], "nu^" + std::to_string(r));
        }
    });

    suite.add("T_fiber_structure", [&](Check &c) {
        if (!t) {
            c.fail("T unavailable");
            return;
        }
        for (int r = 1; r <= N; ++r) {
            for (const auto &[f, coeff] : t->series[r].terms()) {
                const int a = f.degree(FiberKind::eta), b = f.degree(FiberKind::eta_bar);
                if (a == 0 || b == 0 || a > r || b > r) {
                    c.fail("nu^" + std::to_string(r) + " has term " + f.to_string(n));
                }
            }
        }
    });

    suite.add("rho22_paths_agree", [&](Check &c) {
        c.expect(rho_symbol(geom, 2, 2, m), rho_symbol_s_path(geom, 2, 2, m), "rho_{2,2}");
    });

    suite.add("rho23_covariant_derivative", [&](Check &c) {
        const Symbol rho22 = rho_symbol(geom, 2, 2, m + 1);
        c.expect(symmetrized_covariant_derivative(geom, rho22, Orientation::antiholo), rho_symbol(geom, 2, 3, m), "rho_{2,3}");
    });

    suite.add("rho32_covariant_derivative", [&](Check &c) {
        const Symbol rho22 = rho_symbol_s_path(geom, 2, 2, m + 1);
        c.expect(symmetrized_covariant_derivative(geom, rho22, Orientation::holo), rho_symbol(geom, 3, 2, m), "rho_{3,2}");
    });

    std::vector<std::pair<Jet, Jet>> pairs;
    for (int s = 0; s < options.samples; ++s) {
        Jet u = random_function(geom, rng, geom.metric_order());
        Jet v = random_function(geom, rng, geom.metric_order());
        pairs.emplace_back(std::move(u), std::move(v));
    }
    std::vector<NuSeries<Jet>> products;
    suite.add("star_via_T", [&](Check &c) {
        if (!t) {
            c.fail("T unavailable");
            return;
        }
        for (int s = 0; s < static_cast<int>(pairs.size()); ++s) {
            const auto &[u, v] = pairs[s];
            products.push_back(star(geom, u, v, N, m).series);
            expect_series(c, star_via_T(geom, *t, u, v, N, m).series, products.back(), "pair " + std::to_string(s + 1));
        }
    });

    if (options.expand_potential) {
        suite.add("phi_order_stability", [&](Check &c) {
            if (!t || !reference || products.size() != pairs.size()) {
                c.fail("baseline results unavailable");
                return;
            }
            const GeometryCache raised(options.expand_potential(geom.phi_order() + 1));
            const TensorT t2 = tensor_T(raised, N, m);
            const TensorT reference2 = closed_form_T_reference(raised, m);
            for (int r = 0; r <= N; ++r) {
                c.expect(t2.series[r], t->series[r], "T, nu^" + std::to_string(r));
            }
            for (int r = 0; r <= closed; ++r) {
                c.expect(reference2.series[r], reference->series[r], "closed form, nu^" + std::to_string(r));
            }
            for (int s = 0; s < static_cast<int>(pairs.size()); ++s) {
                const auto &[u, v] = pairs[s];
                expect_series(c, star(raised, u, v, N, m).series, products[s], "star, pair " + std::to_string(s + 1));
            }
        });
    }

    return suite.take();
}

VerificationReport verify_all(const GeometryCache &geom, int nu_order, const VerifyOptions &options)
{
    VerificationReport report = verify_algebraic_identities(geom, options);
    report.config.nu_order = nu_order;
    report.append(verify_star_laws(geom, nu_order, options));
    report.append(verify_cross_checks(geom, nu_order, options));
    return report;
}

} // namespace sepstar
