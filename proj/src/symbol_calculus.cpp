#include <sepstar/symbol_calculus.hpp>

#include <map>

#include <sepstar/errors.hpp>

namespace sepstar
{

namespace
{

Symbol fiber_partial_multi(Symbol s, FiberKind kind, const std::vector<int> &indices)
{
    for (int i : indices) {
        if (s.is_zero()) {
            break;
        }
        s = s.fiber_partial({kind, i});
    }
    return s;
}

GaussRational inverse_multiplicity(const std::vector<int> &sorted_indices)
{
    return GaussRational::fraction(1, multiplicity_factorial(sorted_indices));
}

// sum_{l,q} c(l, q) etabar^l etabar^q.
template <typename CoeffFn>
Symbol etabar_quadratic(const GeometryCache &geom, int order, CoeffFn coeff)
{
    const int n = geom.dim();
    Symbol s(n, order);
    for (int l = 0; l < n; ++l) {
        for (int q = 0; q < n; ++q) {
            s.add_term(FiberIndex::from_list(FiberKind::eta_bar, {l, q}), coeff(l, q));
        }
    }
    return s;
}

void require_no_zeta(const Symbol &f, const char *what)
{
    if (f.max_degree(FiberKind::zeta_bar) > 0) {
        throw std::invalid_argument(std::string(what) + " is defined on symbols without zetabar");
    }
}

} // namespace

Symbol euler_apply(const Symbol &f)
{
    Symbol out(f.dim(), f.order());
    for (const auto &[m, c] : f.terms()) {
        const int d = m.degree(FiberKind::eta_bar);
        if (d > 0) {
            out.add_term(m, c.scaled(GaussRational(d)));
        }
    }
    return out;
}

Symbol euler_inverse(const Symbol &f)
{
    Symbol out(f.dim(), f.order());
    for (const auto &[m, c] : f.terms()) {
        const int d = m.degree(FiberKind::eta_bar);
        if (d == 0) {
            throw not_in_image();
        }
        out.add_term(m, c.scaled(GaussRational::fraction(1, d)));
    }
    return out;
}

Symbol q_apply(const GeometryCache &geom, const Symbol &f)
{
    require_no_zeta(f, "Q");
    Symbol out = symmetrized_covariant_derivative(geom, f, Orientation::antiholo);
    const int top = f.max_degree(FiberKind::eta_bar);
    for (int r = 2; r <= top; ++r) {
        for (const auto &uppers : multisets(geom.dim(), r)) {
            const Symbol d = fiber_partial_multi(f, FiberKind::eta_bar, uppers);
            if (d.is_zero()) {
                continue;
            }
            const Symbol curvature = etabar_quadratic(geom, geom.metric_order(), [&](int l, int q) {
                return geom.curvature_upper(uppers, l, q);
            });
            out += (curvature * d).scaled(inverse_multiplicity(uppers));
        }
    }
    return out;
}

Symbol q_apply_coordinate(const GeometryCache &geom, const Symbol &f)
{
    require_no_zeta(f, "Q");
    const int n = geom.dim();
    Symbol out(n, f.order() - 1);
    for (int l = 0; l < n; ++l) {
        const Symbol dz = f.map_coefficients([l](const Jet &c) { return c.partial(Variable::zbar(l)); });
        out += dz * Symbol::monomial(n, dz.order(), FiberIndex::unit(FiberVar::eta_bar(l)));
    }
    // Dbar^{l_1}..Dbar^{l_r} Phi_{lbar qbar}, applied directly in tuple order.
    std::map<std::tuple<std::vector<int>, int, int>, Jet> memo;
    auto iterated = [&](const std::vector<int> &uppers, int l, int q) -> const Jet & {
        auto key = std::make_tuple(uppers, l, q);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        Jet v = geom.potential_derivative(MultiIndex::from_lists({}, {l, q}));
        for (auto it = uppers.rbegin(); it != uppers.rend(); ++it) {
            v = geom.contravariant_apply(v, *it, Orientation::antiholo);
        }
        return memo.emplace(key, std::move(v)).first->second;
    };
    const int top = f.max_degree(FiberKind::eta_bar);
    for (int r = 1; r <= top; ++r) {
        for (const auto &uppers : multisets(n, r)) {
            const Symbol d = fiber_partial_multi(f, FiberKind::eta_bar, uppers);
            if (d.is_zero()) {
                continue;
            }
            const Symbol coeff = etabar_quadratic(geom, geom.metric_order(), [&](int l, int q) {
                return iterated(uppers, l, q);
            });
            out -= (coeff * d).scaled(inverse_multiplicity(uppers));
        }
    }
    return out;
}

Symbol dbar_lower_coefficients(const GeometryCache &geom, const Symbol &f, int l)
{
    return f.map_coefficients([&geom, l](const Jet &c) { return geom.dbar_lower_apply(c, l); });
}

Symbol dbar_upper_coefficients(const GeometryCache &geom, const Symbol &f, int l)
{
    return f.map_coefficients([&geom, l](const Jet &c) { return geom.contravariant_apply(c, l, Orientation::antiholo); });
}

Symbol compose(const GeometryCache &geom, const Symbol &f, const Symbol &h)
{
    if (f.dim() != h.dim() || f.dim() != geom.dim()) {
        throw dimension_mismatch("compose: symbols and geometry on different charts");
    }
    const int n = geom.dim();
    Symbol out(n, std::min(f.order(), h.order()));
    const int top_l = f.max_degree(FiberKind::eta_bar);
    const int top_m = h.max_degree(FiberKind::zeta_bar);
    for (int a = 0; a <= top_l; ++a) {
        for (const auto &ls : multisets(n, a)) {
            const Symbol f_l = fiber_partial_multi(f, FiberKind::eta_bar, ls);
            if (f_l.is_zero()) {
                continue;
            }
            Symbol h_l = h;
            for (int l : ls) {
                h_l = dbar_upper_coefficients(geom, h_l, l);
            }
            for (int b = 0; b <= top_m; ++b) {
                for (const auto &ms : multisets(n, b)) {
                    const Symbol h_lm = fiber_partial_multi(h_l, FiberKind::zeta_bar, ms);
                    if (h_lm.is_zero()) {
                        continue;
                    }
                    Symbol f_lm = f_l;
                    for (int m : ms) {
                        f_lm = dbar_lower_coefficients(geom, f_lm, m);
                    }
                    GaussRational w = inverse_multiplicity(ls) * inverse_multiplicity(ms);
                    if (b % 2 == 1) {
                        w = -w;
                    }
                    out += (f_lm * h_lm).scaled(w);
                }
            }
        }
    }
    return out;
}

Symbol commutator(const GeometryCache &geom, const Symbol &f, const Symbol &h)
{
    return compose(geom, f, h) - compose(geom, h, f);
}

ContravariantChains::ContravariantChains(const GeometryCache &geom, Jet g) : geom_(&geom), g_(std::move(g)) {}

const Jet &ContravariantChains::get(const FiberIndex &etabar_part)
{
    if (etabar_part.total_degree() == 0) {
        return g_;
    }
    if (auto it = memo_.find(etabar_part); it != memo_.end()) {
        return it->second;
    }
    const int first = etabar_part.index_list(FiberKind::eta_bar).front();
    FiberIndex rest = etabar_part;
    rest.decrement(FiberVar::eta_bar(first));
    Jet v = geom_->contravariant_apply(get(rest), first, Orientation::antiholo);
    return memo_.emplace(etabar_part, std::move(v)).first->second;
}

Jet apply_symbol_operator(const GeometryCache &geom, const Symbol &f, ContravariantChains &chains)
{
    if (f.max_degree(FiberKind::eta) > 0) {
        throw std::invalid_argument("operators act through zetabar and etabar only; symbol contains eta");
    }
    const Jet &g = chains.function();
    Jet out(g.dim(), std::min(g.order(), f.order()));
    for (const auto &[m, c] : f.terms()) {
        Jet v = c * chains.get(m.only(FiberKind::eta_bar));
        for (int l : m.index_list(FiberKind::zeta_bar)) {
            v = geom.dbar_lower_apply(v, l);
        }
        out += v;
    }
    return out;
}

Jet apply_symbol_operator(const GeometryCache &geom, const Symbol &f, const Jet &g)
{
    ContravariantChains chains(geom, g);
    return apply_symbol_operator(geom, f, chains);
}

NuSeries<Symbol> left_mult_symbol(const GeometryCache &geom, const NuSeries<Jet> &f, int nu_order,
                                  std::optional<int> target_order)
{
    if (nu_order < 0) {
        throw std::invalid_argument("nu order must be non-negative");
    }
    auto keep = [&](const Symbol &s, int r) {
        return target_order ? s.truncated(*target_order + nu_order - r) : s;
    };
    auto f_component = [&](int r) {
        return r < static_cast<int>(f.components.size()) ? Symbol::scalar(f[r]) : Symbol(geom.dim(), geom.phi_order());
    };
    NuSeries<Symbol> out;
    out.components.push_back(keep(f_component(0), 0));
    for (int r = 1; r <= nu_order; ++r) {
        Symbol next = euler_inverse(q_apply(geom, out[r - 1]));
        next += keep(f_component(r), r);
        next = keep(next, r);
        if (next.max_degree(FiberKind::eta_bar) > r) {
            throw std::logic_error("left symbol component exceeds its etabar-degree bound");
        }
        out.components.push_back(std::move(next));
    }
    return out;
}

NuSeries<Symbol> right_mult_phi_symbol(const GeometryCache &geom, int l)
{
    const int n = geom.dim();
    const int order = geom.phi_order();
    NuSeries<Symbol> s;
    s.components.push_back(Symbol::scalar(geom.potential_derivative(MultiIndex::from_lists({}, {l}))));
    Symbol first = Symbol::monomial(n, order, FiberIndex::unit(FiberVar::zeta_bar(l)));
    for (int q = 0; q < n; ++q) {
        first.add_term(FiberIndex::unit(FiberVar::eta_bar(q)), geom.potential_derivative(MultiIndex::from_lists({}, {l, q})));
    }
    s.components.push_back(std::move(first));
    return s;
}

} // namespace sepstar
