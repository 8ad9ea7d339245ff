#include <sepstar/star_product.hpp>

#include <sepstar/errors.hpp>

namespace sepstar
{

namespace
{

void require_order(int have, int want, const char *what)
{
    if (have < want) {
        throw order_exhausted(std::string(what) + " is only valid to order " + std::to_string(have)
                              + ", requested " + std::to_string(want));
    }
}

Jet finish(const Jet &j, std::optional<int> target, const char *what)
{
    if (!target) {
        return j;
    }
    require_order(j.order(), *target, what);
    return j.truncated(*target);
}

Symbol finish(const Symbol &s, std::optional<int> target, const char *what)
{
    if (!target) {
        return s;
    }
    require_order(s.order(), *target, what);
    return s.truncated(*target);
}

} // namespace

Jet contravariant_chain(const GeometryCache &geom, const Jet &f, const std::vector<int> &indices, Orientation orientation)
{
    Jet v = f;
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
        v = geom.contravariant_apply(v, *it, orientation);
    }
    return v;
}

StarResult star(const GeometryCache &geom, const NuSeries<Jet> &f, const NuSeries<Jet> &g, int nu_order,
                std::optional<int> target_order)
{
    if (f.components.empty() || g.components.empty()) {
        throw std::invalid_argument("star of an empty series");
    }
    if (f[0].dim() != geom.dim() || g[0].dim() != geom.dim()) {
        throw dimension_mismatch("star: functions and potential on charts of different dimension");
    }
    const NuSeries<Symbol> left = left_mult_symbol(geom, f, nu_order, target_order);
    StarResult result;
    result.meta.phi_order = geom.phi_order();
    result.meta.nu_order = nu_order;
    result.meta.jet_order = target_order.value_or(-1);
    // Dbar-chains of each g_j are shared by all components; with a target
    // order, g_j is cut to what the longest chain consumes.
    std::vector<ContravariantChains> chains;
    for (const Jet &gj : g.components) {
        chains.emplace_back(geom, target_order ? gj.truncated(*target_order + nu_order) : gj);
    }
    for (int r = 0; r <= nu_order; ++r) {
        Jet sum(geom.dim(), geom.phi_order());
        for (int j = 0; j <= r && j <= g.order(); ++j) {
            const Symbol &f_part = left[r - j];
            sum += apply_symbol_operator(geom, target_order ? f_part.truncated(*target_order) : f_part, chains[j]);
        }
        result.series.components.push_back(finish(sum, target_order, "star product component"));
    }
    return result;
}

StarResult star(const GeometryCache &geom, const Jet &f, const Jet &g, int nu_order, std::optional<int> target_order)
{
    return star(geom, NuSeries<Jet>({f}), NuSeries<Jet>({g}), nu_order, target_order);
}

TensorT tensor_T(const GeometryCache &geom, int nu_order, std::optional<int> target_order)
{
    if (nu_order < 0) {
        throw std::invalid_argument("nu order must be non-negative");
    }
    const int n = geom.dim();
    auto keep = [&](const Symbol &s, int r) {
        return target_order ? s.truncated(*target_order + nu_order - r) : s;
    };
    const Symbol gamma = gamma_symbol(geom);
    std::vector<Symbol> raw;
    raw.push_back(keep(Symbol::scalar(Jet::constant(n, geom.metric_order(), GaussRational(1))), 0));
    for (int r = 1; r <= nu_order; ++r) {
        const Symbol &prev = raw.back();
        Symbol next = keep(euler_inverse(q_apply(geom, prev) + gamma * prev), r);
        if (next.max_degree(FiberKind::eta) > r || next.max_degree(FiberKind::eta_bar) > r) {
            throw std::logic_error("T component exceeds its fiber-degree bound");
        }
        raw.push_back(std::move(next));
    }
    TensorT t;
    for (const Symbol &s : raw) {
        t.series.components.push_back(finish(s, target_order, "T component"));
    }
    return t;
}

StarResult star_via_T(const GeometryCache &geom, const TensorT &t, const Jet &u, const Jet &v, int nu_order,
                      std::optional<int> target_order)
{
    if (t.series.order() < nu_order) {
        throw order_exhausted("T is not known to the requested nu order");
    }
    const int n = geom.dim();
    StarResult result;
    result.meta.phi_order = geom.phi_order();
    result.meta.nu_order = nu_order;
    result.meta.jet_order = target_order.value_or(-1);
    for (int r = 0; r <= nu_order; ++r) {
        const Symbol &component = t.series[r];
        Jet sum(n, std::min({u.order(), v.order(), component.order()}));
        for (const auto &[m, c] : component.terms()) {
            const auto holo = m.index_list(FiberKind::eta);
            const auto anti = m.index_list(FiberKind::eta_bar);
            Jet du = target_order ? u.truncated(*target_order + static_cast<int>(holo.size())) : u;
            Jet dv = target_order ? v.truncated(*target_order + static_cast<int>(anti.size())) : v;
            du = contravariant_chain(geom, du, holo, Orientation::holo);
            dv = contravariant_chain(geom, dv, anti, Orientation::antiholo);
            sum += c * du * dv;
        }
        result.series.components.push_back(finish(sum, target_order, "T contraction component"));
    }
    return result;
}

TensorT closed_form_T_reference(const GeometryCache &geom, std::optional<int> target_order)
{
    const int n = geom.dim();
    const Symbol one = Symbol::scalar(Jet::constant(n, geom.metric_order(), GaussRational(1)));
    const Symbol gamma = target_order ? gamma_symbol(geom).truncated(*target_order) : gamma_symbol(geom);
    const Symbol gamma2 = gamma * gamma;
    const Symbol gamma3 = gamma2 * gamma;
    const Symbol rho22 = rho_symbol(geom, 2, 2, target_order);
    auto q = [](long a, long b) { return GaussRational::fraction(a, b); };

    TensorT t;
    auto push = [&](const Symbol &s) { t.series.components.push_back(finish(s, target_order, "closed-form T")); };
    push(one);
    push(gamma);
    push(gamma2.scaled(q(1, 2)));
    push(gamma3.scaled(q(1, 6)) + rho22.scaled(q(1, 4)));
    push((gamma3 * gamma).scaled(q(1, 24)) + (gamma * rho22).scaled(q(1, 4))
         + rho_symbol(geom, 2, 3, target_order).scaled(q(1, 12)) + rho_symbol(geom, 3, 2, target_order).scaled(q(1, 12))
         + rho_tilde_symbol(geom, target_order).scaled(q(1, 8)));
    return t;
}

} // namespace sepstar
