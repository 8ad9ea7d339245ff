#ifndef SEPSTAR_STAR_PRODUCT_HPP
#define SEPSTAR_STAR_PRODUCT_HPP

#include <optional>
#include <string>

#include <sepstar/symbol_calculus.hpp>

namespace sepstar
{

struct StarMeta {
    std::string potential;
    int phi_order = 0;
    int nu_order = 0;
    // Order to which every reported coefficient is exact; -1 when the
    // components keep their individual validity.
    int jet_order = -1;
};

// f * g = sum_r nu^r C_r(f, g), evaluated around the chart origin.
struct StarResult {
    NuSeries<Jet> series;
    StarMeta meta;
};

// T = sum T_{k_1..k_r lbar_1..lbar_s} eta^{k_1}..eta^{k_r} etabar^{l_1}..etabar^{l_s},
// the total symbol of the bidifferential series.
struct TensorT {
    NuSeries<Symbol> series;
};

// Phi order that keeps nu^N results exact to jet order M; generous on purpose,
// every computation still checks the validity it actually reaches.
inline int conservative_phi_order(int jet_order, int nu_order) { return jet_order + 2 * nu_order + 4; }

// Standard star product with separation of variables: component r is the
// operator with symbol F_r applied to g, where F is the left symbol of f.
// With a target order every component is reported exactly to that order
// (order_exhausted otherwise).
StarResult star(const GeometryCache &geom, const Jet &f, const Jet &g, int nu_order,
                std::optional<int> target_order = std::nullopt);
// nu-linear extension to formal series in both arguments.
StarResult star(const GeometryCache &geom, const NuSeries<Jet> &f, const NuSeries<Jet> &g, int nu_order,
                std::optional<int> target_order = std::nullopt);

// T = (1 - nu E^{-1}(Q + gamma))^{-1} 1, component by component.
TensorT tensor_T(const GeometryCache &geom, int nu_order, std::optional<int> target_order = std::nullopt);

// u * v = sum T_{K Lbar} (D^{k_1}..D^{k_r} u)(Dbar^{l_1}..Dbar^{l_s} v).
StarResult star_via_T(const GeometryCache &geom, const TensorT &t, const Jet &u, const Jet &v, int nu_order,
                      std::optional<int> target_order = std::nullopt);

// T through nu^4 assembled from gamma and the canonical tensors:
// 1 + nu gamma + nu^2 gamma^2/2 + nu^3 (gamma^3/6 + rho22/4)
//   + nu^4 (gamma^4/24 + gamma rho22/4 + rho23/12 + rho32/12 + rho~/8).
TensorT closed_form_T_reference(const GeometryCache &geom, std::optional<int> target_order = std::nullopt);

// Operator D^{k_1}..D^{k_r} (holo) or Dbar^{l_1}..Dbar^{l_r} (antiholo) on f.
Jet contravariant_chain(const GeometryCache &geom, const Jet &f, const std::vector<int> &indices,
                        Orientation orientation);

} // namespace sepstar

#endif
