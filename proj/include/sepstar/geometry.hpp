#ifndef SEPSTAR_GEOMETRY_HPP
#define SEPSTAR_GEOMETRY_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include <sepstar/jet.hpp>
#include <sepstar/symbol.hpp>

namespace sepstar
{

enum class Orientation { holo, antiholo };

// Metric, connection and curvature data of the pseudo-Kaehler metric
// g_{k lbar} = d^2 Phi / dz^k dzbar^l on one chart, derived from a potential jet.
//
// The metric and its inverse are built on construction. Derivatives of Phi
// and iterated contravariant derivatives are computed on first use and
// memoized; the memo is internally locked, so one cache can be shared by
// concurrent readers. All indices are 0-based.
class GeometryCache
{
public:
    explicit GeometryCache(Jet phi);

    int dim() const { return n_; }
    const Jet &phi() const { return phi_; }
    int phi_order() const { return phi_.order(); }
    // Validity of g_{k lbar} and g^{lbar k}.
    int metric_order() const { return phi_.order() - 2; }

    // d^{|idx|} Phi / dz^{holo} dzbar^{antiholo}.
    const Jet &potential_derivative(const MultiIndex &idx) const;

    const Jet &g_low(int k, int l) const { return g_low_[k * n_ + l]; }
    // g^{lbar k}: sum_l g_{k lbar} g^{lbar m} = delta_k^m.
    const Jet &g_up(int l, int k) const { return g_up_[l * n_ + k]; }

    // antiholo: Dbar^index f = g^{lbar k} df/dz^k (index = l).
    // holo:     D^index f    = g^{lbar k} df/dzbar^l (index = k).
    Jet contravariant_apply(const Jet &f, int index, Orientation orientation) const;
    // Dbar_l f = df/dzbar^l - Phi_{lbar qbar} Dbar^q f.
    Jet dbar_lower_apply(const Jet &f, int l) const;

    // Gamma^{tbar}_{lbar qbar} = g^{tbar s} g_{s lbar qbar}.
    const Jet &christoffel_bar(int t, int l, int q) const;
    // Gamma^t_{k p} = g^{sbar t} g_{k p sbar}.
    const Jet &christoffel(int t, int k, int p) const;

    // R_{k p lbar qbar} = g_{k p nbar} g^{nbar m} g_{m lbar qbar} - g_{k p lbar qbar}.
    const Jet &curvature_low(int k, int p, int l, int q) const;

    // R^{lbar_1..lbar_r}_{lbar qbar} = -Dbar^{l_1}..Dbar^{l_r} Phi_{lbar qbar}, r >= 2.
    const Jet &curvature_upper(const std::vector<int> &uppers, int l, int q) const;
    // Holomorphic mirror R^{k_1..k_s}_{k p} = -D^{k_1}..D^{k_s} Phi_{k p}, s >= 2.
    const Jet &curvature_upper_holo(const std::vector<int> &uppers, int k, int p) const;

    // Dbar^{L} Phi_{lbar qbar} for a multiset L (empty L gives Phi_{lbar qbar}).
    // Applied innermost-first in the stored (sorted) order and memoized.
    const Jet &dbar_iterated_phi(const std::vector<int> &uppers, int l, int q) const;
    // D^{K} Phi_{k p}, the holomorphic mirror.
    const Jet &d_iterated_phi(const std::vector<int> &uppers, int k, int p) const;

    // Canonical tensor R_{k_1..k_r lbar_1 lbar_2}, obtained by lowering the
    // upper indices of curvature_upper (r >= 2).
    Jet canonical_tensor_r(const std::vector<int> &holo, int l, int q) const;
    // Canonical tensor R_{k p lbar_1..lbar_s}, obtained by lowering the upper
    // indices of curvature_upper_holo (s >= 2).
    Jet canonical_tensor_s(int k, int p, const std::vector<int> &antiholo) const;

private:
    using upper_key = std::tuple<std::vector<int>, int, int>;

    void invert_metric();
    const Jet &memo_negated(std::map<upper_key, Jet> &memo, const Jet &source, upper_key key) const;

    Jet phi_;
    int n_;
    std::vector<Jet> g_low_;
    std::vector<Jet> g_up_;

    mutable std::mutex mutex_;
    mutable std::map<MultiIndex, Jet> derivatives_;
    mutable std::map<upper_key, Jet> dbar_phi_;
    mutable std::map<upper_key, Jet> d_phi_;
    mutable std::map<upper_key, Jet> curvature_up_;
    mutable std::map<upper_key, Jet> curvature_up_holo_;
    mutable std::map<std::tuple<int, int, int>, Jet> christoffel_bar_;
    mutable std::map<std::tuple<int, int, int>, Jet> christoffel_;
    mutable std::map<std::tuple<int, int, int, int>, Jet> curvature_low_;
};

// Exact inverse of the constant-coefficient matrix of a square grid of jets,
// followed by Newton-Schulz correction H <- H (2 - G H), which doubles the
// number of correct orders per step.
std::vector<Jet> invert_metric(const std::vector<Jet> &g_low, int n);

// gamma = g_{p qbar} eta^p etabar^q.
Symbol gamma_symbol(const GeometryCache &geom);
// rho_{r,s} = R_{k_1..k_r lbar_1..lbar_s} eta^{k_1}..eta^{k_r} etabar^{l_1}..etabar^{l_s}
// for r, s >= 2 with r == 2 or s == 2. When both equal 2 the r-path tensor is
// used; rho_symbol_s_path gives the mirror construction. A target order cuts
// the curvature inputs before they are contracted.
Symbol rho_symbol(const GeometryCache &geom, int r, int s, std::optional<int> target_order = std::nullopt);
Symbol rho_symbol_s_path(const GeometryCache &geom, int r, int s, std::optional<int> target_order = std::nullopt);
// rho~ = R_{k1 k2 qbar1 qbar2} g^{qbar1 p1} g^{qbar2 p2} R_{p1 p2 lbar1 lbar2} eta eta etabar etabar.
Symbol rho_tilde_symbol(const GeometryCache &geom, std::optional<int> target_order = std::nullopt);

// Fiberwise polynomial of the symmetrized covariant derivative of S:
// antiholo: etabar^l d/dzbar^l - Gamma^{tbar}_{lbar qbar} etabar^l etabar^q d/detabar^t,
// holo:     eta^k d/dz^k - Gamma^t_{k p} eta^k eta^p d/deta^t.
// The other fiber kind is inert (mixed Christoffel symbols vanish).
Symbol symmetrized_covariant_derivative(const GeometryCache &geom, const Symbol &s, Orientation orientation);

} // namespace sepstar

#endif
