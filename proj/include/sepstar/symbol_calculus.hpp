#ifndef SEPSTAR_SYMBOL_CALCULUS_HPP
#define SEPSTAR_SYMBOL_CALCULUS_HPP

#include <map>
#include <optional>
#include <vector>

#include <sepstar/geometry.hpp>
#include <sepstar/symbol.hpp>

namespace sepstar
{

// Formal series sum_r nu^r components[r], truncated after components.back().
template <typename T>
struct NuSeries {
    std::vector<T> components;

    NuSeries() = default;
    explicit NuSeries(std::vector<T> c) : components(std::move(c)) {}

    int order() const { return static_cast<int>(components.size()) - 1; }
    const T &operator[](int r) const { return components.at(static_cast<std::size_t>(r)); }
    T &operator[](int r) { return components.at(static_cast<std::size_t>(r)); }

    friend bool operator==(const NuSeries &, const NuSeries &) = default;
};

// E = etabar^l d/detabar^l: scales each term by its etabar-degree.
Symbol euler_apply(const Symbol &f);
// Inverse of E on symbols vanishing at etabar = 0; throws not_in_image otherwise.
Symbol euler_inverse(const Symbol &f);

// Q = nablabar + sum_{r>=2} (1/r!) R^{lbar_1..lbar_r}_{lbar qbar} etabar^l etabar^q d^r/detabar^{l_1}..detabar^{l_r},
// with eta fiber variables inert. The curvature sum stops at the etabar-degree of f.
Symbol q_apply(const GeometryCache &geom, const Symbol &f);
// The same operator in chart form:
// etabar^l d/dzbar^l - sum_{r>=1} (1/r!) (Dbar^{l_1}..Dbar^{l_r} Phi_{lbar qbar}) etabar^l etabar^q d^r/detabar^{l_1}..detabar^{l_r}.
Symbol q_apply_coordinate(const GeometryCache &geom, const Symbol &f);

// Composition of symbols of operators in normal form:
// F o H = mu(exp{d/detabar^l (x) Dbar^l - Dbar_l (x) d/dzetabar_l}(F (x) H)).
Symbol compose(const GeometryCache &geom, const Symbol &f, const Symbol &h);
// [F, H]_o = F o H - H o F.
Symbol commutator(const GeometryCache &geom, const Symbol &f, const Symbol &h);

// Dbar^L g for etabar multi-indices L, memoized; each chain is built from
// the one with its smallest index removed.
class ContravariantChains
{
public:
    ContravariantChains(const GeometryCache &geom, Jet g);

    const Jet &function() const { return g_; }
    const Jet &get(const FiberIndex &etabar_part);

private:
    const GeometryCache *geom_;
    Jet g_;
    std::map<FiberIndex, Jet> memo_;
};

// Applies the operator with symbol F (zetabar^M etabar^L -> Dbar_M c Dbar^L)
// to a function. F must not contain eta.
Jet apply_symbol_operator(const GeometryCache &geom, const Symbol &f, const Jet &g);
Jet apply_symbol_operator(const GeometryCache &geom, const Symbol &f, ContravariantChains &chains);

// Dbar_M applied to every coefficient / Dbar^L applied to every coefficient.
Symbol dbar_lower_coefficients(const GeometryCache &geom, const Symbol &f, int l);
Symbol dbar_upper_coefficients(const GeometryCache &geom, const Symbol &f, int l);

// Symbol of left star-multiplication by the formal function f:
// F_r = f_r + E^{-1} Q F_{r-1}, i.e. F = (1 - nu E^{-1} Q)^{-1} f.
// With a target order M, component r is kept only to order M + N - r, which
// is what later components and the application to functions consume.
NuSeries<Symbol> left_mult_symbol(const GeometryCache &geom, const NuSeries<Jet> &f, int nu_order,
                                  std::optional<int> target_order = std::nullopt);

// sigma(R_{dPhi/dzbar^l}) = Phi_lbar + nu (zetabar_l + Phi_{lbar qbar} etabar^q).
NuSeries<Symbol> right_mult_phi_symbol(const GeometryCache &geom, int l);

} // namespace sepstar

#endif
