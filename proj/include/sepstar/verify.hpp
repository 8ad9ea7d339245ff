#ifndef SEPSTAR_VERIFY_HPP
#define SEPSTAR_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <sepstar/star_product.hpp>

namespace sepstar
{

struct CheckResult {
    std::string name;
    bool passed = true;
    // First counterexample found, empty when the check passed.
    std::string witness;
};

struct ReportConfig {
    std::string potential;
    int n = 0;
    int phi_order = 0;
    int nu_order = 0;
    int jet_order = 0;
    std::uint64_t seed = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    ReportConfig config;

    bool passed() const;
    const CheckResult *find(const std::string &name) const;
    void append(const VerificationReport &other);
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    // Random inputs drawn per identity.
    int samples = 3;
    // Star products and T are compared on all coefficients up to this order.
    int jet_order = 2;
    std::string potential_label;
    // Re-expands the potential to a given order; enables the Phi-order
    // stability check when set.
    std::function<Jet(int)> expand_potential;
    // Negative control: flips the sign of the Phi_{lbar qbar} Dbar^q term of
    // Dbar_l inside the canonical-relation check.
    bool corrupt_connection_sign = false;
    // Names of the checks to run; empty runs all of them.
    std::set<std::string> only;
};

// Jacobi identities and derivative rules of g^{-1}, curvature symmetries,
// commutation and symmetry of iterated D / Dbar, canonical relations of
// Dbar_l, Dbar^l, symbol commutators, associativity and faithfulness of o,
// and agreement of the two forms of Q.
VerificationReport verify_algebraic_identities(const GeometryCache &geom, const VerifyOptions &options);

// Associativity, unit, separation of variables, the defining relation for
// dPhi/dz^k, E(F_r) = Q(F_{r-1}), commutation with the symbol of
// R_{dPhi/dzbar^l}, and the Wick formula when the potential is flat.
VerificationReport verify_star_laws(const GeometryCache &geom, int nu_order, const VerifyOptions &options);

// tensor_T against the closed nu^4 form, covariant versus lowered canonical
// tensors, star against star_via_T, and stability under a higher Phi order.
VerificationReport verify_cross_checks(const GeometryCache &geom, int nu_order, const VerifyOptions &options);

// All three suites.
VerificationReport verify_all(const GeometryCache &geom, int nu_order, const VerifyOptions &options);

// Flat-space product sum_r (nu^r / r!) sum_{l_1..l_r} (d^r f / dzbar^{l_1}..dzbar^{l_r}) (d^r g / dz^{l_1}..dz^{l_r}),
// summed over ordered index tuples.
NuSeries<Jet> wick_product(const Jet &f, const Jet &g, int nu_order);

// Terms of f without any zbar factor / without any z factor.
Jet holomorphic_part(const Jet &f);
Jet antiholomorphic_part(const Jet &f);

// Description of the first coefficient below `order` where a and b differ,
// empty when they agree.
std::string jet_difference(const Jet &a, const Jet &b, int order);
std::string symbol_difference(const Symbol &a, const Symbol &b, int order);

} // namespace sepstar

#endif
