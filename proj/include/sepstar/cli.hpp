#ifndef SEPSTAR_CLI_HPP
#define SEPSTAR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <sepstar/jet.hpp>

namespace sepstar
{

// One job; the base point is always the chart origin.
struct JobConfig {
    int n = 1;
    // Builtin name or an expression in z1..zn, zbar1..zbarn.
    std::string potential = "flat";
    int nu_order = 2;
    // Order to which reported coefficients are exact. Defaults to 2, or to the
    // total degree of the input functions for star and lsymbol.
    std::optional<int> jet_order;
    // Expansion order of the potential; defaults to jet_order + 2 nu_order + 4.
    std::optional<int> phi_order;
    std::string f, g, h;
    std::uint64_t seed = 1;
    int samples = 3;
    bool at_origin = false;
};

Jet load_potential(const JobConfig &config, int order);

// Runs `star`, `lsymbol`, `tensor-t`, `geom` or `verify` with the given
// arguments (without the program name). JSON goes to out, diagnostics to err.
// Returns 0 on success, 1 when a verification check fails, 2 on bad
// configuration or input.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sepstar

#endif
