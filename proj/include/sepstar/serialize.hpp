#ifndef SEPSTAR_SERIALIZE_HPP
#define SEPSTAR_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include <sepstar/verify.hpp>

namespace sepstar
{

// Insertion-ordered, so monomials keep the canonical graded order.
using Json = nlohmann::ordered_json;

// "p/q" for real values, ["p/q", "r/s"] otherwise.
Json coefficient_json(const GaussRational &c);

// Sorted product z1^a*zbar1^b*...*eta1^c*etabar1^d, or "1".
std::string monomial_name(const MultiIndex &m, const FiberIndex &f, int n);

// {monomial: coefficient}
Json jet_json(const Jet &j);
Json symbol_json(const Symbol &s);

// {"0": {...}, "1": {...}, ...}
Json series_json(const NuSeries<Jet> &s);
Json series_json(const NuSeries<Symbol> &s);

// {"0": "z1*zbar1", "1": "1", ...}: each component as a readable sum.
Json series_text(const NuSeries<Jet> &s);
Json series_text(const NuSeries<Symbol> &s);

Json report_json(const VerificationReport &r);

} // namespace sepstar

#endif
