#include <sepstar/serialize.hpp>

namespace sepstar
{

Json coefficient_json(const GaussRational &c)
{
    if (c.is_real()) {
        return fraction_string(c.re());
    }
    return Json::array({fraction_string(c.re()), fraction_string(c.im())});
}

std::string monomial_name(const MultiIndex &m, const FiberIndex &f, int n)
{
    const std::string base = m.to_string(n);
    const std::string fiber = f.to_string(n);
    if (fiber == "1") {
        return base;
    }
    return base == "1" ? fiber : base + "*" + fiber;
}

Json jet_json(const Jet &j)
{
    Json out = Json::object();
    for (const auto &[m, c] : j.terms()) {
        out[m.to_string(j.dim())] = coefficient_json(c);
    }
    return out;
}

Json symbol_json(const Symbol &s)
{
    Json out = Json::object();
    for (const auto &[f, c] : s.terms()) {
        for (const auto &[m, v] : c.terms()) {
            out[monomial_name(m, f, s.dim())] = coefficient_json(v);
        }
    }
    return out;
}

Json series_json(const NuSeries<Jet> &s)
{
    Json out = Json::object();
    for (int r = 0; r <= s.order(); ++r) {
        out[std::to_string(r)] = jet_json(s[r]);
    }
    return out;
}

Json series_json(const NuSeries<Symbol> &s)
{
    Json out = Json::object();
    for (int r = 0; r <= s.order(); ++r) {
        out[std::to_string(r)] = symbol_json(s[r]);
    }
    return out;
}

Json series_text(const NuSeries<Jet> &s)
{
    Json out = Json::object();
    for (int r = 0; r <= s.order(); ++r) {
        out[std::to_string(r)] = s[r].to_string();
    }
    return out;
}

Json series_text(const NuSeries<Symbol> &s)
{
    Json out = Json::object();
    for (int r = 0; r <= s.order(); ++r) {
        out[std::to_string(r)] = s[r].to_string();
    }
    return out;
}

Json report_json(const VerificationReport &r)
{
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
    }
    Json config = {{"potential", r.config.potential},   {"n", r.config.n},
                   {"phi_order", r.config.phi_order},   {"nu_order", r.config.nu_order},
                   {"jet_order", r.config.jet_order},   {"seed", r.config.seed}};
    return {{"passed", r.passed()}, {"config", config}, {"checks", checks}};
}

} // namespace sepstar
