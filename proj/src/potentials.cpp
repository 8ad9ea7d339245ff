#include <sepstar/potentials.hpp>

#include <map>
#include <stdexcept>

namespace sepstar
{

namespace
{

// mt19937_64 output is fixed by the standard; the std distributions are not,
// so draws are mapped by hand to keep seeds portable.
int draw(Rng &rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(Rng &rng) { return (rng() >> 17) & 1u; }

Jet flat_sum(int n, int order)
{
    Jet s(n, order);
    for (int k = 0; k < n; ++k) {
        s.add_term(MultiIndex::from_lists({k}, {k}), GaussRational(1));
    }
    return s;
}

// sum_{j>=1} sign^(j+1) s^j / j for the given sign: log(1+s) with sign = -1
// in the alternation, -log(1-s) with all terms positive.
Jet log_series(const Jet &s, bool alternating)
{
    const int n = s.dim();
    const int order = s.order();
    Jet result(n, order);
    Jet power = s;
    for (int j = 1; 2 * j <= order; ++j) {
        const long sign = (alternating && j % 2 == 0) ? -1 : 1;
        result += power.scaled(GaussRational::fraction(sign, j));
        power = power * s;
    }
    return result;
}

} // namespace

bool is_builtin_potential(std::string_view name)
{
    return name == "flat" || name == "fubini-study" || name == "hyperbolic";
}

Jet builtin_potential(std::string_view name, int n, int order)
{
    if (order < 2) {
        throw std::invalid_argument("potential order must be at least 2");
    }
    if (name == "flat") {
        return flat_sum(n, order);
    }
    if (name == "fubini-study") {
        return log_series(flat_sum(n, order), true);
    }
    if (name == "hyperbolic") {
        return log_series(flat_sum(n, order), false);
    }
    throw std::invalid_argument("unknown potential '" + std::string(name) + "'");
}

Jet random_test_polynomial(int n, int max_degree, int order, Rng &rng)
{
    Jet p(n, order);
    for (const MultiIndex &m : all_monomials(n, max_degree)) {
        if (!coin(rng)) {
            continue;
        }
        const int re = draw(rng, -3, 3);
        const int im = draw(rng, -3, 3);
        p.add_term(m, GaussRational(mpq_class(re), mpq_class(im)));
    }
    return p;
}

Jet random_potential(int n, int order, std::uint64_t seed)
{
    Rng rng(seed);
    const int top = std::min(order, 4);

    // Real potentials: the coefficient of z^a zbar^b equals that of z^b zbar^a.
    auto swapped = [](const MultiIndex &m) {
        return MultiIndex::from_lists(m.antiholo_list(), m.holo_list());
    };
    std::map<MultiIndex, int> chosen;
    for (const MultiIndex &m : all_monomials(n, top)) {
        if (m.degree() < 2) {
            continue;
        }
        const MultiIndex mirror = swapped(m);
        if (mirror < m) {
            continue;
        }
        const int c = draw(rng, -1, 1);
        if (c != 0) {
            chosen[m] = c;
            chosen[mirror] = c;
        }
    }
    for (int d = 2; d <= top; ++d) {
        std::vector<MultiIndex> mixed;
        bool present = false;
        for (const MultiIndex &m : all_monomials(n, d)) {
            if (m.degree() != d || m.holo_degree() == 0 || m.antiholo_degree() == 0) {
                continue;
            }
            mixed.push_back(m);
            present = present || chosen.contains(m);
        }
        if (!present && !mixed.empty()) {
            const MultiIndex m = mixed[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(mixed.size()) - 1))];
            const int c = coin(rng) ? 1 : -1;
            chosen[m] = c;
            chosen[swapped(m)] = c;
        }
    }

    Jet phi = flat_sum(n, order);
    for (const auto &[m, c] : chosen) {
        phi.add_term(m, GaussRational::fraction(c, 4));
    }
    return phi;
}

} // namespace sepstar
