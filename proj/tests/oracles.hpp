#ifndef SEPSTAR_TESTS_ORACLES_HPP
#define SEPSTAR_TESTS_ORACLES_HPP

// Reference values computed without the geometry, symbol or star machinery.

#include <sepstar/jet.hpp>
#include <sepstar/multi_index.hpp>
#include <sepstar/symbol_calculus.hpp>

namespace oracle
{

using sepstar::GaussRational;
using sepstar::Jet;
using sepstar::MultiIndex;

inline mpz_class factorial(long k)
{
    mpz_class f = 1;
    for (long i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

inline mpz_class binomial(long n, long k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// sign * sum_k s^k / k * (sum_j z^j zbar^j)^k with s = -1 for log(1 + x) and
// s = +1 for -log(1 - x); sign = +1 / +1 respectively. n <= 2, multinomial
// expansion written out by hand.
inline Jet log_potential(int n, int order, bool hyperbolic)
{
    Jet out(n, order);
    for (long k = 1; 2 * k <= order; ++k) {
        mpq_class c(1, k);
        if (!hyperbolic && k % 2 == 0) {
            c = -c;
        }
        for (long a = 0; a <= k; ++a) {
            if (n == 1 && a != k) {
                continue;
            }
            std::vector<int> holo, anti;
            for (long i = 0; i < a; ++i) {
                holo.push_back(0);
                anti.push_back(0);
            }
            for (long i = a; i < k; ++i) {
                holo.push_back(1);
                anti.push_back(1);
            }
            const mpq_class w = n == 1 ? c : c * mpq_class(binomial(k, a));
            out.add_term(MultiIndex::from_lists(holo, anti), GaussRational(w));
        }
    }
    return out;
}

// d^4 Phi / dz dz dzbar dzbar at 0 for n = 1, read off the z^2 zbar^2
// coefficient; the curvature R_{1 1 1bar 1bar}(0) is its negative whenever
// the third derivatives vanish at 0.
inline GaussRational fourth_derivative_at_origin(const Jet &phi)
{
    return phi.coeff(MultiIndex::from_lists({0, 0}, {0, 0})) * GaussRational(4);
}

// Flat-space product written with multisets L of antiholomorphic indices:
// sum_r nu^r sum_{|L| = r} (1 / L!) dbar^L f d^L g, where L! is the product of
// multiplicity factorials.
inline sepstar::NuSeries<Jet> wick(const Jet &f, const Jet &g, int nu_order)
{
    const int n = f.dim();
    sepstar::NuSeries<Jet> out;
    for (int r = 0; r <= nu_order; ++r) {
        const int order = std::min(f.order(), g.order()) - r;
        Jet sum(n, std::max(order, 0));
        if (order >= 0) {
            for (const auto &l : sepstar::multisets(n, r)) {
                MultiIndex holo, anti;
                for (int i : l) {
                    holo.increment(sepstar::Variable::z(i));
                    anti.increment(sepstar::Variable::zbar(i));
                }
                mpz_class weight = 1;
                for (int i = 0; i < n; ++i) {
                    weight *= factorial(holo.holo(i));
                }
                sum += (f.partial(anti) * g.partial(holo)).scaled(GaussRational(mpq_class(mpz_class(1), weight)));
            }
        }
        out.components.push_back(sum);
    }
    return out;
}

} // namespace oracle

#endif
