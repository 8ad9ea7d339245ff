#ifndef SEPSTAR_TESTS_HELPERS_HPP
#define SEPSTAR_TESTS_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <sepstar/jet.hpp>
#include <sepstar/symbol.hpp>

namespace helpers
{

using sepstar::FiberIndex;
using sepstar::FiberKind;
using sepstar::GaussRational;
using sepstar::Jet;
using sepstar::MultiIndex;
using sepstar::Symbol;

struct Term {
    std::vector<int> holo, antiholo;
    GaussRational c;
};

inline MultiIndex mono(std::vector<int> holo, std::vector<int> antiholo)
{
    return MultiIndex::from_lists(std::span<const int>(holo), std::span<const int>(antiholo));
}

inline Jet poly(int n, int order, std::initializer_list<Term> terms)
{
    Jet j(n, order);
    for (const Term &t : terms) {
        j.add_term(mono(t.holo, t.antiholo), t.c);
    }
    return j;
}

inline GaussRational q(long num, long den = 1) { return GaussRational::fraction(num, den); }

inline FiberIndex fiber(std::vector<int> zeta_bar, std::vector<int> eta, std::vector<int> eta_bar)
{
    return FiberIndex::from_list(FiberKind::zeta_bar, zeta_bar) + FiberIndex::from_list(FiberKind::eta, eta) +
           FiberIndex::from_list(FiberKind::eta_bar, eta_bar);
}

inline Jet c(int n, int order, long num, long den = 1) { return Jet::constant(n, order, q(num, den)); }

} // namespace helpers

#endif
