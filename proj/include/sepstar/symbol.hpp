#ifndef SEPSTAR_SYMBOL_HPP
#define SEPSTAR_SYMBOL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include <sepstar/jet.hpp>

namespace sepstar
{

// Fiber variables of a symbol: zetabar_l (left D-bar_l factors), eta^k
// (holomorphic contravariant slots) and etabar^l (right D-bar^l factors).
enum class FiberKind { zeta_bar, eta, eta_bar };

struct FiberVar {
    FiberKind kind = FiberKind::eta_bar;
    int index = 0;

    static FiberVar zeta_bar(int l) { return {FiberKind::zeta_bar, l}; }
    static FiberVar eta(int k) { return {FiberKind::eta, k}; }
    static FiberVar eta_bar(int l) { return {FiberKind::eta_bar, l}; }
};

// Exponents of a fiber monomial zetabar^a eta^b etabar^c. Ordered by total
// degree, then by etabar, eta, zetabar exponents (larger leading exponent
// first).
class FiberIndex
{
public:
    using exponents = std::array<std::uint8_t, kMaxDim>;

    FiberIndex() = default;
    static FiberIndex unit(FiberVar v);
    // Monomial from an index list of one kind, e.g. eta_bar {0,0,1}.
    static FiberIndex from_list(FiberKind kind, const std::vector<int> &indices);

    int exponent(FiberVar v) const { return slots(v.kind)[v.index]; }
    int degree(FiberKind kind) const;
    int total_degree() const { return degree(FiberKind::zeta_bar) + degree(FiberKind::eta) + degree(FiberKind::eta_bar); }
    const exponents &slots(FiberKind kind) const;

    void set_exponent(FiberVar v, int e);
    void increment(FiberVar v) { set_exponent(v, exponent(v) + 1); }
    void decrement(FiberVar v) { set_exponent(v, exponent(v) - 1); }

    // The part of this monomial of one kind only.
    FiberIndex only(FiberKind kind) const;
    std::vector<int> index_list(FiberKind kind) const;

    friend FiberIndex operator+(const FiberIndex &a, const FiberIndex &b);

    std::string to_string(int n) const;

    friend bool operator==(const FiberIndex &, const FiberIndex &) = default;
    friend std::strong_ordering operator<=>(const FiberIndex &a, const FiberIndex &b)
    {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) {
            return c;
        }
        if (auto c = b.eta_bar_ <=> a.eta_bar_; c != 0) {
            return c;
        }
        if (auto c = b.eta_ <=> a.eta_; c != 0) {
            return c;
        }
        return b.zeta_bar_ <=> a.zeta_bar_;
    }

private:
    exponents &slots(FiberKind kind);

    exponents zeta_bar_{};
    exponents eta_{};
    exponents eta_bar_{};
};

// Polynomial in the fiber variables with jet coefficients. Like Jet, a symbol
// carries the order to which all of its coefficients are valid; adding a
// coefficient of lower validity lowers it for the whole symbol.
class Symbol
{
public:
    using term_map = std::map<FiberIndex, Jet>;

    Symbol() = default;
    Symbol(int n, int order);

    static Symbol scalar(const Jet &f);
    static Symbol monomial(int n, int order, const FiberIndex &m, const Jet &coeff);
    static Symbol monomial(int n, int order, const FiberIndex &m);

    int dim() const { return n_; }
    int order() const { return order_; }
    const term_map &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Jet coeff(const FiberIndex &m) const;
    int max_degree(FiberKind kind) const;

    void add_term(const FiberIndex &m, const Jet &c);

    Symbol truncated(int order) const;
    Symbol at_origin() const;
    // Terms whose exponent of `kind` is zero.
    Symbol without(FiberKind kind) const;

    Symbol fiber_partial(FiberVar v) const;
    // Applies a jet map to every coefficient (e.g. a partial derivative).
    Symbol map_coefficients(const std::function<Jet(const Jet &)> &f) const;

    Symbol &operator+=(const Symbol &o);
    Symbol &operator-=(const Symbol &o);
    friend Symbol operator+(Symbol a, const Symbol &b) { return a += b; }
    friend Symbol operator-(Symbol a, const Symbol &b) { return a -= b; }
    friend Symbol operator-(const Symbol &a) { return a.scaled(GaussRational(-1)); }

    Symbol scaled(const GaussRational &c) const;
    // Pointwise product with a function.
    friend Symbol operator*(const Symbol &s, const Jet &f);
    friend Symbol operator*(const Jet &f, const Symbol &s) { return s * f; }
    // Pointwise (commutative) product of fiber polynomials.
    friend Symbol operator*(const Symbol &a, const Symbol &b);

    friend bool operator==(const Symbol &a, const Symbol &b)
    {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void check_compatible(const Symbol &o) const;
    void lower_order(int order);

    int n_ = 0;
    int order_ = 0;
    term_map terms_;
};

} // namespace sepstar

#endif
