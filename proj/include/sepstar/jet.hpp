#ifndef SEPSTAR_JET_HPP
#define SEPSTAR_JET_HPP

#include <map>
#include <string>
#include <vector>

#include <sepstar/gauss_rational.hpp>
#include <sepstar/multi_index.hpp>

namespace sepstar
{

// Truncated power series in z^1..z^n, zbar^1..zbar^n around the chart origin,
// treating z and zbar as independent variables.
//
// order() is the total degree up to which the coefficients are trustworthy:
// no stored monomial exceeds it, differentiation lowers it by one and binary
// operations keep the minimum of the operands. Zero coefficients are never
// stored, so two jets are equal iff they agree on order and on all terms.
class Jet
{
public:
    using term_map = std::map<MultiIndex, GaussRational>;

    Jet() = default;
    Jet(int n, int order);

    static Jet constant(int n, int order, const GaussRational &c);
    static Jet monomial(int n, int order, const MultiIndex &m, const GaussRational &c = GaussRational(1));
    static Jet variable(int n, int order, Variable v);

    int dim() const { return n_; }
    int order() const { return order_; }
    const term_map &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    GaussRational coeff(const MultiIndex &m) const;
    GaussRational constant_term() const { return coeff(MultiIndex{}); }

    // Adds c to the coefficient of m; ignored when deg(m) > order.
    void add_term(const MultiIndex &m, const GaussRational &c);

    // Drops every term above `order` and lowers the validity to `order`
    // (never raises it).
    Jet truncated(int order) const;
    // Same coefficients with a different validity claim. Only for exact
    // polynomial data whose terms all fit below the new order.
    Jet with_order(int order) const;
    // Keeps only the constant term.
    Jet at_origin() const;

    Jet partial(Variable v) const;
    // Mixed partial derivative by a multi-index.
    Jet partial(const MultiIndex &idx) const;
    Jet reciprocal() const;
    Jet scaled(const GaussRational &c) const;

    Jet &operator+=(const Jet &o);
    Jet &operator-=(const Jet &o);
    Jet &operator*=(const GaussRational &c);

    friend Jet operator+(Jet a, const Jet &b) { return a += b; }
    friend Jet operator-(Jet a, const Jet &b) { return a -= b; }
    friend Jet operator-(const Jet &a) { return a.scaled(GaussRational(-1)); }
    friend Jet operator*(const Jet &a, const Jet &b);
    friend Jet operator*(Jet a, const GaussRational &c) { return a *= c; }
    friend Jet operator*(const GaussRational &c, Jet a) { return a *= c; }

    friend bool operator==(const Jet &a, const Jet &b)
    {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    // "z1*zbar1 - 1/2*z1^2*zbar1^2", "0" for the zero jet.
    std::string to_string() const;

private:
    void check_compatible(const Jet &o) const;

    int n_ = 0;
    int order_ = 0;
    term_map terms_;
};

Jet jet_mul(const Jet &a, const Jet &b);
Jet jet_partial(const Jet &a, Variable v);
Jet jet_reciprocal(const Jet &a);

// True when both jets agree on every coefficient of degree <= order.
bool agree_to_order(const Jet &a, const Jet &b, int order);

// Every monomial in 2n variables of total degree <= order, graded order.
std::vector<MultiIndex> all_monomials(int n, int order);

// Renders "c*m" terms joined by " + " / " - ".
std::string format_term_sum(const std::vector<std::pair<std::string, GaussRational>> &terms);

} // namespace sepstar

#endif
