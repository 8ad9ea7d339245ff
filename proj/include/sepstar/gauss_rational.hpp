#ifndef SEPSTAR_GAUSS_RATIONAL_HPP
#define SEPSTAR_GAUSS_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace sepstar
{

// Exact complex number with rational real and imaginary parts. GMP keeps
// both parts canonical (reduced, positive denominator) after every operation.
class GaussRational
{
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}
    GaussRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRational fraction(long num, long den) { return GaussRational(mpq_class(num, den)); }
    static GaussRational i() { return GaussRational(mpq_class(0), mpq_class(1)); }

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    GaussRational &operator+=(const GaussRational &o)
    {
        re_ += o.re_;
        if (sgn(o.im_) != 0) {
            im_ += o.im_;
        }
        return *this;
    }
    GaussRational &operator-=(const GaussRational &o)
    {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) {
            im_ -= o.im_;
        }
        return *this;
    }
    GaussRational &operator*=(const GaussRational &o);
    GaussRational &operator/=(const GaussRational &o);

    // this += a * b without temporaries for the real-only case.
    void add_product(const GaussRational &a, const GaussRational &b);

    friend GaussRational operator+(GaussRational a, const GaussRational &b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational &b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational &b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational &b) { return a /= b; }
    friend GaussRational operator-(const GaussRational &a) { return GaussRational(-a.re_, -a.im_); }

    friend bool operator==(const GaussRational &a, const GaussRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // "p/q" for real values, "(p/q+r/s*i)" otherwise.
    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const GaussRational &x) { return os << x.to_string(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Canonical fraction text: "p" when the denominator is 1, "p/q" otherwise.
std::string fraction_string(const mpq_class &q);

} // namespace sepstar

#endif
