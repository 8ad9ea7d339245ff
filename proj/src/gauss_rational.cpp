#include <sepstar/gauss_rational.hpp>

#include <stdexcept>

namespace sepstar
{

GaussRational &GaussRational::operator*=(const GaussRational &o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational &GaussRational::operator/=(const GaussRational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0) {
            im_ /= o.re_;
        }
        return *this;
    }
    const mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

void GaussRational::add_product(const GaussRational &a, const GaussRational &b)
{
    if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
        re_ += a.re_ * b.re_;
        return;
    }
    *this += a * b;
}

std::string fraction_string(const mpq_class &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussRational::to_string() const
{
    if (sgn(im_) == 0) {
        return fraction_string(re_);
    }
    if (sgn(re_) == 0) {
        return "(" + fraction_string(im_) + "*i)";
    }
    std::string s = "(" + fraction_string(re_);
    if (sgn(im_) > 0) {
        s += "+";
    }
    return s + fraction_string(im_) + "*i)";
}

} // namespace sepstar
