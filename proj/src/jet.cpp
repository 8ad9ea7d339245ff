#include <sepstar/jet.hpp>

#include <algorithm>
#include <unordered_map>

#include <sepstar/errors.hpp>

namespace sepstar
{

Jet::Jet(int n, int order) : n_(n), order_(order)
{
    if (n < 1 || n > kMaxDim) {
        throw std::invalid_argument("chart dimension must be in 1.." + std::to_string(kMaxDim));
    }
    if (order < 0) {
        throw std::invalid_argument("jet order must be non-negative");
    }
}

Jet Jet::constant(int n, int order, const GaussRational &c)
{
    Jet j(n, order);
    j.add_term(MultiIndex{}, c);
    return j;
}

Jet Jet::monomial(int n, int order, const MultiIndex &m, const GaussRational &c)
{
    Jet j(n, order);
    j.add_term(m, c);
    return j;
}

Jet Jet::variable(int n, int order, Variable v)
{
    if (v.index < 0 || v.index >= n) {
        throw std::out_of_range("variable index outside chart dimension");
    }
    return monomial(n, order, MultiIndex::unit(v));
}

GaussRational Jet::coeff(const MultiIndex &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational{} : it->second;
}

void Jet::add_term(const MultiIndex &m, const GaussRational &c)
{
    if (m.degree() > order_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void Jet::check_compatible(const Jet &o) const
{
    if (n_ != o.n_) {
        throw dimension_mismatch("jets on charts of dimension " + std::to_string(n_) + " and "
                                 + std::to_string(o.n_));
    }
}

Jet Jet::truncated(int order) const
{
    if (order >= order_) {
        return *this;
    }
    if (order < 0) {
        throw order_exhausted("truncation below order 0");
    }
    Jet r(n_, order);
    for (const auto &[m, c] : terms_) {
        if (m.degree() > order) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

Jet Jet::with_order(int order) const
{
    Jet r = *this;
    r.order_ = order;
    if (!terms_.empty() && terms_.rbegin()->first.degree() > order) {
        return truncated(order);
    }
    return r;
}

Jet Jet::at_origin() const { return constant(n_, order_, constant_term()); }

Jet Jet::partial(Variable v) const
{
    if (order_ < 1) {
        throw order_exhausted("cannot differentiate an order-0 jet");
    }
    if (v.index < 0 || v.index >= n_) {
        throw std::out_of_range("variable index outside chart dimension");
    }
    Jet r(n_, order_ - 1);
    for (const auto &[m, c] : terms_) {
        const int e = m.exponent(v);
        if (e == 0) {
            continue;
        }
        MultiIndex d = m;
        d.decrement(v);
        r.add_term(d, c * GaussRational(e));
    }
    return r;
}

Jet Jet::partial(const MultiIndex &idx) const
{
    Jet r = *this;
    for (int k = 0; k < n_; ++k) {
        for (int e = 0; e < idx.holo(k); ++e) {
            r = r.partial(Variable::z(k));
        }
        for (int e = 0; e < idx.antiholo(k); ++e) {
            r = r.partial(Variable::zbar(k));
        }
    }
    return r;
}

Jet Jet::scaled(const GaussRational &c) const
{
    Jet r = *this;
    r *= c;
    return r;
}

Jet &Jet::operator+=(const Jet &o)
{
    check_compatible(o);
    if (o.order_ < order_) {
        *this = truncated(o.order_);
    }
    for (const auto &[m, c] : o.terms_) {
        if (m.degree() > order_) {
            break;
        }
        add_term(m, c);
    }
    return *this;
}

Jet &Jet::operator-=(const Jet &o)
{
    check_compatible(o);
    if (o.order_ < order_) {
        *this = truncated(o.order_);
    }
    for (const auto &[m, c] : o.terms_) {
        if (m.degree() > order_) {
            break;
        }
        add_term(m, -c);
    }
    return *this;
}

Jet &Jet::operator*=(const GaussRational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) {
        v *= c;
    }
    return *this;
}

namespace
{

// Integer numerators over a common denominator, the form in which the
// Cauchy product runs: one mpz multiply-add per pair, one reduction per
// output coefficient.
struct ScaledTerms {
    std::vector<const MultiIndex *> keys;
    std::vector<mpz_class> re;
    std::vector<mpz_class> im;
    mpz_class den{1};
    bool complex = false;
};

ScaledTerms scale_to_common_denominator(const Jet::term_map &terms, int max_degree)
{
    ScaledTerms out;
    for (const auto &[m, c] : terms) {
        if (m.degree() > max_degree) {
            break;
        }
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.re().get_den_mpz_t());
        if (sgn(c.im()) != 0) {
            out.complex = true;
            mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.im().get_den_mpz_t());
        }
    }
    for (const auto &[m, c] : terms) {
        if (m.degree() > max_degree) {
            break;
        }
        out.keys.push_back(&m);
        out.re.push_back(c.re().get_num() * (out.den / c.re().get_den()));
        if (out.complex) {
            out.im.push_back(c.im().get_num() * (out.den / c.im().get_den()));
        }
    }
    return out;
}

// Mixed-radix code of a monomial with every exponent <= order; additive
// under monomial multiplication as long as the product stays within order.
struct DenseCoder {
    int n;
    long base;
    long size;

    long code(const MultiIndex &m) const
    {
        long c = 0;
        for (int k = 0; k < n; ++k) {
            c = c * base + m.holo(k);
        }
        for (int k = 0; k < n; ++k) {
            c = c * base + m.antiholo(k);
        }
        return c;
    }
};

constexpr long kDenseLimit = 1L << 20;

} // namespace

Jet operator*(const Jet &a, const Jet &b)
{
    a.check_compatible(b);
    const int order = std::min(a.order_, b.order_);
    Jet r(a.n_, order);
    if (a.terms_.empty() || b.terms_.empty()) {
        return r;
    }
    // Constant factor: scale the other operand.
    for (const auto &[c, other] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        if (c->terms_.size() == 1 && c->terms_.begin()->first.degree() == 0) {
            const GaussRational &k = c->terms_.begin()->second;
            for (const auto &[m, v] : other->terms_) {
                if (m.degree() > order) {
                    break;
                }
                r.terms_.emplace_hint(r.terms_.end(), m, v * k);
            }
            return r;
        }
    }
    const ScaledTerms sa = scale_to_common_denominator(a.terms_, order);
    const ScaledTerms sb = scale_to_common_denominator(b.terms_, order);
    const bool complex = sa.complex || sb.complex;
    const mpz_class den = sa.den * sb.den;

    struct Acc {
        MultiIndex key;
        mpz_class re;
        mpz_class im;
        bool used = false;
    };
    long size = 1;
    for (int v = 0; v < 2 * a.n_ && size <= kDenseLimit; ++v) {
        size *= order + 1;
    }
    const bool dense = size <= kDenseLimit;
    const DenseCoder coder{a.n_, order + 1, size};
    std::vector<int> slot_of;
    std::vector<Acc> accs;
    accs.reserve(std::min<std::size_t>(sa.keys.size() * sb.keys.size(), 4096));
    std::unordered_map<MultiIndex, int> sparse_slot;
    std::vector<long> codes_b;
    if (dense) {
        slot_of.assign(static_cast<std::size_t>(size), -1);
        for (const MultiIndex *m : sb.keys) {
            codes_b.push_back(coder.code(*m));
        }
    }
    mpz_class tmp;
    for (std::size_t i = 0; i < sa.keys.size(); ++i) {
        const MultiIndex &ma = *sa.keys[i];
        const int room = order - ma.degree();
        const long code_a = dense ? coder.code(ma) : 0;
        for (std::size_t j = 0; j < sb.keys.size(); ++j) {
            const MultiIndex &mb = *sb.keys[j];
            if (mb.degree() > room) {
                break;
            }
            int *index;
            if (dense) {
                index = &slot_of[static_cast<std::size_t>(code_a + codes_b[j])];
            } else {
                index = &sparse_slot.try_emplace(ma + mb, -1).first->second;
            }
            if (*index < 0) {
                *index = static_cast<int>(accs.size());
                accs.push_back(Acc{ma + mb, {}, {}, true});
            }
            Acc *slot = &accs[static_cast<std::size_t>(*index)];
            mpz_addmul(slot->re.get_mpz_t(), sa.re[i].get_mpz_t(), sb.re[j].get_mpz_t());
            if (complex) {
                const mpz_class &ai = sa.complex ? sa.im[i] : tmp;
                const mpz_class &bi = sb.complex ? sb.im[j] : tmp;
                mpz_submul(slot->re.get_mpz_t(), ai.get_mpz_t(), bi.get_mpz_t());
                mpz_addmul(slot->im.get_mpz_t(), sa.re[i].get_mpz_t(), bi.get_mpz_t());
                mpz_addmul(slot->im.get_mpz_t(), ai.get_mpz_t(), sb.re[j].get_mpz_t());
            }
        }
    }
    auto emit = [&](Acc &acc) {
        if (!acc.used || (sgn(acc.re) == 0 && sgn(acc.im) == 0)) {
            return;
        }
        mpq_class re(acc.re, den);
        mpq_class im(acc.im, den);
        r.terms_.emplace(acc.key, GaussRational(std::move(re), std::move(im)));
    };
    for (auto &acc : accs) {
        emit(acc);
    }
    return r;
}

Jet Jet::reciprocal() const
{
    const GaussRational a0 = constant_term();
    if (a0.is_zero()) {
        throw std::domain_error("reciprocal of a jet with zero constant term");
    }
    const GaussRational inv0 = GaussRational(1) / a0;
    std::vector<std::pair<MultiIndex, GaussRational>> tail;
    for (const auto &[m, c] : terms_) {
        if (m.degree() > 0) {
            tail.emplace_back(m, c);
        }
    }
    // r_m = -(1/a0) * sum_{p | m, p != 0} a_p r_{m-p}, in graded order.
    std::unordered_map<MultiIndex, GaussRational> r;
    r.emplace(MultiIndex{}, inv0);
    Jet out(n_, order_);
    out.terms_.emplace(MultiIndex{}, inv0);
    for (const MultiIndex &m : all_monomials(n_, order_)) {
        if (m.degree() == 0) {
            continue;
        }
        GaussRational sum;
        for (const auto &[p, ap] : tail) {
            if (p.degree() > m.degree()) {
                break;
            }
            if (!m.divisible_by(p)) {
                continue;
            }
            auto it = r.find(m - p);
            if (it != r.end()) {
                sum.add_product(ap, it->second);
            }
        }
        if (!sum.is_zero()) {
            GaussRational v = -(sum * inv0);
            r.emplace(m, v);
            out.terms_.emplace(m, std::move(v));
        }
    }
    return out;
}

std::string format_term_sum(const std::vector<std::pair<std::string, GaussRational>> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[mono, c] : terms) {
        GaussRational shown = c;
        bool negative = false;
        if (c.is_real() && sgn(c.re()) < 0) {
            negative = true;
            shown = -c;
        }
        if (s.empty()) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        if (mono == "1") {
            s += shown.to_string();
        } else if (shown.is_one()) {
            s += mono;
        } else {
            s += shown.to_string() + "*" + mono;
        }
    }
    return s;
}

std::string Jet::to_string() const
{
    std::vector<std::pair<std::string, GaussRational>> terms;
    for (const auto &[m, c] : terms_) {
        terms.emplace_back(m.to_string(n_), c);
    }
    return format_term_sum(terms);
}

Jet jet_mul(const Jet &a, const Jet &b) { return a * b; }
Jet jet_partial(const Jet &a, Variable v) { return a.partial(v); }
Jet jet_reciprocal(const Jet &a) { return a.reciprocal(); }

bool agree_to_order(const Jet &a, const Jet &b, int order)
{
    if (a.dim() != b.dim()) {
        return false;
    }
    return a.truncated(order).terms() == b.truncated(order).terms();
}

std::vector<MultiIndex> all_monomials(int n, int order)
{
    std::vector<MultiIndex> out;
    out.emplace_back();
    // Breadth-first by degree: extend each degree-d monomial by a variable at
    // or after its last nonzero slot so that each monomial appears once.
    std::vector<std::pair<MultiIndex, int>> frontier{{MultiIndex{}, 0}};
    for (int d = 1; d <= order; ++d) {
        std::vector<std::pair<MultiIndex, int>> next;
        for (const auto &[m, start] : frontier) {
            for (int slot = start; slot < 2 * n; ++slot) {
                MultiIndex e = m;
                e.increment(slot < n ? Variable::z(slot) : Variable::zbar(slot - n));
                next.emplace_back(e, slot);
            }
        }
        for (const auto &[m, s] : next) {
            out.push_back(m);
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sepstar
