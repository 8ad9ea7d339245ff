#include <sepstar/symbol.hpp>

#include <sepstar/errors.hpp>

namespace sepstar
{

FiberIndex FiberIndex::unit(FiberVar v)
{
    FiberIndex m;
    m.increment(v);
    return m;
}

FiberIndex FiberIndex::from_list(FiberKind kind, const std::vector<int> &indices)
{
    FiberIndex m;
    for (int i : indices) {
        m.increment({kind, i});
    }
    return m;
}

const FiberIndex::exponents &FiberIndex::slots(FiberKind kind) const
{
    switch (kind) {
        case FiberKind::zeta_bar:
            return zeta_bar_;
        case FiberKind::eta:
            return eta_;
        case FiberKind::eta_bar:
            break;
    }
    return eta_bar_;
}

FiberIndex::exponents &FiberIndex::slots(FiberKind kind)
{
    return const_cast<exponents &>(static_cast<const FiberIndex *>(this)->slots(kind));
}

int FiberIndex::degree(FiberKind kind) const
{
    int d = 0;
    for (auto e : slots(kind)) {
        d += e;
    }
    return d;
}

void FiberIndex::set_exponent(FiberVar v, int e)
{
    if (v.index < 0 || v.index >= kMaxDim) {
        throw std::out_of_range("fiber index outside supported range");
    }
    if (e < 0 || e > 255) {
        throw std::out_of_range("fiber exponent out of range");
    }
    slots(v.kind)[v.index] = static_cast<std::uint8_t>(e);
}

FiberIndex FiberIndex::only(FiberKind kind) const
{
    FiberIndex m;
    m.slots(kind) = slots(kind);
    return m;
}

std::vector<int> FiberIndex::index_list(FiberKind kind) const
{
    std::vector<int> out;
    const auto &s = slots(kind);
    for (int k = 0; k < kMaxDim; ++k) {
        out.insert(out.end(), s[k], k);
    }
    return out;
}

FiberIndex operator+(const FiberIndex &a, const FiberIndex &b)
{
    FiberIndex r;
    for (int k = 0; k < kMaxDim; ++k) {
        r.zeta_bar_[k] = static_cast<std::uint8_t>(a.zeta_bar_[k] + b.zeta_bar_[k]);
        r.eta_[k] = static_cast<std::uint8_t>(a.eta_[k] + b.eta_[k]);
        r.eta_bar_[k] = static_cast<std::uint8_t>(a.eta_bar_[k] + b.eta_bar_[k]);
    }
    return r;
}

std::string FiberIndex::to_string(int n) const
{
    std::string s;
    auto emit = [&](const exponents &e, const char *name) {
        for (int k = 0; k < n; ++k) {
            if (e[k] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += '*';
            }
            s += name + std::to_string(k + 1);
            if (e[k] > 1) {
                s += '^' + std::to_string(e[k]);
            }
        }
    };
    emit(zeta_bar_, "zetabar");
    emit(eta_, "eta");
    emit(eta_bar_, "etabar");
    return s.empty() ? "1" : s;
}

Symbol::Symbol(int n, int order) : n_(n), order_(order)
{
    if (n < 1 || n > kMaxDim) {
        throw std::invalid_argument("chart dimension must be in 1.." + std::to_string(kMaxDim));
    }
}

Symbol Symbol::scalar(const Jet &f)
{
    Symbol s(f.dim(), f.order());
    s.add_term(FiberIndex{}, f);
    return s;
}

Symbol Symbol::monomial(int n, int order, const FiberIndex &m, const Jet &coeff)
{
    Symbol s(n, order);
    s.add_term(m, coeff);
    return s;
}

Symbol Symbol::monomial(int n, int order, const FiberIndex &m)
{
    return monomial(n, order, m, Jet::constant(n, order, GaussRational(1)));
}

Jet Symbol::coeff(const FiberIndex &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Jet(n_, order_) : it->second;
}

int Symbol::max_degree(FiberKind kind) const
{
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.degree(kind));
    }
    return d;
}

void Symbol::lower_order(int order)
{
    if (order >= order_) {
        return;
    }
    order_ = order;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second.truncated(order);
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

void Symbol::add_term(const FiberIndex &m, const Jet &c)
{
    if (c.dim() != n_) {
        throw dimension_mismatch("symbol coefficient on a chart of different dimension");
    }
    lower_order(c.order());
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        Jet t = c.truncated(order_);
        if (!t.is_zero()) {
            terms_.emplace(m, std::move(t));
        }
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void Symbol::check_compatible(const Symbol &o) const
{
    if (n_ != o.n_) {
        throw dimension_mismatch("symbols on charts of different dimension");
    }
}

Symbol Symbol::truncated(int order) const
{
    Symbol r = *this;
    r.lower_order(order);
    return r;
}

Symbol Symbol::at_origin() const
{
    Symbol r(n_, order_);
    for (const auto &[m, c] : terms_) {
        r.add_term(m, c.at_origin());
    }
    return r;
}

Symbol Symbol::without(FiberKind kind) const
{
    Symbol r(n_, order_);
    for (const auto &[m, c] : terms_) {
        if (m.degree(kind) == 0) {
            r.terms_.emplace(m, c);
        }
    }
    return r;
}

Symbol Symbol::fiber_partial(FiberVar v) const
{
    Symbol r(n_, order_);
    for (const auto &[m, c] : terms_) {
        const int e = m.exponent(v);
        if (e == 0) {
            continue;
        }
        FiberIndex d = m;
        d.decrement(v);
        r.add_term(d, c.scaled(GaussRational(e)));
    }
    return r;
}

Symbol Symbol::map_coefficients(const std::function<Jet(const Jet &)> &f) const
{
    // The result's validity is whatever f reports, even for an empty symbol.
    Symbol r(n_, f(Jet(n_, order_)).order());
    for (const auto &[m, c] : terms_) {
        r.add_term(m, f(c));
    }
    return r;
}

Symbol &Symbol::operator+=(const Symbol &o)
{
    check_compatible(o);
    lower_order(o.order_);
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Symbol &Symbol::operator-=(const Symbol &o)
{
    check_compatible(o);
    lower_order(o.order_);
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Symbol Symbol::scaled(const GaussRational &c) const
{
    Symbol r(n_, order_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto &[m, v] : terms_) {
        r.terms_.emplace(m, v.scaled(c));
    }
    return r;
}

Symbol operator*(const Symbol &s, const Jet &f)
{
    if (s.n_ != f.dim()) {
        throw dimension_mismatch("symbol and jet on charts of different dimension");
    }
    Symbol r(s.n_, std::min(s.order_, f.order()));
    for (const auto &[m, c] : s.terms_) {
        r.add_term(m, c * f);
    }
    return r;
}

Symbol operator*(const Symbol &a, const Symbol &b)
{
    a.check_compatible(b);
    Symbol r(a.n_, std::min(a.order_, b.order_));
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term(ma + mb, ca * cb);
        }
    }
    return r;
}

std::string Symbol::to_string() const
{
    std::vector<std::pair<std::string, GaussRational>> terms;
    for (const auto &[fm, c] : terms_) {
        const std::string fiber = fm.to_string(n_);
        for (const auto &[jm, v] : c.terms()) {
            std::string name = jm.to_string(n_);
            if (name == "1") {
                name = fiber;
            } else if (fiber != "1") {
                name += "*" + fiber;
            }
            terms.emplace_back(name, v);
        }
    }
    return format_term_sum(terms);
}

} // namespace sepstar
