#include <sepstar/geometry.hpp>

#include <algorithm>
#include <functional>

#include <sepstar/errors.hpp>

namespace sepstar
{

namespace
{

using Matrix = std::vector<GaussRational>;

Matrix invert_constant(const Matrix &a, int n)
{
    Matrix m = a;
    Matrix inv(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        inv[i * n + i] = GaussRational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!m[row * n + col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) {
            throw degenerate_metric();
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(m[pivot * n + j], m[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        }
        const GaussRational p = GaussRational(1) / m[col * n + col];
        for (int j = 0; j < n; ++j) {
            m[col * n + j] *= p;
            inv[col * n + j] *= p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row * n + col].is_zero()) {
                continue;
            }
            const GaussRational f = m[row * n + col];
            for (int j = 0; j < n; ++j) {
                m[row * n + j] -= f * m[col * n + j];
                inv[row * n + j] -= f * inv[col * n + j];
            }
        }
    }
    return inv;
}

std::vector<Jet> mat_mul(const std::vector<Jet> &a, const std::vector<Jet> &b, int n)
{
    std::vector<Jet> c;
    c.reserve(a.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Jet s = a[i * n] * b[j];
            for (int k = 1; k < n; ++k) {
                s += a[i * n + k] * b[k * n + j];
            }
            c.push_back(std::move(s));
        }
    }
    return c;
}

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// Tuples over {0..n-1} of length r are encoded in base n, first index most
// significant.
std::vector<int> decode_tuple(int code, int n, int r)
{
    std::vector<int> t(static_cast<std::size_t>(r));
    for (int i = r - 1; i >= 0; --i) {
        t[i] = code % n;
        code /= n;
    }
    return t;
}

int power(int n, int r)
{
    int p = 1;
    for (int i = 0; i < r; ++i) {
        p *= n;
    }
    return p;
}

// Lowers every slot of an r-index tensor given by `upper` (indexed by tuple
// code), one slot at a time: out[.., a, ..] = sum_m lower(a, m) in[.., m, ..].
std::vector<Jet> lower_all_slots(std::vector<Jet> tensor, int n, int r, const std::function<const Jet &(int, int)> &lower)
{
    for (int slot = 0; slot < r; ++slot) {
        const int stride = power(n, r - 1 - slot);
        std::vector<Jet> next;
        next.reserve(tensor.size());
        for (int code = 0; code < static_cast<int>(tensor.size()); ++code) {
            const int a = (code / stride) % n;
            const int base = code - a * stride;
            Jet s = lower(a, 0) * tensor[base];
            for (int m = 1; m < n; ++m) {
                s += lower(a, m) * tensor[base + m * stride];
            }
            next.push_back(std::move(s));
        }
        tensor = std::move(next);
    }
    return tensor;
}

FiberIndex fiber_of(const std::vector<int> &eta, const std::vector<int> &eta_bar)
{
    return FiberIndex::from_list(FiberKind::eta, eta) + FiberIndex::from_list(FiberKind::eta_bar, eta_bar);
}

} // namespace

std::vector<Jet> invert_metric(const std::vector<Jet> &g_low, int n)
{
    Matrix a;
    int target = g_low.front().order();
    for (const Jet &j : g_low) {
        a.push_back(j.constant_term());
        target = std::min(target, j.order());
    }
    const Matrix a_inv = invert_constant(a, n);
    std::vector<Jet> h;
    for (const auto &c : a_inv) {
        h.push_back(Jet::constant(n, 0, c));
    }
    int valid = 0;
    while (valid < target) {
        const int next = std::min(2 * valid + 1, target);
        std::vector<Jet> g_t;
        for (auto &j : h) {
            j = j.with_order(next);
        }
        for (const Jet &j : g_low) {
            g_t.push_back(j.truncated(next));
        }
        std::vector<Jet> correction = mat_mul(g_t, h, n);
        for (auto &j : correction) {
            j = -j;
        }
        for (int i = 0; i < n; ++i) {
            correction[i * n + i] += Jet::constant(n, next, GaussRational(2));
        }
        h = mat_mul(h, correction, n);
        valid = next;
    }
    for (auto &j : h) {
        j = j.with_order(target);
    }
    return h;
}

GeometryCache::GeometryCache(Jet phi) : phi_(std::move(phi)), n_(phi_.dim())
{
    if (phi_.order() < 2) {
        throw order_exhausted("potential must be known to order >= 2");
    }
    for (int k = 0; k < n_; ++k) {
        for (int l = 0; l < n_; ++l) {
            g_low_.push_back(potential_derivative(MultiIndex::from_lists({k}, {l})));
        }
    }
    invert_metric();
}

void GeometryCache::invert_metric() { g_up_ = sepstar::invert_metric(g_low_, n_); }

const Jet &GeometryCache::potential_derivative(const MultiIndex &idx) const
{
    if (idx.degree() == 0) {
        return phi_;
    }
    if (idx.degree() > phi_.order()) {
        throw order_exhausted("derivative of order " + std::to_string(idx.degree())
                              + " exceeds the potential's valid order " + std::to_string(phi_.order()));
    }
    {
        std::lock_guard lock(mutex_);
        if (auto it = derivatives_.find(idx); it != derivatives_.end()) {
            return it->second;
        }
    }
    Variable v{};
    for (int k = n_ - 1; k >= 0; --k) {
        if (idx.antiholo(k) > 0) {
            v = Variable::zbar(k);
            break;
        }
    }
    if (idx.antiholo_degree() == 0) {
        for (int k = n_ - 1; k >= 0; --k) {
            if (idx.holo(k) > 0) {
                v = Variable::z(k);
                break;
            }
        }
    }
    MultiIndex parent = idx;
    parent.decrement(v);
    Jet d = potential_derivative(parent).partial(v);
    std::lock_guard lock(mutex_);
    return derivatives_.emplace(idx, std::move(d)).first->second;
}

Jet GeometryCache::contravariant_apply(const Jet &f, int index, Orientation orientation) const
{
    Jet out(n_, std::min(f.order() - 1, metric_order()));
    for (int s = 0; s < n_; ++s) {
        if (orientation == Orientation::antiholo) {
            out += g_up(index, s) * f.partial(Variable::z(s));
        } else {
            out += g_up(s, index) * f.partial(Variable::zbar(s));
        }
    }
    return out;
}

Jet GeometryCache::dbar_lower_apply(const Jet &f, int l) const
{
    Jet out = f.partial(Variable::zbar(l));
    for (int q = 0; q < n_; ++q) {
        out -= potential_derivative(MultiIndex::from_lists({}, {l, q}))
               * contravariant_apply(f, q, Orientation::antiholo);
    }
    return out;
}

const Jet &GeometryCache::christoffel_bar(int t, int l, int q) const
{
    const auto key = std::make_tuple(t, std::min(l, q), std::max(l, q));
    {
        std::lock_guard lock(mutex_);
        if (auto it = christoffel_bar_.find(key); it != christoffel_bar_.end()) {
            return it->second;
        }
    }
    Jet sum(n_, metric_order());
    for (int s = 0; s < n_; ++s) {
        sum += g_up(t, s) * potential_derivative(MultiIndex::from_lists({s}, {l, q}));
    }
    std::lock_guard lock(mutex_);
    return christoffel_bar_.emplace(key, std::move(sum)).first->second;
}

const Jet &GeometryCache::christoffel(int t, int k, int p) const
{
    const auto key = std::make_tuple(t, std::min(k, p), std::max(k, p));
    {
        std::lock_guard lock(mutex_);
        if (auto it = christoffel_.find(key); it != christoffel_.end()) {
            return it->second;
        }
    }
    Jet sum(n_, metric_order());
    for (int s = 0; s < n_; ++s) {
        sum += g_up(s, t) * potential_derivative(MultiIndex::from_lists({k, p}, {s}));
    }
    std::lock_guard lock(mutex_);
    return christoffel_.emplace(key, std::move(sum)).first->second;
}

const Jet &GeometryCache::curvature_low(int k, int p, int l, int q) const
{
    const auto key = std::make_tuple(std::min(k, p), std::max(k, p), std::min(l, q), std::max(l, q));
    {
        std::lock_guard lock(mutex_);
        if (auto it = curvature_low_.find(key); it != curvature_low_.end()) {
            return it->second;
        }
    }
    if (phi_.order() < 4) {
        throw order_exhausted("curvature needs the potential to order >= 4");
    }
    Jet r = -potential_derivative(MultiIndex::from_lists({k, p}, {l, q}));
    for (int a = 0; a < n_; ++a) {
        const Jet &left = potential_derivative(MultiIndex::from_lists({k, p}, {a}));
        if (left.is_zero()) {
            continue;
        }
        for (int m = 0; m < n_; ++m) {
            r += left * g_up(a, m) * potential_derivative(MultiIndex::from_lists({m}, {l, q}));
        }
    }
    std::lock_guard lock(mutex_);
    return curvature_low_.emplace(key, std::move(r)).first->second;
}

const Jet &GeometryCache::dbar_iterated_phi(const std::vector<int> &uppers, int l, int q) const
{
    if (uppers.empty()) {
        return potential_derivative(MultiIndex::from_lists({}, {l, q}));
    }
    const upper_key key{sorted(uppers), std::min(l, q), std::max(l, q)};
    {
        std::lock_guard lock(mutex_);
        if (auto it = dbar_phi_.find(key); it != dbar_phi_.end()) {
            return it->second;
        }
    }
    const auto &u = std::get<0>(key);
    const std::vector<int> rest(u.begin() + 1, u.end());
    Jet v = contravariant_apply(dbar_iterated_phi(rest, l, q), u.front(), Orientation::antiholo);
    std::lock_guard lock(mutex_);
    return dbar_phi_.emplace(key, std::move(v)).first->second;
}

const Jet &GeometryCache::d_iterated_phi(const std::vector<int> &uppers, int k, int p) const
{
    if (uppers.empty()) {
        return potential_derivative(MultiIndex::from_lists({k, p}, {}));
    }
    const upper_key key{sorted(uppers), std::min(k, p), std::max(k, p)};
    {
        std::lock_guard lock(mutex_);
        if (auto it = d_phi_.find(key); it != d_phi_.end()) {
            return it->second;
        }
    }
    const auto &u = std::get<0>(key);
    const std::vector<int> rest(u.begin() + 1, u.end());
    Jet v = contravariant_apply(d_iterated_phi(rest, k, p), u.front(), Orientation::holo);
    std::lock_guard lock(mutex_);
    return d_phi_.emplace(key, std::move(v)).first->second;
}

const Jet &GeometryCache::memo_negated(std::map<upper_key, Jet> &memo, const Jet &source, upper_key key) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
    }
    Jet v = -source;
    std::lock_guard lock(mutex_);
    return memo.emplace(std::move(key), std::move(v)).first->second;
}

const Jet &GeometryCache::curvature_upper(const std::vector<int> &uppers, int l, int q) const
{
    if (uppers.size() < 2) {
        throw std::invalid_argument("curvature_upper needs at least two upper indices");
    }
    return memo_negated(curvature_up_, dbar_iterated_phi(uppers, l, q), {sorted(uppers), std::min(l, q), std::max(l, q)});
}

const Jet &GeometryCache::curvature_upper_holo(const std::vector<int> &uppers, int k, int p) const
{
    if (uppers.size() < 2) {
        throw std::invalid_argument("curvature_upper_holo needs at least two upper indices");
    }
    return memo_negated(curvature_up_holo_, d_iterated_phi(uppers, k, p), {sorted(uppers), std::min(k, p), std::max(k, p)});
}

namespace
{

Jet trim(const Jet &j, std::optional<int> target) { return target ? j.truncated(*target) : j; }

// All components of R_{k_1..k_r lbar qbar} for fixed (l, q), by tuple code.
std::vector<Jet> lowered_r_path(const GeometryCache &g, int r, int l, int q, std::optional<int> target)
{
    const int n = g.dim();
    std::vector<Jet> upper;
    for (int code = 0; code < power(n, r); ++code) {
        upper.push_back(trim(g.curvature_upper(decode_tuple(code, n, r), l, q), target));
    }
    return lower_all_slots(std::move(upper), n, r, [&g](int k, int m) -> const Jet & { return g.g_low(k, m); });
}

// All components of R_{k p lbar_1..lbar_s} for fixed (k, p), by tuple code.
std::vector<Jet> lowered_s_path(const GeometryCache &g, int s, int k, int p, std::optional<int> target)
{
    const int n = g.dim();
    std::vector<Jet> upper;
    for (int code = 0; code < power(n, s); ++code) {
        upper.push_back(trim(g.curvature_upper_holo(decode_tuple(code, n, s), k, p), target));
    }
    return lower_all_slots(std::move(upper), n, s, [&g](int l, int m) -> const Jet & { return g.g_low(m, l); });
}

int encode_tuple(const std::vector<int> &t, int n)
{
    int code = 0;
    for (int i : t) {
        code = code * n + i;
    }
    return code;
}

void check_index_list(const std::vector<int> &idx, int n)
{
    for (int i : idx) {
        if (i < 0 || i >= n) {
            throw std::out_of_range("tensor index outside chart dimension");
        }
    }
}

} // namespace

Jet GeometryCache::canonical_tensor_r(const std::vector<int> &holo, int l, int q) const
{
    if (holo.size() < 2) {
        throw std::invalid_argument("canonical tensor needs r >= 2");
    }
    check_index_list(holo, n_);
    const int r = static_cast<int>(holo.size());
    return lowered_r_path(*this, r, l, q, std::nullopt)[encode_tuple(holo, n_)];
}

Jet GeometryCache::canonical_tensor_s(int k, int p, const std::vector<int> &antiholo) const
{
    if (antiholo.size() < 2) {
        throw std::invalid_argument("canonical tensor needs s >= 2");
    }
    check_index_list(antiholo, n_);
    const int s = static_cast<int>(antiholo.size());
    return lowered_s_path(*this, s, k, p, std::nullopt)[encode_tuple(antiholo, n_)];
}

Symbol gamma_symbol(const GeometryCache &geom)
{
    const int n = geom.dim();
    Symbol gamma(n, geom.metric_order());
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            gamma.add_term(fiber_of({p}, {q}), geom.g_low(p, q));
        }
    }
    return gamma;
}

namespace
{

Symbol rho_r_path(const GeometryCache &geom, int r, std::optional<int> target)
{
    const int n = geom.dim();
    Symbol rho(n, geom.metric_order());
    for (int l = 0; l < n; ++l) {
        for (int q = 0; q < n; ++q) {
            const auto tensor = lowered_r_path(geom, r, l, q, target);
            for (int code = 0; code < static_cast<int>(tensor.size()); ++code) {
                rho.add_term(fiber_of(decode_tuple(code, n, r), {l, q}), tensor[code]);
            }
        }
    }
    return rho;
}

Symbol rho_s_path(const GeometryCache &geom, int s, std::optional<int> target)
{
    const int n = geom.dim();
    Symbol rho(n, geom.metric_order());
    for (int k = 0; k < n; ++k) {
        for (int p = 0; p < n; ++p) {
            const auto tensor = lowered_s_path(geom, s, k, p, target);
            for (int code = 0; code < static_cast<int>(tensor.size()); ++code) {
                rho.add_term(fiber_of({k, p}, decode_tuple(code, n, s)), tensor[code]);
            }
        }
    }
    return rho;
}

} // namespace

Symbol rho_symbol(const GeometryCache &geom, int r, int s, std::optional<int> target_order)
{
    if (r < 2 || s < 2) {
        throw std::invalid_argument("rho_{r,s} needs r, s >= 2");
    }
    if (s == 2) {
        return rho_r_path(geom, r, target_order);
    }
    if (r == 2) {
        return rho_s_path(geom, s, target_order);
    }
    throw std::invalid_argument("rho_{r,s} with r, s > 2 is not constructed");
}

Symbol rho_symbol_s_path(const GeometryCache &geom, int r, int s, std::optional<int> target_order)
{
    if (r != 2 || s < 2) {
        throw std::invalid_argument("the s-path construction needs r == 2 and s >= 2");
    }
    return rho_s_path(geom, s, target_order);
}

Symbol rho_tilde_symbol(const GeometryCache &geom, std::optional<int> target_order)
{
    const int n = geom.dim();
    // left[k1 k2][q1 q2] = R_{k1 k2 q1bar q2bar}, then raise q1, q2 with g^{qbar p}.
    std::vector<Jet> raised;
    for (int k1 = 0; k1 < n; ++k1) {
        for (int k2 = 0; k2 < n; ++k2) {
            std::vector<Jet> block;
            for (int code = 0; code < n * n; ++code) {
                block.push_back(trim(geom.curvature_low(k1, k2, code / n, code % n), target_order));
            }
            block = lower_all_slots(std::move(block), n, 2, [&geom](int p, int q) -> const Jet & { return geom.g_up(q, p); });
            raised.insert(raised.end(), block.begin(), block.end());
        }
    }
    Symbol rho(n, geom.metric_order());
    for (int k1 = 0; k1 < n; ++k1) {
        for (int k2 = 0; k2 < n; ++k2) {
            for (int l1 = 0; l1 < n; ++l1) {
                for (int l2 = 0; l2 < n; ++l2) {
                    Jet sum(n, geom.metric_order());
                    for (int p1 = 0; p1 < n; ++p1) {
                        for (int p2 = 0; p2 < n; ++p2) {
                            sum += raised[(k1 * n + k2) * n * n + p1 * n + p2]
                                   * trim(geom.curvature_low(p1, p2, l1, l2), target_order);
                        }
                    }
                    rho.add_term(fiber_of({k1, k2}, {l1, l2}), sum);
                }
            }
        }
    }
    return rho;
}

Symbol symmetrized_covariant_derivative(const GeometryCache &geom, const Symbol &s, Orientation orientation)
{
    const int n = geom.dim();
    const bool bar = orientation == Orientation::antiholo;
    const FiberKind kind = bar ? FiberKind::eta_bar : FiberKind::eta;
    Symbol out(n, std::min(s.order() - 1, geom.metric_order()));
    for (int l = 0; l < n; ++l) {
        const Variable v = bar ? Variable::zbar(l) : Variable::z(l);
        const Symbol ds = s.map_coefficients([v](const Jet &c) { return c.partial(v); });
        out += ds * Symbol::monomial(n, ds.order(), FiberIndex::unit({kind, l}));
    }
    for (int t = 0; t < n; ++t) {
        const Symbol dfiber = s.fiber_partial({kind, t});
        if (dfiber.is_zero()) {
            continue;
        }
        Symbol connection(n, geom.metric_order());
        for (int l = 0; l < n; ++l) {
            for (int q = 0; q < n; ++q) {
                const Jet &gamma = bar ? geom.christoffel_bar(t, l, q) : geom.christoffel(t, l, q);
                connection.add_term(FiberIndex::from_list(kind, {l, q}), gamma);
            }
        }
        out -= connection * dfiber;
    }
    return out;
}

} // namespace sepstar
