#include <sepstar/multi_index.hpp>

#include <stdexcept>

namespace sepstar
{

namespace
{

void check_index(int k)
{
    if (k < 0 || k >= kMaxDim) {
        throw std::out_of_range("coordinate index " + std::to_string(k) + " outside supported range");
    }
}

} // namespace

MultiIndex MultiIndex::from_lists(std::span<const int> holo, std::span<const int> antiholo)
{
    MultiIndex m;
    for (int k : holo) {
        check_index(k);
        m.increment(Variable::z(k));
    }
    for (int l : antiholo) {
        check_index(l);
        m.increment(Variable::zbar(l));
    }
    return m;
}

MultiIndex MultiIndex::unit(Variable v)
{
    check_index(v.index);
    MultiIndex m;
    m.increment(v);
    return m;
}

int MultiIndex::holo_degree() const
{
    int d = 0;
    for (auto e : holo_) {
        d += e;
    }
    return d;
}

int MultiIndex::antiholo_degree() const { return degree_ - holo_degree(); }

void MultiIndex::set_exponent(Variable v, int e)
{
    if (e < 0 || e > 255) {
        throw std::out_of_range("exponent out of range");
    }
    auto &slot = v.conjugate ? antiholo_[v.index] : holo_[v.index];
    degree_ += e - slot;
    slot = static_cast<std::uint8_t>(e);
}

MultiIndex operator+(const MultiIndex &a, const MultiIndex &b)
{
    MultiIndex r;
    for (int k = 0; k < kMaxDim; ++k) {
        r.holo_[k] = static_cast<std::uint8_t>(a.holo_[k] + b.holo_[k]);
        r.antiholo_[k] = static_cast<std::uint8_t>(a.antiholo_[k] + b.antiholo_[k]);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

bool MultiIndex::divisible_by(const MultiIndex &b) const
{
    for (int k = 0; k < kMaxDim; ++k) {
        if (holo_[k] < b.holo_[k] || antiholo_[k] < b.antiholo_[k]) {
            return false;
        }
    }
    return true;
}

MultiIndex operator-(const MultiIndex &a, const MultiIndex &b)
{
    if (!a.divisible_by(b)) {
        throw std::domain_error("multi-index subtraction below zero");
    }
    MultiIndex r;
    for (int k = 0; k < kMaxDim; ++k) {
        r.holo_[k] = static_cast<std::uint8_t>(a.holo_[k] - b.holo_[k]);
        r.antiholo_[k] = static_cast<std::uint8_t>(a.antiholo_[k] - b.antiholo_[k]);
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
}

std::vector<int> MultiIndex::holo_list() const
{
    std::vector<int> out;
    for (int k = 0; k < kMaxDim; ++k) {
        out.insert(out.end(), holo_[k], k);
    }
    return out;
}

std::vector<int> MultiIndex::antiholo_list() const
{
    std::vector<int> out;
    for (int k = 0; k < kMaxDim; ++k) {
        out.insert(out.end(), antiholo_[k], k);
    }
    return out;
}

namespace
{

void append_power(std::string &s, const std::string &name, int k, int e)
{
    if (e == 0) {
        return;
    }
    if (!s.empty()) {
        s += '*';
    }
    s += name + std::to_string(k + 1);
    if (e > 1) {
        s += '^' + std::to_string(e);
    }
}

} // namespace

std::string MultiIndex::to_string(int n) const
{
    std::string s;
    for (int k = 0; k < n; ++k) {
        append_power(s, "z", k, holo_[k]);
    }
    for (int k = 0; k < n; ++k) {
        append_power(s, "zbar", k, antiholo_[k]);
    }
    return s.empty() ? "1" : s;
}

std::size_t MultiIndex::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (int k = 0; k < kMaxDim; ++k) {
        h = (h ^ holo_[k]) * 1099511628211ull;
        h = (h ^ antiholo_[k]) * 1099511628211ull;
    }
    return h;
}

std::vector<std::vector<int>> multisets(int n, int size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size, 0);
    if (size == 0) {
        out.push_back(cur);
        return out;
    }
    if (n <= 0) {
        return out;
    }
    while (true) {
        out.push_back(cur);
        int pos = size - 1;
        while (pos >= 0 && cur[pos] == n - 1) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++cur[pos];
        for (int j = pos + 1; j < size; ++j) {
            cur[j] = cur[pos];
        }
    }
    return out;
}

long multiplicity_factorial(std::span<const int> sorted)
{
    long result = 1;
    long run = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
        result *= run;
    }
    return result;
}

} // namespace sepstar
