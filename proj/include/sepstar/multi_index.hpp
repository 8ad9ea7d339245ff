#ifndef SEPSTAR_MULTI_INDEX_HPP
#define SEPSTAR_MULTI_INDEX_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sepstar
{

// Largest supported chart dimension n.
inline constexpr int kMaxDim = 8;

// A chart coordinate: z^k (conjugate == false) or zbar^k, with 0-based k.
struct Variable {
    int index = 0;
    bool conjugate = false;

    static Variable z(int k) { return {k, false}; }
    static Variable zbar(int k) { return {k, true}; }
    friend bool operator==(const Variable &, const Variable &) = default;
};

// Pair of multisets over {0..n-1}, stored as exponent counts. Doubles as the
// monomial z^holo zbar^antiholo and as a derivative index. Ordered graded
// lexicographically: lower total degree first, then larger leading exponents
// first (z1^2 < z1*zbar1 < zbar1^2).
class MultiIndex
{
public:
    MultiIndex() = default;

    // Index lists are multisets; repeated entries raise the exponent.
    static MultiIndex from_lists(std::span<const int> holo, std::span<const int> antiholo);
    static MultiIndex from_lists(std::initializer_list<int> holo, std::initializer_list<int> antiholo)
    {
        return from_lists(std::span<const int>(holo.begin(), holo.size()),
                          std::span<const int>(antiholo.begin(), antiholo.size()));
    }
    static MultiIndex unit(Variable v);

    int holo(int k) const { return holo_[k]; }
    int antiholo(int k) const { return antiholo_[k]; }
    int exponent(Variable v) const { return v.conjugate ? antiholo_[v.index] : holo_[v.index]; }
    int degree() const { return degree_; }
    int holo_degree() const;
    int antiholo_degree() const;

    void set_exponent(Variable v, int e);
    // Exponent arithmetic; decrement requires a positive exponent.
    void increment(Variable v) { set_exponent(v, exponent(v) + 1); }
    void decrement(Variable v) { set_exponent(v, exponent(v) - 1); }

    friend MultiIndex operator+(const MultiIndex &a, const MultiIndex &b);
    // True when every exponent of b is <= that of a.
    bool divisible_by(const MultiIndex &b) const;
    friend MultiIndex operator-(const MultiIndex &a, const MultiIndex &b);

    // Expanded index lists, e.g. z1^2 zbar2 -> holo {0,0}, antiholo {1}.
    std::vector<int> holo_list() const;
    std::vector<int> antiholo_list() const;

    // "z1^2*zbar2", "1" for the empty index.
    std::string to_string(int n) const;

    friend bool operator==(const MultiIndex &a, const MultiIndex &b)
    {
        return a.holo_ == b.holo_ && a.antiholo_ == b.antiholo_;
    }
    friend std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b)
    {
        if (auto c = a.degree_ <=> b.degree_; c != 0) {
            return c;
        }
        if (auto c = b.holo_ <=> a.holo_; c != 0) {
            return c;
        }
        return b.antiholo_ <=> a.antiholo_;
    }

    std::size_t hash() const;

private:
    std::array<std::uint8_t, kMaxDim> holo_{};
    std::array<std::uint8_t, kMaxDim> antiholo_{};
    int degree_ = 0;
};

// All multisets of size `size` over {0..n-1}, as sorted index lists, in
// lexicographic order.
std::vector<std::vector<int>> multisets(int n, int size);

// Product of factorials of the multiplicities of a sorted index list.
long multiplicity_factorial(std::span<const int> sorted);

} // namespace sepstar

template <>
struct std::hash<sepstar::MultiIndex> {
    std::size_t operator()(const sepstar::MultiIndex &m) const noexcept { return m.hash(); }
};

#endif
