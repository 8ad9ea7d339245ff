#ifndef SEPSTAR_POTENTIALS_HPP
#define SEPSTAR_POTENTIALS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <sepstar/jet.hpp>

namespace sepstar
{

// "flat" (sum z^k zbar^k), "fubini-study" (log(1 + sum z^k zbar^k)) or
// "hyperbolic" (-log(1 - sum z^k zbar^k)), expanded to total degree `order`.
Jet builtin_potential(std::string_view name, int n, int order);
bool is_builtin_potential(std::string_view name);

// Deterministic generator shared by the verification suite and the tests.
using Rng = std::mt19937_64;

// Polynomial of total degree <= max_degree with small Gaussian-integer
// coefficients (parts in -3..3, about half the monomials zero), stored as a
// jet of the given order.
Jet random_test_polynomial(int n, int max_degree, int order, Rng &rng);

// sum z^k zbar^k plus a real degree-<=4 perturbation with coefficients in
// {-1, 0, 1}/4 that contains at least one monomial with both z and zbar
// factors in each degree 2, 3 and 4. The flat part keeps the metric at the
// origin diagonally dominant for n <= 3.
Jet random_potential(int n, int order, std::uint64_t seed);

} // namespace sepstar

#endif
