#pragma once

#include "minrep/bignum.hpp"

#include <cstdint>

namespace minrep {

/// Iterated logarithm base 3, floor convention: the largest b with
/// 3^^b <= n (3^^0 = 1, 3^^1 = 3, 3^^2 = 27, 3^^3 = 3^27). Equivalently the
/// number of times log3 can be applied while the value stays >= 1.
/// Exact integer comparisons against the tower, no floating point.
unsigned logstar3(std::uint64_t n);
unsigned logstar3(const BigNat& n);

/// Smallest natural a with a^a >= n.
unsigned obs_a(std::uint64_t n);

/// Trial division; 1 is not prime.
bool is_prime(std::uint64_t n);

/// True iff n = 4^j for some j >= 1.
bool is_power_of_four(std::uint64_t n);

}  // namespace minrep
