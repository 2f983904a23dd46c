#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace minrep {

using BigNat = boost::multiprecision::cpp_int;

/// Default decimal-digit budget for exact values (tetration guard).
inline constexpr std::size_t kDefaultDigitCap = 1'000'000;

/// Upper estimate of the decimal digit count of x (exact to within one).
double decimal_digits(const BigNat& x);

inline std::string to_string(const BigNat& x) { return x.str(); }

}  // namespace minrep
