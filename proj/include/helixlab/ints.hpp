#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace helixlab {

// All dimension arithmetic is exact. Cohomology ranks on Q_n blow past
// 2^63 already for modest twists, so everything user-visible is a cpp_int.
using Int = boost::multiprecision::cpp_int;

// C(n, k) for possibly-negative upper index is NOT wanted anywhere in the
// engine; every formula has been arranged so the upper argument is >= 0
// when the value is nonzero. Negative n or k yields 0.
inline Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // product of i consecutive integers is divisible by i!
  }
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

// Twists are bounded so table scans stay finite; the cap is forgiving
// enough for every documented use (acceptance sweeps stay within +-50).
inline constexpr long long kTwistCap = 1'000'000;

inline void check_twist(long long t, const char* what) {
  if (t > kTwistCap || t < -kTwistCap)
    throw std::invalid_argument(std::string(what) + ": twist out of range");
}

}  // namespace helixlab
