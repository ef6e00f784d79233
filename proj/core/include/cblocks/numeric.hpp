#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cblocks {

// Vector-bundle ranks and F-curve degrees grow combinatorially with n and
// the level, so all of them live in arbitrary-precision integers; divisor
// coordinates are exact rationals.  No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// FNV-1a over a byte string; used for stable class digests in scan output.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cblocks
