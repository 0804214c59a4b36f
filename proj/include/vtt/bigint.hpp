#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vtt {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned exponent) {
  BigInt x = 1;
  x <<= exponent;
  return x;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace vtt
