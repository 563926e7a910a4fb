#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quiverdt {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace quiverdt
