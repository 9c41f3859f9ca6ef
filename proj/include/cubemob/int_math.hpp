#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cubemob {

// All counts in this library are exact; products of factorials and powers of
// two outgrow 64 bits well inside the supported ranges.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt pow2(int e) {
  BigInt r = 1;
  return r << e;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

// Exact division; aborts the computation if the divisor does not divide.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("exact_div: non-integral quotient");
  return q;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cubemob
