#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace slmn {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Fixed-precision float for the numeric evaluation path (g, g*, chi samples).
using Dec50 = boost::multiprecision::cpp_bin_float_50;

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline Dec50 to_dec50(const BigRat& r) {
  return Dec50(rat_num(r)) / Dec50(rat_den(r));
}

// cpp_rational rejects negative denominators; normalize the sign here.
inline BigRat frac(long num, long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRat(num, den);
}

}  // namespace slmn
