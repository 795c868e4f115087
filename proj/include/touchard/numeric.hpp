#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>

namespace touchard {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// 50 decimal digits: enough headroom for the deep-cancellation coefficient
// sums (the worst observed intermediate blow-up is ~1e27 at order 30).
using HighReal = boost::multiprecision::cpp_bin_float_50;

template <class R>
inline R pi_v() {
  static const R value = R(4) * atan(R(1));
  return value;
}

template <>
inline double pi_v<double>() {
  return 3.14159265358979323846;
}

template <class R>
inline R eps_v() {
  return std::numeric_limits<R>::epsilon();
}

inline double to_double(double x) { return x; }
inline double to_double(const HighReal& x) { return x.convert_to<double>(); }

inline HighReal to_real(const BigRat& q, const HighReal&) {
  return HighReal(boost::multiprecision::numerator(q)) /
         HighReal(boost::multiprecision::denominator(q));
}

inline double to_real(const BigRat& q, const double&) {
  return to_real(q, HighReal()).convert_to<double>();
}

}  // namespace touchard
