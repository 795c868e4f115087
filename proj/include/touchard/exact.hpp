#pragma once

#include <stdexcept>
#include <utility>

#include "touchard/complex.hpp"
#include "touchard/errors.hpp"
#include "touchard/log_complex.hpp"
#include "touchard/stirling.hpp"

namespace touchard {

// Complex number with exact rational parts. All arithmetic is exact.
struct ExactComplexRational {
  BigRat re;
  BigRat im;

  ExactComplexRational() : re(0), im(0) {}
  ExactComplexRational(BigRat r) : re(std::move(r)), im(0) {}
  ExactComplexRational(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplexRational(long r, long i = 0) : re(r), im(i) {}

  ExactComplexRational& operator+=(const ExactComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplexRational& operator*=(const ExactComplexRational& o) {
    BigRat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
};

inline ExactComplexRational operator+(ExactComplexRational a, const ExactComplexRational& b) { return a += b; }
inline ExactComplexRational operator*(ExactComplexRational a, const ExactComplexRational& b) { return a *= b; }
inline ExactComplexRational operator*(const BigRat& s, ExactComplexRational a) {
  a.re *= s;
  a.im *= s;
  return a;
}
inline bool operator==(const ExactComplexRational& a, const ExactComplexRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const ExactComplexRational& a, const ExactComplexRational& b) { return !(a == b); }
inline ExactComplexRational conj(ExactComplexRational a) {
  a.im = -a.im;
  return a;
}

inline ExactComplexRational pow_int(const ExactComplexRational& base, int e) {
  ExactComplexRational acc(BigRat(1));
  ExactComplexRational b = base;
  int n = e;
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

template <class R>
Cplx<R> to_cplx(const ExactComplexRational& z, const R& tag) {
  return {to_real(z.re, tag), to_real(z.im, tag)};
}

// T_n(z) = sum_k S(n,k) z^k, evaluated exactly.
inline ExactComplexRational touchard_exact(int n, const ExactComplexRational& z,
                                           const StirlingTable& table) {
  if (n < 0) throw std::invalid_argument("touchard_exact: n must be >= 0");
  ExactComplexRational acc;
  ExactComplexRational zp(BigRat(1));
  const auto& row = table.row(n);
  for (int k = 0; k <= n; ++k) {
    acc += BigRat(row[static_cast<std::size_t>(k)]) * zp;
    zp *= z;
  }
  return acc;
}

inline ExactComplexRational touchard_exact(int n, const ExactComplexRational& z) {
  return touchard_exact(n, z, StirlingTable(n));
}

// Scaled evaluation T^_n(z) = T_n(z)/n! accumulated in high precision,
// rounded exactly once on conversion to LogComplex.
template <class R>
ScaledValue<R> touchard_scaled_tagged(int n, const Cplx<R>& z, const StirlingTable& table) {
  if (n < 0) throw std::invalid_argument("touchard_scaled: n must be >= 0");
  CplxH zh(HighReal(0), HighReal(0));
  zh.re = HighReal(z.re);
  zh.im = HighReal(z.im);
  const auto& row = table.row(n);
  // accumulate S(n,k)/n! * z^k with the rational weights S(n,k)/n! exact
  BigInt fact = factorial_big(n);
  CplxH acc(HighReal(0));
  CplxH zp(HighReal(1));
  for (int k = 0; k <= n; ++k) {
    HighReal w = to_real(BigRat(row[static_cast<std::size_t>(k)], fact), HighReal());
    acc += w * zp;
    zp *= zh;
  }
  ScaledValue<R> out;
  out.scale_removed = ScaleRemoved::factorial_n;
  if (acc == CplxH(HighReal(0))) {
    out.value = LogComplex<R>::zero();
    return out;
  }
  LogComplexH lc = LogComplexH::from_cplx(acc);
  out.value = LogComplex<R>(R(to_double(lc.log_mag)), R(to_double(lc.phase)));
  return out;
}

inline ScaledValue<double> touchard_scaled(int n, const CplxD& z, const StirlingTable& table) {
  return touchard_scaled_tagged<double>(n, z, table);
}

inline ScaledValue<double> touchard_scaled(int n, const CplxD& z) {
  return touchard_scaled(n, z, StirlingTable(n));
}

// High-precision variant (keeps all digits of the accumulation).
inline LogComplexH touchard_scaled_hp(int n, const CplxH& z, const StirlingTable& table) {
  const auto& row = table.row(n);
  BigInt fact = factorial_big(n);
  CplxH acc(HighReal(0));
  CplxH zp(HighReal(1));
  for (int k = 0; k <= n; ++k) {
    HighReal w = to_real(BigRat(row[static_cast<std::size_t>(k)], fact), HighReal());
    acc += w * zp;
    zp *= z;
  }
  return LogComplexH::from_cplx(acc);
}

// Oracle: T_{n+1}(z) == z * sum_k C(n,k) T_k(z), checked exactly.
inline bool touchard_recurrence_check(int n, const ExactComplexRational& z) {
  StirlingTable table(n + 1);
  BinomialTable binom(n);
  ExactComplexRational rhs;
  for (int k = 0; k <= n; ++k)
    rhs += BigRat(binom(n, k)) * touchard_exact(k, z, table);
  rhs *= z;
  return rhs == touchard_exact(n + 1, z, table);
}

// z^n * (partial sum of the 1/z expansion of z^{-n} T_n(z)).
// The closed-form coefficients are S(n,n-1), S(n,n-2), S(n,n-3); the series
// is capped at 4 terms (through 1/z^3).
template <class R>
Cplx<R> large_z_expansion_tagged(int n, const Cplx<R>& z, int terms) {
  if (n < 0) throw std::invalid_argument("large_z_expansion: n must be >= 0");
  if (terms < 1 || terms > 4) throw std::invalid_argument("large_z_expansion: terms must be in 1..4");
  if (z == Cplx<R>(R(0))) throw DomainError("large_z_expansion: z must be nonzero");
  const R nn = R(n);
  Cplx<R> inv = R(1) / z;
  Cplx<R> acc(R(1));
  if (terms >= 2) acc += (nn * (nn - R(1)) / R(2)) * inv;
  if (terms >= 3)
    acc += ((R(3) * nn - R(5)) / R(4)) * (nn * (nn - R(1)) * (nn - R(2)) / R(6)) * (inv * inv);
  if (terms >= 4)
    acc += (nn * (nn - R(1)) * (nn - R(2)) * (nn - R(2)) * (nn - R(3)) * (nn - R(3)) / R(48)) *
           (inv * inv * inv);
  return pow_int(z, n) * acc;
}

inline CplxD large_z_expansion(int n, const CplxD& z, int terms) {
  return large_z_expansion_tagged<double>(n, z, terms);
}

}  // namespace touchard
