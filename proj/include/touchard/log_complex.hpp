#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "touchard/complex.hpp"

namespace touchard {

// Complex value stored as (log-magnitude, phase): value = exp(log_mag) * e^{i*phase}.
// Survives Gamma(n)-scale growth that would overflow a plain double.
template <class R>
struct LogComplex {
  R log_mag;  // -inf encodes zero
  R phase;    // kept in (-pi, pi]

  LogComplex()
      : log_mag(-std::numeric_limits<R>::infinity()), phase(R(0)) {}
  LogComplex(R lm, R ph) : log_mag(std::move(lm)), phase(std::move(ph)) { wrap(); }

  static LogComplex zero() { return LogComplex(); }

  static LogComplex from_cplx(const Cplx<R>& z) {
    using std::log;
    if (z.re == R(0) && z.im == R(0)) return zero();
    return LogComplex(log(abs(z)), arg(z));
  }

  static LogComplex from_real(const R& x) {
    using std::log; using std::abs;
    if (x == R(0)) return zero();
    return LogComplex(log(abs(x)), x > R(0) ? R(0) : pi_v<R>());
  }

  bool is_zero() const { return log_mag == -std::numeric_limits<R>::infinity(); }

  // May overflow/underflow the target type; caller's responsibility.
  Cplx<R> to_cplx() const {
    using std::exp;
    if (is_zero()) return Cplx<R>(R(0));
    return polar(exp(log_mag), phase);
  }

  R real_part() const {
    using std::exp; using std::cos;
    if (is_zero()) return R(0);
    return exp(log_mag) * cos(phase);
  }

  R imag_part() const {
    using std::exp; using std::sin;
    if (is_zero()) return R(0);
    return exp(log_mag) * sin(phase);
  }

  void wrap() {
    using std::floor;
    if (is_zero()) return;
    const R tp = R(2) * pi_v<R>();
    phase -= tp * floor((phase + pi_v<R>()) / tp);
    if (phase > pi_v<R>()) phase -= tp;  // guard the half-open boundary
  }
};

template <class R>
LogComplex<R> operator*(const LogComplex<R>& a, const LogComplex<R>& b) {
  if (a.is_zero() || b.is_zero()) return LogComplex<R>::zero();
  return LogComplex<R>(a.log_mag + b.log_mag, a.phase + b.phase);
}

template <class R>
LogComplex<R> operator/(const LogComplex<R>& a, const LogComplex<R>& b) {
  if (a.is_zero()) return LogComplex<R>::zero();
  return LogComplex<R>(a.log_mag - b.log_mag, a.phase - b.phase);
}

template <class R>
LogComplex<R> conj(const LogComplex<R>& a) {
  if (a.is_zero()) return a;
  return LogComplex<R>(a.log_mag, -a.phase);
}

// Addition rescales by the largest magnitude before summing.
template <class R>
LogComplex<R> log_sum(const std::vector<LogComplex<R>>& terms) {
  using std::exp; using std::log;
  R lead = -std::numeric_limits<R>::infinity();
  for (const auto& t : terms)
    if (!t.is_zero() && t.log_mag > lead) lead = t.log_mag;
  if (lead == -std::numeric_limits<R>::infinity()) return LogComplex<R>::zero();
  Cplx<R> acc(R(0));
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    acc += polar(exp(t.log_mag - lead), t.phase);
  }
  if (acc == Cplx<R>(R(0))) return LogComplex<R>::zero();
  return LogComplex<R>(lead + log(abs(acc)), arg(acc));
}

template <class R>
LogComplex<R> operator+(const LogComplex<R>& a, const LogComplex<R>& b) {
  return log_sum<R>({a, b});
}

template <class R>
LogComplex<R> operator-(const LogComplex<R>& a, const LogComplex<R>& b) {
  LogComplex<R> nb = b;
  nb.phase += pi_v<R>();
  nb.wrap();
  return a + nb;
}

// |a - b| / |b|, computed in log space.
template <class R>
R relative_diff(const LogComplex<R>& a, const LogComplex<R>& b) {
  using std::exp;
  LogComplex<R> d = a - b;
  if (d.is_zero()) return R(0);
  return exp(d.log_mag - b.log_mag);
}

// Which scale factor was divided out of an exact value.
enum class ScaleRemoved { none, factorial_n, gamma_n };

template <class R>
struct ScaledValue {
  LogComplex<R> value;
  ScaleRemoved scale_removed = ScaleRemoved::none;
};

using LogComplexD = LogComplex<double>;
using LogComplexH = LogComplex<HighReal>;

}  // namespace touchard
