#pragma once

#include <cmath>
#include <ostream>

#include "touchard/numeric.hpp"

namespace touchard {

// Minimal complex type usable with both double and HighReal.
// std::complex is only specified for built-in floating types, so the
// multiprecision instantiations need their own.
template <class R>
struct Cplx {
  R re{};
  R im{};

  Cplx() = default;
  Cplx(R r) : re(std::move(r)), im(R(0)) {}
  Cplx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o) {
    R r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
};

template <class R> Cplx<R> operator+(Cplx<R> a, const Cplx<R>& b) { return a += b; }
template <class R> Cplx<R> operator-(Cplx<R> a, const Cplx<R>& b) { return a -= b; }
template <class R> Cplx<R> operator-(const Cplx<R>& a) { return {-a.re, -a.im}; }
template <class R> Cplx<R> operator*(Cplx<R> a, const Cplx<R>& b) { return a *= b; }

template <class R> Cplx<R> operator+(const Cplx<R>& a, const R& b) { return {a.re + b, a.im}; }
template <class R> Cplx<R> operator+(const R& a, const Cplx<R>& b) { return {a + b.re, b.im}; }
template <class R> Cplx<R> operator-(const Cplx<R>& a, const R& b) { return {a.re - b, a.im}; }
template <class R> Cplx<R> operator-(const R& a, const Cplx<R>& b) { return {a - b.re, -b.im}; }
template <class R> Cplx<R> operator*(const Cplx<R>& a, const R& b) { return {a.re * b, a.im * b}; }
template <class R> Cplx<R> operator*(const R& a, const Cplx<R>& b) { return {a * b.re, a * b.im}; }
template <class R> Cplx<R> operator/(const Cplx<R>& a, const R& b) { return {a.re / b, a.im / b}; }

template <class R>
Cplx<R> operator/(const Cplx<R>& a, const Cplx<R>& b) {
  using std::abs;
  // scale by the larger component to dodge overflow in |b|^2
  R br = abs(b.re), bi = abs(b.im);
  if (br >= bi) {
    R q = b.im / b.re;
    R d = b.re + b.im * q;
    return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
  }
  R q = b.re / b.im;
  R d = b.re * q + b.im;
  return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
}

template <class R> Cplx<R> operator/(const R& a, const Cplx<R>& b) { return Cplx<R>(a) / b; }

template <class R> bool operator==(const Cplx<R>& a, const Cplx<R>& b) { return a.re == b.re && a.im == b.im; }
template <class R> bool operator!=(const Cplx<R>& a, const Cplx<R>& b) { return !(a == b); }

template <class R> Cplx<R> conj(const Cplx<R>& a) { return {a.re, -a.im}; }
template <class R> R real(const Cplx<R>& a) { return a.re; }
template <class R> R imag(const Cplx<R>& a) { return a.im; }

template <class R>
R abs(const Cplx<R>& a) {
  using std::abs; using std::sqrt;
  R ar = abs(a.re), ai = abs(a.im);
  if (ar == R(0) && ai == R(0)) return R(0);
  R m = ar > ai ? ar : ai;
  R x = a.re / m, y = a.im / m;
  return m * sqrt(x * x + y * y);
}

template <class R>
R arg(const Cplx<R>& a) {
  using std::atan2;
  return atan2(a.im, a.re);
}

template <class R>
R norm(const Cplx<R>& a) { return a.re * a.re + a.im * a.im; }

template <class R>
Cplx<R> exp(const Cplx<R>& a) {
  using std::exp; using std::cos; using std::sin;
  R m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

// principal branch, cut along the negative real axis
template <class R>
Cplx<R> log(const Cplx<R>& a) {
  using std::log;
  return {log(abs(a)), arg(a)};
}

template <class R>
Cplx<R> sqrt(const Cplx<R>& a) {
  using std::sqrt; using std::cos; using std::sin;
  R m = sqrt(abs(a));
  R h = arg(a) / R(2);
  return {m * cos(h), m * sin(h)};
}

template <class R>
Cplx<R> polar(const R& mag, const R& phase) {
  using std::cos; using std::sin;
  return {mag * cos(phase), mag * sin(phase)};
}

template <class R>
Cplx<R> pow_int(Cplx<R> base, long long e) {
  if (e < 0) return R(1) / pow_int(base, -e);
  Cplx<R> acc(R(1));
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Cplx<R>& a) {
  return os << "(" << a.re << (a.im < R(0) ? "" : "+") << a.im << "i)";
}

using CplxD = Cplx<double>;
using CplxH = Cplx<HighReal>;

inline CplxD to_cplxd(const CplxH& z) { return {to_double(z.re), to_double(z.im)}; }
inline CplxH to_cplxh(const CplxD& z) { return {HighReal(z.re), HighReal(z.im)}; }

}  // namespace touchard
