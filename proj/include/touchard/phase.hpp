#pragma once

#include <cmath>
#include <stdexcept>

#include "touchard/complex.hpp"
#include "touchard/errors.hpp"

namespace touchard {

// One problem instance: n, x = |z|, theta = arg z in [0, pi].
// mu = n/x is recomputed on demand so it can never go stale.
template <class R>
struct ExpansionParamsT {
  int n = 2;
  R x = R(1);
  R theta = R(0);

  ExpansionParamsT() = default;
  ExpansionParamsT(int n_, R x_, R theta_) : n(n_), x(std::move(x_)), theta(std::move(theta_)) {
    if (n < 2) throw std::invalid_argument("ExpansionParams: n must be >= 2");
    if (!(x > R(0))) throw std::invalid_argument("ExpansionParams: x must be > 0");
    if (theta < R(0) || theta > pi_v<R>())
      throw std::invalid_argument("ExpansionParams: theta must lie in [0, pi]");
  }

  R mu() const { return R(n) / x; }
  Cplx<R> z() const { return polar(x, theta); }
};

using ExpansionParams = ExpansionParamsT<double>;

// Parameters of the phase alone (mu, theta); enough for the saddle geometry.
template <class R>
struct PhaseParamsT {
  R mu;
  R theta;

  PhaseParamsT(R mu_, R theta_) : mu(std::move(mu_)), theta(std::move(theta_)) {
    if (!(mu > R(0))) throw std::invalid_argument("PhaseParams: mu must be > 0");
  }
  template <class P>
  explicit PhaseParamsT(const P& p) : mu(p.mu()), theta(p.theta) {}
};

using PhaseParams = PhaseParamsT<double>;

// psi(t) = e^{t + i theta}/mu - log t, principal log.
template <class R>
Cplx<R> psi(const Cplx<R>& t, const PhaseParamsT<R>& p) {
  if (t == Cplx<R>(R(0))) throw DomainError("psi: singular at t = 0");
  return exp(t + Cplx<R>(R(0), p.theta)) / p.mu - log(t);
}

template <class R>
Cplx<R> psi_prime(const Cplx<R>& t, const PhaseParamsT<R>& p) {
  return exp(t + Cplx<R>(R(0), p.theta)) / p.mu - R(1) / t;
}

// psi evaluated on a chosen side of the branch cut (t on (-inf, 0]).
// side > 0 reads arg t = +pi, side < 0 reads arg t = -pi.
template <class R>
Cplx<R> psi_cut_side(const Cplx<R>& t, const PhaseParamsT<R>& p, int side) {
  using std::log;
  if (t.im != R(0) || t.re >= R(0)) return psi(t, p);
  Cplx<R> lg(log(-t.re), side > 0 ? pi_v<R>() : -pi_v<R>());
  return exp(t + Cplx<R>(R(0), p.theta)) / p.mu - lg;
}

// m-th derivative of psi evaluated AT a saddle point, using
// e^{t+i theta}/mu = 1/t there:  psi^(m)(t) = 1/t + (-1)^m (m-1)!/t^m,  m >= 2.
template <class R>
Cplx<R> psi_derivative_at_saddle(const Cplx<R>& t, int m) {
  if (m < 2) throw std::invalid_argument("psi_derivative_at_saddle: m must be >= 2");
  R fact(1);
  for (int i = 2; i < m; ++i) fact *= R(i);
  Cplx<R> tm = pow_int(t, m);
  Cplx<R> second = fact / tm;
  if (m % 2 != 0) second = -second;
  return R(1) / t + second;
}

}  // namespace touchard
