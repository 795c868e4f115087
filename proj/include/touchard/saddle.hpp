#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "touchard/errors.hpp"
#include "touchard/lambert.hpp"
#include "touchard/phase.hpp"

namespace touchard {

// |1 + t| below this emits the near-coalescence flag on the saddle.
inline constexpr double kCoalescenceWarnRadius = 0.05;

template <class R>
struct SaddlePointT {
  int k = 0;
  Cplx<R> t;
  Cplx<R> psi_value;   // psi(t_k) = 1/t_k - log t_k
  Cplx<R> psi2;        // (1 + t_k)/t_k^2
  R omega = R(0);      // arg t_k
  bool near_coalescence = false;  // |1 + t_k| < 0.05
};

using SaddlePoint = SaddlePointT<double>;

// Approximate saddle location in strip k: the leading inversion of
// t + log t = log mu + (2 pi k - theta) i.
template <class R>
Cplx<R> saddle_initial_guess(const PhaseParamsT<R>& p, int k) {
  using std::log; using std::atan;
  R lm = log(p.mu);
  R a = R(2) * pi_v<R>() * R(k) - p.theta;
  R M = lm * lm + a * a;
  R at;
  if (lm == R(0))
    at = a > R(0) ? pi_v<R>() / R(2) : -pi_v<R>() / R(2);
  else
    at = atan(a / lm);
  return {lm - log(M) / R(2), a - at};
}

namespace detail {

template <class R>
Cplx<R> saddle_target(const PhaseParamsT<R>& p, int k) {
  using std::log;
  return {log(p.mu), R(2) * pi_v<R>() * R(k) - p.theta};
}

template <class R>
SaddlePointT<R> make_saddle(int k, const Cplx<R>& t) {
  SaddlePointT<R> s;
  s.k = k;
  s.t = t;
  s.psi_value = R(1) / t - log(t);
  s.psi2 = (R(1) + t) / (t * t);
  s.omega = arg(t);
  s.near_coalescence = abs(R(1) + t) < R(kCoalescenceWarnRadius);
  return s;
}

}  // namespace detail

// Newton on f(t) = t + log t - log mu - (2 pi k - theta) i with the principal
// log; iterates that leave their horizontal strip are pulled back by 2 pi i.
template <class R>
SaddlePointT<R> solve_saddle(const PhaseParamsT<R>& p, int k) {
  using std::exp; using std::sqrt; using std::abs; using std::floor;
  const R pi = pi_v<R>();
  const R inv_e = exp(R(-1));

  const bool at_pi = p.theta == pi;
  if (k == 0 && p.theta == R(0))
    return detail::make_saddle(k, Cplx<R>(lambert_w0(p.mu)));
  if (at_pi && p.mu <= inv_e && (k == 0 || k == 1)) {
    // Two real roots of t e^t = -mu; by convention k = 0 labels the root in
    // (-1, 0) and k = 1 the root below -1.
    R w = k == 0 ? lambert_w0(-p.mu) : lambert_wm1(-p.mu);
    return detail::make_saddle(k, Cplx<R>(w));
  }

  Cplx<R> t = saddle_initial_guess(p, k);
  if ((k == 0 || k == 1) && p.theta > R(3) * pi / R(4)) {
    // Near the double saddle at t = -1 the generic guess is poor; seed from
    // the local square-root splitting instead.
    R gap = p.mu * exp(R(1)) - R(1);
    if (gap > R(0) && gap < R(1)) {
      R d = sqrt(R(2) * gap);
      t = Cplx<R>(R(-1), k == 0 ? -d : d);
    }
  }

  const Cplx<R> target = detail::saddle_target(p, k);
  const R tol = R(1e-14);
  const R strip_lo = (R(2 * k) - R(1)) * pi - p.theta;
  const R strip_hi = (R(2 * k) + R(1)) * pi - p.theta;
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    Cplx<R> f = t + log(t) - target;
    if (abs(f) < tol) {
      converged = true;
      break;
    }
    t = t - f / (R(1) + R(1) / t);
    if (t.im <= strip_lo || t.im >= strip_hi) {
      R center = R(2) * pi * R(k) - p.theta;
      R shift = floor((center - t.im) / (R(2) * pi) + R(1) / R(2));
      t.im += R(2) * pi * shift;
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << "solve_saddle: no convergence for k=" << k << " (mu=" << to_double(p.mu)
       << ", theta=" << to_double(p.theta) << ")";
    throw ConvergenceError(os.str(), k, to_double(t.re), to_double(t.im));
  }
  return detail::make_saddle(k, t);
}

template <class R>
std::vector<SaddlePointT<R>> saddle_family(const PhaseParamsT<R>& p, int k_min, int k_max) {
  if (k_min > k_max) throw std::invalid_argument("saddle_family: k_min must be <= k_max");
  std::vector<SaddlePointT<R>> out;
  out.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k) out.push_back(solve_saddle(p, k));
  return out;
}

// Residual of the defining equation t e^t = mu e^{-i theta}.
template <class R>
R saddle_residual(const SaddlePointT<R>& s, const PhaseParamsT<R>& p) {
  Cplx<R> lhs = s.t * exp(s.t);
  Cplx<R> rhs = polar(p.mu, -p.theta);
  return abs(lhs - rhs);
}

}  // namespace touchard
