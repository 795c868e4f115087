#pragma once

#include <cmath>

#include "touchard/errors.hpp"
#include "touchard/numeric.hpp"

namespace touchard {

namespace detail {

// Halley iteration on w e^w = y.
template <class R>
R lambert_halley(R w, const R& y, int max_iter = 60) {
  using std::exp; using std::abs;
  const R tol = R(4) * eps_v<R>();
  for (int i = 0; i < max_iter; ++i) {
    R ew = exp(w);
    R f = w * ew - y;
    R fp = ew * (w + R(1));
    R fpp = ew * (w + R(2));
    R denom = fp - f * fpp / (R(2) * fp);
    R step = f / denom;
    w -= step;
    R scale = abs(y) > R(1) ? abs(y) : R(1);
    if (abs(w * exp(w) - y) <= tol * scale) break;
  }
  return w;
}

// Series about the branch point y = -1/e in p = +-sqrt(2(1+e*y)).
template <class R>
R lambert_branch_series(const R& p) {
  // W = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + 769 p^5/17280
  return R(-1) +
         p * (R(1) +
              p * (R(-1) / R(3) +
                   p * (R(11) / R(72) +
                        p * (R(-43) / R(540) + p * (R(769) / R(17280))))));
}

}  // namespace detail

// Principal real branch W0: w >= -1, w e^w = y, for y >= -1/e.
template <class R>
R lambert_w0(const R& y) {
  using std::exp; using std::log; using std::sqrt; using std::abs;
  const R inv_e = exp(R(-1));
  if (y < -inv_e) {
    // tolerate representation error right at the branch point
    if (y > -inv_e - R(64) * eps_v<R>()) return R(-1);
    throw DomainError("lambert_w0: argument below -1/e");
  }
  if (y == R(0)) return R(0);
  R branch_gap = R(1) + y / inv_e;  // 1 + e*y
  if (branch_gap <= R(0)) return R(-1);
  if (branch_gap < R(1) / R(50)) {
    R p = sqrt(R(2) * branch_gap);
    return detail::lambert_halley(detail::lambert_branch_series(p), y);
  }
  R w;
  if (y > R(3)) {
    R l1 = log(y), l2 = log(log(y));
    w = l1 - l2 + l2 / l1;
  } else if (y > R(0)) {
    w = y / (R(1) + y);  // crude, Halley fixes it
  } else {
    w = y * (R(1) - y);  // y in (-1/e, 0)
  }
  return detail::lambert_halley(w, y);
}

// The branch W_{-1}: w <= -1, defined on [-1/e, 0).
template <class R>
R lambert_wm1(const R& y) {
  using std::exp; using std::log; using std::sqrt;
  const R inv_e = exp(R(-1));
  if (y >= R(0) || y < -inv_e) {
    if (y < R(0) && y > -inv_e - R(64) * eps_v<R>()) return R(-1);
    throw DomainError("lambert_wm1: argument outside [-1/e, 0)");
  }
  R branch_gap = R(1) + y / inv_e;
  if (branch_gap <= R(0)) return R(-1);
  if (branch_gap < R(1) / R(50)) {
    R p = -sqrt(R(2) * branch_gap);
    return detail::lambert_halley(detail::lambert_branch_series(p), y);
  }
  R l1 = log(-y);            // < 0
  R w = l1 - log(-l1);       // classic W_{-1} seed
  return detail::lambert_halley(w, y);
}

}  // namespace touchard
