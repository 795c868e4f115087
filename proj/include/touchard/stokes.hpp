#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "touchard/saddle.hpp"
#include "touchard/series.hpp"

namespace touchard {

enum class PathDirection { descent, ascent };
enum class PathBranch { plus, minus };
enum class PathTerminal { left_infinity, right_strip, origin, branch_cut, step_limit };

struct PathPolyline {
  int saddle_k = 0;
  PathDirection direction = PathDirection::descent;
  PathBranch branch = PathBranch::plus;
  std::vector<CplxD> points;
  std::vector<CplxD> psi_values;  // principal-branch psi at each point
  PathTerminal terminal = PathTerminal::step_limit;
  int strip_index = 0;  // meaningful for right_strip
  double min_dist_to = 0.0;  // scratch for connection shots
};

namespace detail {

inline constexpr double kTraceHMin = 1e-4;
inline constexpr double kTraceHMax = 1e-1;
inline constexpr double kTraceDriftTol = 1e-8;
inline constexpr double kLeftCutoff = 30.0;

inline CplxD unit_flow(const CplxD& t, const PhaseParams& p, PathDirection dir) {
  CplxD d = psi_prime(t, p);
  double m = abs(d);
  CplxD u = conj(d) / m;
  return dir == PathDirection::descent ? -u : u;
}

// one RK4 step of dt/ds = +-conj(psi')/|psi'|
inline CplxD rk4_step(const CplxD& t, double h, const PhaseParams& p, PathDirection dir) {
  CplxD k1 = unit_flow(t, p, dir);
  CplxD k2 = unit_flow(t + (h / 2) * k1, p, dir);
  CplxD k3 = unit_flow(t + (h / 2) * k2, p, dir);
  CplxD k4 = unit_flow(t + h * k3, p, dir);
  return t + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Im psi changes by +-2 pi when the path crosses the branch cut; compare
// against the tracked level modulo that period.
inline double level_error(const CplxD& t, const PhaseParams& p, double level) {
  double e = imag(psi(t, p)) - level;
  const double tp = 2.0 * pi_v<double>();
  e -= tp * std::round(e / tp);
  return e;
}

inline CplxD project_to_level(CplxD t, const PhaseParams& p, double level) {
  for (int pass = 0; pass < 2; ++pass) {
    CplxD d = psi_prime(t, p);
    double n2 = norm(d);
    if (n2 == 0.0) break;
    double e = level_error(t, p, level);
    t = t - CplxD(0.0, e) * conj(d) / n2;
  }
  return t;
}

}  // namespace detail

// Trace the constant-phase path leaving the saddle in the requested branch.
// Descent branches are +-exp(i(pi - arg psi'')/2); ascent +-exp(-i arg psi''/2).
inline PathPolyline trace_path(const SaddlePoint& s, const ExpansionParams& params,
                               PathDirection direction, PathBranch branch,
                               double step = 1e-3, double max_len = 200.0) {
  if (abs(1.0 + s.t) <= kDegenerateRadius)
    throw DegeneracyError("trace_path: degenerate saddle");
  if (step <= 0.0) throw std::invalid_argument("trace_path: step must be > 0");

  const PhaseParams p(params);
  PathPolyline line;
  line.saddle_k = s.k;
  line.direction = direction;
  line.branch = branch;

  double half = direction == PathDirection::descent ? (pi_v<double>() - arg(s.psi2)) / 2.0
                                                    : -arg(s.psi2) / 2.0;
  CplxD dir0 = polar(1.0, half);
  if (branch == PathBranch::minus) dir0 = -dir0;

  CplxD t = s.t + step * dir0;
  // Saddles on the negative real axis sit on the cut; the level is read on
  // the side the branch moves into.
  double level;
  if (s.t.im == 0.0 && s.t.re < 0.0) {
    int side = t.im >= 0.0 ? +1 : -1;
    level = imag(psi_cut_side(s.t, p, side));
  } else {
    level = imag(psi(s.t, p));
  }

  auto push = [&](const CplxD& q) {
    line.points.push_back(q);
    line.psi_values.push_back(psi(q, p));
  };
  push(t);

  double h = step;
  double travelled = 0.0;
  while (travelled < max_len) {
    CplxD tn = detail::rk4_step(t, h, p, PathDirection(direction));
    double drift = std::abs(detail::level_error(tn, p, level));
    if (drift > detail::kTraceDriftTol && h > detail::kTraceHMin) {
      h = std::max(h / 2.0, detail::kTraceHMin);
      continue;
    }
    tn = detail::project_to_level(tn, p, level);
    travelled += h;
    if (drift < detail::kTraceDriftTol / 4.0 && h < detail::kTraceHMax) h = std::min(h * 1.25, detail::kTraceHMax);
    t = tn;
    push(t);

    if (t.re < -detail::kLeftCutoff) {
      line.terminal = PathTerminal::left_infinity;
      return line;
    }
    if (t.re > detail::kLeftCutoff) {
      // classify by the nearest admissible horizontal line
      double v = t.im + params.theta;
      double m = direction == PathDirection::descent
                     ? std::round((v / pi_v<double>() - 1.0) / 2.0)
                     : std::round(v / (2.0 * pi_v<double>()));
      line.terminal = PathTerminal::right_strip;
      line.strip_index = static_cast<int>(m);
      return line;
    }
    if (direction == PathDirection::ascent && abs(t) < 1e-6) {
      line.terminal = PathTerminal::origin;
      return line;
    }
    // hugging the cut: on the negative axis the flow is horizontal, so a
    // point essentially on the axis with Re t < 0 stays there
    if (std::abs(t.im) < 1e-9 && t.re < -1e-6) {
      line.terminal = PathTerminal::branch_cut;
      return line;
    }
    // stagnation at another saddle
    if (abs(psi_prime(t, p)) < 1e-9) {
      line.terminal = PathTerminal::step_limit;
      return line;
    }
  }
  line.terminal = PathTerminal::step_limit;
  return line;
}

namespace detail {

inline constexpr double kShotTolerance = 1e-2;

// Minimum distance of the descent path from t_a to the point t_b.
inline double connection_shot(const PhaseParams& p, int ka, int kb) {
  SaddlePoint sa = solve_saddle(p, ka);
  SaddlePoint sb = solve_saddle(p, kb);
  double best = 1e300;
  CplxD dir0 = polar(1.0, (pi_v<double>() - arg(sa.psi2)) / 2.0);
  for (int sgn = 0; sgn < 2; ++sgn) {
    CplxD d0 = sgn == 0 ? dir0 : -dir0;
    CplxD t = sa.t + 1e-3 * d0;
    double level;
    if (sa.t.im == 0.0 && sa.t.re < 0.0)
      level = imag(psi_cut_side(sa.t, p, t.im >= 0.0 ? +1 : -1));
    else
      level = imag(psi(sa.t, p));
    double h = 1e-2;
    double travelled = 0.0;
    while (travelled < 200.0) {
      t = rk4_step(t, h, p, PathDirection::descent);
      t = project_to_level(t, p, level);
      travelled += h;
      best = std::min(best, abs(t - sb.t));
      if (t.re < -kLeftCutoff || t.re > kLeftCutoff) break;
      double g = abs(psi_prime(t, p));
      if (g < 1e-11) break;
      // slow down near the target saddle so the pass is not stepped over
      h = std::min(0.05, std::max(1e-3, 0.2 * abs(t - sb.t) + 1e-3));
    }
  }
  return best;
}

// Im psi(t_a) - Im psi(t_b), principal branch.
inline double im_psi_gap(const PhaseParams& p, int ka, int kb) {
  SaddlePoint sa = solve_saddle(p, ka);
  SaddlePoint sb = solve_saddle(p, kb);
  return imag(sa.psi_value) - imag(sb.psi_value);
}

}  // namespace detail

struct StokesAngleResult {
  std::optional<double> theta_s;       // radians
  std::pair<int, int> pair{0, 0};      // (dominant, subdominant)
  double shot_distance = 0.0;          // closest approach of the verifying trace
  std::string diagnostic;
};

// Stokes angle for the given saddle pair: the theta in [0, pi] at which
// Im psi(t_a) = Im psi(t_b) with Re psi(t_a) > Re psi(t_b), verified by a
// steepest-descent shot from t_a passing within 1e-2 of t_b.
inline StokesAngleResult stokes_angle(double mu, std::pair<int, int> pair) {
  StokesAngleResult res;
  res.pair = pair;
  const double pi = pi_v<double>();
  const double lo = 1e-9, hi = pi - 1e-9;
  auto gap = [&](double th) { return detail::im_psi_gap(PhaseParams(mu, th), pair.first, pair.second); };

  const int kScan = 96;
  double prev_th = lo, prev_g = gap(lo);
  for (int i = 1; i <= kScan; ++i) {
    double th = lo + (hi - lo) * i / kScan;
    double g = gap(th);
    if ((prev_g < 0.0) != (g < 0.0)) {
      double a = prev_th, b = th;
      for (int it = 0; it < 80; ++it) {
        double m = (a + b) / 2.0, gm = gap(m);
        if ((gap(a) < 0.0) != (gm < 0.0))
          b = m;
        else
          a = m;
      }
      double root = (a + b) / 2.0;
      PhaseParams p(mu, root);
      // orient the pair: dominant first
      SaddlePoint sa = solve_saddle(p, pair.first);
      SaddlePoint sb = solve_saddle(p, pair.second);
      int ka = pair.first, kb = pair.second;
      if (real(sa.psi_value) < real(sb.psi_value)) std::swap(ka, kb);
      double dist = detail::connection_shot(p, ka, kb);
      if (dist <= detail::kShotTolerance) {
        res.theta_s = root;
        res.pair = {ka, kb};
        res.shot_distance = dist;
        return res;
      }
      res.diagnostic = "im-psi root at theta/pi=" + std::to_string(root / pi) +
                       " rejected by connection shot (distance " + std::to_string(dist) + "); ";
    }
    prev_th = th;
    prev_g = g;
  }
  res.diagnostic += "no verified Stokes angle in [0, pi]";
  return res;
}

namespace detail {

// switching saddle for interval index j (0-based: mu in (mu_j, mu_{j+1}))
inline int switching_saddle(int j) {
  return j % 2 == 0 ? -(j / 2 + 1) : (j + 3) / 2;
}

// the partner is the adjacent contributing saddle, one step toward t_0
inline std::pair<int, int> stokes_pair_for_interval(int j) {
  int s = switching_saddle(j);
  int partner = s > 0 ? s - 1 : s + 1;
  return {partner, s};
}

}  // namespace detail

// Boundary mu_k: the mu at which the switching angle theta_s reaches the end
// of its range (pi for odd k, 0 for even k).  Equivalently the root in mu of
// the pair's Im-psi gap evaluated at that terminal angle, shot-verified.
inline double mu_boundary(int k) {
  if (k < 1 || k > 8) throw std::invalid_argument("mu_boundary: k must be in 1..8");
  static const std::vector<double> cache = [] {
    std::vector<double> out;
    const double pi = pi_v<double>();
    double lo_scan = 0.4;
    for (int kk = 1; kk <= 8; ++kk) {
      int p = (kk + 1) / 2;  // upper-chain pair (p, p+1)
      double theta_end = kk % 2 == 1 ? pi : 1e-12;
      auto gap = [&](double m) { return detail::im_psi_gap(PhaseParams(m, theta_end), p, p + 1); };
      double hi_scan = lo_scan + 7.0;
      const int kScan = 400;
      double root = -1.0;
      double prev_m = lo_scan, prev_g = gap(lo_scan);
      for (int i = 1; i <= kScan; ++i) {
        double m = lo_scan + (hi_scan - lo_scan) * i / kScan;
        double g = gap(m);
        if ((prev_g < 0.0) != (g < 0.0)) {
          double a = prev_m, b = m;
          for (int it = 0; it < 80; ++it) {
            double mid = (a + b) / 2.0, gm = gap(mid);
            if ((gap(a) < 0.0) != (gm < 0.0))
              b = mid;
            else
              a = mid;
          }
          root = (a + b) / 2.0;
          break;
        }
        prev_m = m;
        prev_g = g;
      }
      if (root < 0.0) throw std::runtime_error("mu_boundary: no sign change found");
      out.push_back(root);
      lo_scan = root + 0.05;
    }
    return out;
  }();
  return cache[static_cast<std::size_t>(k - 1)];
}

// 0-based interval index j with mu in (mu_j, mu_{j+1}); intervals beyond the
// tabulated mu_8 extend the staircase pattern (clamped at 8 here).
inline int mu_interval_index(double mu) {
  int j = 0;
  while (j < 8 && mu > mu_boundary(j + 1)) ++j;
  return j;
}

struct ContributorySet {
  ExpansionParams params;
  std::vector<int> indices;  // contiguous [-K', K]
  int K = 0;
  int K_prime = 0;
  bool near_boundary = false;       // |mu - mu_j| < 1e-3 for some j
  bool near_coalescence = false;    // theta = pi with mu within 0.02 of 1/e
};

inline constexpr double kBoundaryWarnRadius = 1e-3;
inline constexpr double kCoalescenceMuRadius = 0.02;

// Which saddles the integration contour passes over, per the interval
// staircase at theta = 0 / pi and the Stokes switch in between.
inline ContributorySet contributory_saddles(const ExpansionParams& params) {
  const double mu = params.mu();
  const double theta = params.theta;
  const double pi = pi_v<double>();
  const double inv_e = std::exp(-1.0);

  ContributorySet set;
  set.params = params;
  int j = mu_interval_index(mu);
  for (int b = 1; b <= 8; ++b)
    if (std::abs(mu - mu_boundary(b)) < kBoundaryWarnRadius) set.near_boundary = true;

  auto fill = [&](int lo, int hi) {
    set.indices.clear();
    for (int k = lo; k <= hi; ++k) set.indices.push_back(k);
    set.K = hi;
    set.K_prime = -lo;
  };

  if (theta == pi) {
    if (std::abs(mu - inv_e) < kCoalescenceMuRadius) set.near_coalescence = true;
    if (mu < inv_e) {
      fill(0, 0);  // only the root in (-1, 0) is on the contour
      return set;
    }
    int kpi = (j + 1) / 2 + 1;
    fill(-(kpi - 1), kpi);
    return set;
  }

  int k0 = j / 2 + 1;
  fill(-k0, k0);
  if (theta == 0.0) return set;

  // intermediate theta: the interval's switching saddle turns on (positive
  // index) or off (negative index) as theta crosses theta_s(mu)
  int sw = detail::switching_saddle(j);
  auto pr = detail::stokes_pair_for_interval(j);
  StokesAngleResult sa = stokes_angle(mu, pr);
  if (!sa.theta_s.has_value()) {
    // no verified switch inside (0, pi): keep the theta=0 set for an
    // exiting saddle, add the entering saddle only at theta = pi
    return set;
  }
  if (sw > 0) {
    if (theta > *sa.theta_s) fill(-k0, k0 + 1);
  } else {
    if (theta > *sa.theta_s) fill(-(k0 - 1), k0);
  }
  return set;
}

// Default Stokes pair for mu's interval, for callers that do not specify one.
inline StokesAngleResult stokes_angle(double mu) {
  return stokes_angle(mu, detail::stokes_pair_for_interval(mu_interval_index(mu)));
}

}  // namespace touchard
