#pragma once

#include <cstddef>
#include <vector>

#include "touchard/log_complex.hpp"
#include "touchard/saddle.hpp"

namespace touchard {

// |1 + t_k| at or below this is treated as a degenerate (double) saddle.
inline constexpr double kDegenerateRadius = 1e-3;

// Local phase expansion at a saddle:
//   psi(t) - psi(t_k) = sum_{r>=0} a_r (t - t_k)^{r+2},
// so a_r = psi^(r+2)(t_k)/(r+2)! with the closed-form derivatives.
template <class R>
struct LocalExpansionT {
  SaddlePointT<R> saddle;
  std::vector<Cplx<R>> a;  // a[r], r = 0..R
  int order = 0;           // R
};

using LocalExpansion = LocalExpansionT<double>;

template <class R>
LocalExpansionT<R> local_expansion(const SaddlePointT<R>& s, int order) {
  if (abs(R(1) + s.t) <= R(kDegenerateRadius))
    throw DegeneracyError("local_expansion: saddle too close to t = -1");
  if (order < 0) throw std::invalid_argument("local_expansion: order must be >= 0");
  LocalExpansionT<R> le;
  le.saddle = s;
  le.order = order;
  le.a.reserve(static_cast<std::size_t>(order) + 1);
  R fact(2);  // (r+2)! running value, r starts at 0
  for (int r = 0; r <= order; ++r) {
    int m = r + 2;
    if (r > 0) fact *= R(m);
    le.a.push_back(psi_derivative_at_saddle(s.t, m) / fact);
  }
  return le;
}

// Partial ordinary Bell polynomials over the given coefficient list:
//   B[k][j] = sum_{r=1}^{k-j+1} a_r B[k-r][j-1],  B[k][0] = delta_{k0}.
template <class R>
std::vector<std::vector<Cplx<R>>> bell_table(const std::vector<Cplx<R>>& a, int k_max) {
  std::vector<std::vector<Cplx<R>>> B(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k)
    B[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1, Cplx<R>(R(0)));
  B[0][0] = Cplx<R>(R(1));
  for (int k = 1; k <= k_max; ++k) {
    for (int j = 1; j <= k; ++j) {
      Cplx<R> acc(R(0));
      for (int r = 1; r <= k - j + 1; ++r) {
        if (static_cast<std::size_t>(r) >= a.size()) break;
        acc += a[static_cast<std::size_t>(r)] * B[static_cast<std::size_t>(k - r)][static_cast<std::size_t>(j - 1)];
      }
      B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = acc;
    }
  }
  return B;
}

template <class R>
std::vector<std::vector<Cplx<R>>> bell_table(const LocalExpansionT<R>& le, int k_max) {
  if (le.order < k_max) throw std::invalid_argument("bell_table: expansion order too small");
  return bell_table(le.a, k_max);
}

namespace detail {

// Wojdylo's Bell-polynomial formula, applied in the Laplace-integral
// convention (coefficients of the expansion of -(psi - psi_k)).  This is
// the convention the reference coefficient table (Table 8) follows; the
// summed series re-inserts the (-1)^s (see jk_terms below).
template <class R>
std::vector<Cplx<R>> wojdylo_laplace(const std::vector<Cplx<R>>& a_psi_conv, int s_max) {
  std::vector<Cplx<R>> a(a_psi_conv.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = -a_psi_conv[i];
  auto B = bell_table(a, 2 * s_max);
  const Cplx<R> a0 = a[0];
  std::vector<Cplx<R>> c(static_cast<std::size_t>(s_max) + 1);
  for (int s = 0; s <= s_max; ++s) {
    Cplx<R> acc(R(0));
    R poch(1);          // (s + 1/2)_j
    R factj(1);         // j!
    Cplx<R> a0j(R(1));  // a0^j
    for (int j = 0; j <= 2 * s; ++j) {
      if (j > 0) {
        poch *= R(s) + R(1) / R(2) + R(j - 1);
        factj *= R(j);
        a0j *= a0;
      }
      Cplx<R> term = (poch / factj) * B[static_cast<std::size_t>(2 * s)][static_cast<std::size_t>(j)] / a0j;
      if (j % 2 != 0) term = -term;
      acc += term;
    }
    Cplx<R> lead = R(1) / pow_int(a0, s);
    if (s % 2 != 0) lead = -lead;
    c[static_cast<std::size_t>(s)] = lead * acc;
  }
  return c;
}

}  // namespace detail

// c_{2s} at the saddle, in the convention of the coefficient table
// (c_0 = 1; odd-s entries have sign opposite to the summed-series value).
template <class R>
Cplx<R> wojdylo_c2s(const LocalExpansionT<R>& le, int s) {
  if (le.order < 2 * s) throw std::invalid_argument("wojdylo_c2s: expansion order too small");
  if (abs(le.a[0]) == R(0)) throw DegeneracyError("wojdylo_c2s: a_0 vanishes");
  return detail::wojdylo_laplace(le.a, s)[static_cast<std::size_t>(s)];
}

template <class R>
std::vector<Cplx<R>> wojdylo_c2s_all(const LocalExpansionT<R>& le, int s_max) {
  if (le.order < 2 * s_max) throw std::invalid_argument("wojdylo_c2s_all: expansion order too small");
  return detail::wojdylo_laplace(le.a, s_max);
}

// Closed forms for c_2 and c_4 from the quartic/octic polynomials, same
// convention as wojdylo_c2s.
template <class R>
std::pair<Cplx<R>, Cplx<R>> c2_c4_closed_form(const SaddlePointT<R>& s) {
  const Cplx<R>& t = s.t;
  if (abs(R(1) + t) == R(0)) throw DegeneracyError("c2_c4_closed_form: t = -1");
  Cplx<R> t2 = t * t, t3 = t2 * t, t4 = t3 * t;
  Cplx<R> p2 = R(2) * t4 - R(3) * t3 - R(20) * t2 - R(18) * t + Cplx<R>(R(2));
  Cplx<R> t5 = t4 * t, t6 = t5 * t, t7 = t6 * t, t8 = t7 * t;
  Cplx<R> p4 = R(4) * t8 - R(156) * t7 - R(695) * t6 - R(696) * t5 + R(1092) * t4 +
               R(2916) * t3 + R(1972) * t2 - R(72) * t + Cplx<R>(R(4));
  Cplx<R> u = R(1) + t;
  Cplx<R> u3 = u * u * u;
  Cplx<R> c2 = p2 / (R(12) * u3);
  Cplx<R> c4 = p4 / (R(864) * u3 * u3);
  return {c2, c4};
}

// Per-saddle series J^_k (the Gamma(n)-removed contribution).
template <class R>
struct JkExpansionT {
  SaddlePointT<R> saddle;
  std::vector<Cplx<R>> c;      // c_{2s} as reported by wojdylo_c2s
  std::vector<Cplx<R>> terms;  // summands (-1)^s c_{2s} (1/2)_s / n^s
  LogComplex<R> prefactor;
  int truncation = 0;
  LogComplex<R> value;
};

using JkExpansion = JkExpansionT<double>;

namespace detail {

// Direction of traversal of the descent contour through the saddle: of the
// two descent directions +-exp(i(pi - arg a0)/2), take the one closest to
// the counterclockwise tangent i e^{i arg t_k} of the loop around the origin.
// This fixes the square-root branch so the k=0, theta=0 contribution is
// positive real and conjugate saddles give conjugate contributions.
template <class R>
Cplx<R> traversal_direction(const SaddlePointT<R>& s, const Cplx<R>& a0) {
  Cplx<R> d = polar(R(1), (pi_v<R>() - arg(a0)) / R(2));
  Cplx<R> tangent = Cplx<R>(R(0), R(1)) * polar(R(1), s.omega);
  R dot = d.re * tangent.re + d.im * tangent.im;
  return dot >= R(0) ? d : -d;
}

}  // namespace detail

template <class R>
JkExpansionT<R> jk_series(const SaddlePointT<R>& s, const ExpansionParamsT<R>& params,
                          int truncation) {
  using std::log; using std::sqrt;
  if (truncation < 0) throw std::invalid_argument("jk_series: truncation must be >= 0");
  if (abs(R(1) + s.t) <= R(kDegenerateRadius))
    throw DegeneracyError("jk_series: saddle too close to t = -1");

  JkExpansionT<R> jk;
  jk.saddle = s;
  jk.truncation = truncation;

  auto le = local_expansion(s, 2 * truncation);
  jk.c = detail::wojdylo_laplace(le.a, truncation);

  const R n = R(params.n);
  jk.terms.resize(static_cast<std::size_t>(truncation) + 1);
  R poch(1);  // (1/2)_s
  R npow(1);  // n^s
  for (int t = 0; t <= truncation; ++t) {
    if (t > 0) {
      poch *= R(t) - R(1) / R(2);
      npow *= n;
    }
    Cplx<R> term = jk.c[static_cast<std::size_t>(t)] * (poch / npow);
    if (t % 2 != 0) term = -term;
    jk.terms[static_cast<std::size_t>(t)] = term;
  }

  // prefactor sigma |t| e^{-z + n/t} t^{-n} / (i sqrt(2 pi n |1+t|)),
  // assembled in log space
  const Cplx<R> z = params.z();
  const Cplx<R> expo = -z + n / s.t;  // exponent of e
  const R abs_t = abs(s.t);
  const R abs_1pt = abs(R(1) + s.t);
  Cplx<R> sigma = detail::traversal_direction(s, le.a[0]);

  R log_mag = expo.re - n * log(abs_t) + log(abs_t) -
              log(R(2) * pi_v<R>() * n * abs_1pt) / R(2);
  R phase = expo.im - n * s.omega + arg(sigma) - pi_v<R>() / R(2);
  jk.prefactor = LogComplex<R>(log_mag, phase);

  Cplx<R> series_sum(R(0));
  for (const auto& t : jk.terms) series_sum += t;
  jk.value = jk.prefactor * LogComplex<R>::from_cplx(series_sum);
  return jk;
}

// (s_opt, J^_k truncated there): s_opt is the global minimizer of |terms[s]|
// over 0..s_max.  Flag is false when the minimum sits at s_max itself (no
// interior minimum found).
template <class R>
struct OptimalTruncationT {
  int s_opt = 0;
  LogComplex<R> value;
  bool interior = true;
  JkExpansionT<R> expansion;  // full data through s_max
};

template <class R>
OptimalTruncationT<R> optimal_truncation(const SaddlePointT<R>& s,
                                         const ExpansionParamsT<R>& params, int s_max) {
  JkExpansionT<R> full = jk_series(s, params, s_max);
  int s_opt = 0;
  R best = abs(full.terms[0]);
  for (int i = 1; i <= s_max; ++i) {
    R m = abs(full.terms[static_cast<std::size_t>(i)]);
    if (m < best) {
      best = m;
      s_opt = i;
    }
  }
  OptimalTruncationT<R> out;
  out.s_opt = s_opt;
  out.interior = s_opt < s_max;
  Cplx<R> partial(R(0));
  for (int i = 0; i <= s_opt; ++i) partial += full.terms[static_cast<std::size_t>(i)];
  out.value = full.prefactor * LogComplex<R>::from_cplx(partial);
  out.expansion = std::move(full);
  return out;
}

}  // namespace touchard
