#pragma once

#include <vector>

#include "touchard/series.hpp"
#include "touchard/stokes.hpp"

namespace touchard {

enum class AssembleMode {
  full,     // sum over the whole contributory set
  reduced,  // J^_0 + J^_1 only
};

// Scaled asymptotic value of T^_{n-1}(z): the sum of per-saddle series over
// the contributory index set.  At theta = 0 and pi the conjugate pairing
// makes the result real up to rounding.
template <class R>
LogComplex<R> assemble_tagged(const ExpansionParamsT<R>& params, int truncation,
                              AssembleMode mode = AssembleMode::full) {
  const double pi_d = pi_v<double>();
  const double mu_d = to_double(params.mu());
  const double theta_d = to_double(params.theta);

  if (theta_d == pi_d && std::abs(mu_d - std::exp(-1.0)) < kCoalescenceMuRadius)
    throw CoalescenceError("assemble: mu too close to 1/e at theta = pi");

  std::vector<int> indices;
  if (mode == AssembleMode::reduced) {
    indices = {0, 1};
  } else {
    ExpansionParams pd(params.n, mu_d > 0 ? params.n / mu_d : 1.0, theta_d);
    indices = contributory_saddles(pd).indices;
  }

  PhaseParamsT<R> phase(params);
  std::vector<LogComplex<R>> parts;
  parts.reserve(indices.size());
  for (int k : indices) {
    SaddlePointT<R> s = solve_saddle(phase, k);
    parts.push_back(jk_series(s, params, truncation).value);
  }
  return log_sum(parts);
}

inline LogComplexD assemble(const ExpansionParams& params, int truncation,
                            AssembleMode mode = AssembleMode::full) {
  return assemble_tagged<double>(params, truncation, mode);
}

}  // namespace touchard
