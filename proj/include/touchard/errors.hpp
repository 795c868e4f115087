#pragma once

#include <stdexcept>
#include <string>

namespace touchard {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Newton failed to converge; carries the last iterate and the strip index.
struct ConvergenceError : std::runtime_error {
  int k;
  double last_re, last_im;
  ConvergenceError(const std::string& msg, int k_, double re_, double im_)
      : std::runtime_error(msg), k(k_), last_re(re_), last_im(im_) {}
};

// Requested expansion at (or too close to) the double saddle t = -1.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mu too close to 1/e at theta = pi: the Poincare expansions are invalid.
struct CoalescenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace touchard
