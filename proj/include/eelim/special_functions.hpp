#pragma once

#include <stdexcept>
#include <string>

#include "eelim/quantities.hpp"

namespace eelim {

/// Iteration control for the scalar solvers.
struct SolverConfig {
  double rel_tolerance = 1e-12;
  int max_iterations = 100;
};

/// Thrown when an iterative solver misses its tolerance budget; carries the
/// last iterate for diagnosis.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& message, double last_iterate)
      : std::runtime_error(message), last_iterate_(last_iterate) {}
  double last_iterate() const { return last_iterate_; }

 private:
  double last_iterate_;
};

/// Principal-branch Lambert W: the w >= -1 solution of w*exp(w) = a.
///
/// Domain is a >= -1/e; arguments up to 1e-15 below the branch point are
/// clamped onto it, anything lower throws std::domain_error. Halley
/// iteration from a range-dependent initial guess (branch-point series,
/// a/(1+a), or log(a)-log(log(a))); a bisection fallback engages if Halley
/// stalls, so the residual contract
///   |w*exp(w) - a| <= max(cfg.rel_tolerance * |a|, 1e-14)
/// holds whenever the function returns.
double lambert_w0(double a, const SolverConfig& cfg = {});

/// log2(1 + snr) in bit/s/Hz. Uses a log1p kernel, so for snr << 1 the
/// result tracks snr*log2(e) without cancellation.
double spectral_efficiency(double snr);

}  // namespace eelim
