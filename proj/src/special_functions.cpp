#include "eelim/special_functions.hpp"

#include <cmath>
#include <numbers>

namespace eelim {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kInvE = 1.0 / std::numbers::e;
constexpr double kBranchPoint = -kInvE;

double residual_tolerance(double a, const SolverConfig& cfg) {
  return std::max(cfg.rel_tolerance * std::abs(a), 1e-14);
}

double initial_guess(double a) {
  if (a < -0.3125) {
    // Series around the branch point w = -1, in p = sqrt(2*(1 + e*a)).
    const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 + kE * a)));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  }
  if (a <= kE) {
    return a / (1.0 + a);
  }
  const double la = std::log(a);
  return la - std::log(la);
}

// f(w) = w*exp(w) - a is strictly increasing on [-1, inf), so a sign-change
// bracket always exists and bisection cannot fail to shrink it.
double bisect(double a, double tol) {
  double lo = -1.0;
  double hi = a > kE ? std::log(a) + 1.0 : 2.0;
  double w = lo;
  for (int i = 0; i < 200; ++i) {
    w = 0.5 * (lo + hi);
    const double f = w * std::exp(w) - a;
    if (std::abs(f) <= tol || w == lo || w == hi) break;
    if (f > 0.0) {
      hi = w;
    } else {
      lo = w;
    }
  }
  return w;
}

}  // namespace

double lambert_w0(double a, const SolverConfig& cfg) {
  detail::require(cfg.rel_tolerance > 0.0, "solver rel_tolerance must be > 0");
  detail::require(cfg.max_iterations >= 1, "solver max_iterations must be >= 1");
  detail::require_finite(a, "lambert_w0 argument");

  if (a < kBranchPoint) {
    if (a < kBranchPoint - 1e-15) {
      throw std::domain_error("lambert_w0: argument below -1/e");
    }
    a = kBranchPoint;
  }
  if (a == 0.0) return 0.0;

  const double tol = residual_tolerance(a, cfg);
  double w = initial_guess(a);

  for (int i = 0; i < cfg.max_iterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - a;
    if (std::abs(f) <= tol) return w;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double next = w - f / denom;
    // Halley can overshoot past the branch singularity at w = -1.
    w = next <= -1.0 ? 0.5 * (w - 1.0) : next;
  }

  w = bisect(a, tol);
  if (std::abs(w * std::exp(w) - a) > tol) {
    throw ConvergenceError("lambert_w0: residual above tolerance after bisection fallback", w);
  }
  return w;
}

double spectral_efficiency(double snr) {
  detail::require_finite(snr, "SNR");
  detail::require(snr >= 0.0, "SNR must be >= 0");
  return std::log1p(snr) * std::numbers::log2e;
}

}  // namespace eelim
