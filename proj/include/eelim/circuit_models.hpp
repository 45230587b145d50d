#pragma once

#include <functional>

#include "eelim/link_limits.hpp"
#include "eelim/quantities.hpp"
#include "eelim/special_functions.hpp"

namespace eelim {

/// Circuit-power model constants:
///   mu  - constant circuit power (W),
///   nu  - converter/baseband energy per sample, expressed per Hz of
///         bandwidth (W/Hz) so that nu*B is a power,
///   eta - encoding/decoding energy per information bit (J/bit).
class CircuitParams {
 public:
  CircuitParams(double mu_watts, double nu_watts_per_hz, double eta_joule_per_bit);

  double mu() const { return mu_; }
  double nu() const { return nu_; }
  double eta() const { return eta_; }

 private:
  double mu_;
  double nu_;
  double eta_;
};

/// An EE-optimal operating point. For nu > 0 the maximizer is the family of
/// (P, B) pairs sharing ratio_w_per_hz; for nu = 0 no finite maximizer
/// exists and ee carries the supremum instead.
struct OperatingPoint {
  double x = 0.0;                 // auxiliary Lambert W variable
  double ratio_w_per_hz = 0.0;    // optimal P/B (SISO) or P/(M*B) (MIMO)
  double snr = 0.0;               // exp(x) - 1
  double se_bit_per_s_hz = 0.0;   // x * log2(e)
  EnergyEfficiency ee{0.0};
  bool has_finite_maximizer = true;
};

/// EE with energy model P + mu. Requires P + mu > 0.
EnergyEfficiency ee_constant_circuit(const SisoLink& link, PowerWatts p, BandwidthHz b,
                                     double mu_watts);

/// EE with energy model P + nu*B + eta*C, where C is the capacity. mu is
/// not part of this model.
EnergyEfficiency ee_varying_circuit(const SisoLink& link, PowerWatts p, BandwidthHz b,
                                    const CircuitParams& cp);

/// Closed-form maximizer of ee_varying_circuit over (P, B):
///   x = W(beta*nu/(N0*e) - 1/e) + 1,  P/B = N0*(exp(x) - 1)/beta,
///   EE = x*log2(e) / (N0*(exp(x)-1)/beta + nu + eta*x*log2(e)).
/// With nu = 0 the optimum degenerates to P/B -> 0; the returned point then
/// has has_finite_maximizer = false and ee = siso_ee_limit(link).
OperatingPoint optimal_operating_point_siso(const SisoLink& link, const CircuitParams& cp,
                                            const SolverConfig& solver = {});

/// Data rate B*x*log2(e) when operating on the optimal ratio.
DataRate rate_at_optimum(BandwidthHz b, const OperatingPoint& point);

/// Bandwidth needed for a target rate on the optimal ratio: C/(x*log2(e)).
BandwidthHz bandwidth_for_rate(DataRate rate, const OperatingPoint& point);

/// MIMO EE with M = N antennas and energy model
/// P + nu*B*M + eta*B*M*log2(1 + P*sigma^2/(M*B*N0)).
EnergyEfficiency ee_varying_circuit_mimo(const MimoConfig& cfg, NoisePsd n0, PowerWatts p,
                                         BandwidthHz b, const CircuitParams& cp);

/// MIMO analogue of the closed form: x from sigma_max^2 instead of beta,
/// ratio_w_per_hz is z = P/(M*B).
OperatingPoint optimal_operating_point_mimo(const MimoConfig& cfg, NoisePsd n0,
                                            const CircuitParams& cp,
                                            const SolverConfig& solver = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct GridSearchResult {
  double p_watts = 0.0;
  double b_hz = 0.0;
  double ee_bit_per_joule = 0.0;
};

/// Brute-force lattice maximizer used to cross-check the closed forms.
/// Evaluates ee_eval(P, B) on a log-spaced grid_per_axis x grid_per_axis
/// lattice over the given ranges (endpoints included) and returns the best
/// point; exact ties resolve to the lowest P, then the lowest B. A
/// non-finite evaluation throws, naming the offending lattice point.
GridSearchResult grid_search_oracle(const std::function<double(double, double)>& ee_eval,
                                    Interval p_range_watts, Interval b_range_hz,
                                    int grid_per_axis);

}  // namespace eelim
