#include "eelim/circuit_models.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace eelim {

namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

// EE of the varying-circuit model in its ratio-reduced form: with gain g,
// per-stream power p and bandwidth b the value equals the full expression,
// which depends on (p, b) only through p/b.
double varying_circuit_ee(double gain, double n0, double p, double b, const CircuitParams& cp) {
  const double capacity = b * spectral_efficiency(p * gain / (b * n0));
  const double consumed = p + cp.nu() * b + cp.eta() * capacity;
  detail::require(consumed > 0.0, "energy consumption must be > 0 (P, nu and eta all zero?)");
  return capacity / consumed;
}

// Closed-form maximizer shared by the SISO and MIMO paths.
OperatingPoint optimal_point(double gain, double n0, const CircuitParams& cp,
                             const SolverConfig& solver) {
  OperatingPoint point;
  if (cp.nu() == 0.0) {
    // The EE is then strictly increasing in B/P: the supremum sits at
    // P/B -> 0 and no finite (P, B) attains it.
    point.has_finite_maximizer = false;
    point.ee = EnergyEfficiency(std::numbers::log2e * gain / n0);
    return point;
  }
  const double arg = gain * cp.nu() / (n0 * std::numbers::e) - kInvE;
  point.x = lambert_w0(arg, solver) + 1.0;
  point.snr = std::expm1(point.x);
  point.se_bit_per_s_hz = point.x * std::numbers::log2e;
  point.ratio_w_per_hz = n0 * point.snr / gain;
  point.ee = EnergyEfficiency(point.se_bit_per_s_hz /
                              (point.ratio_w_per_hz + cp.nu() + cp.eta() * point.se_bit_per_s_hz));
  return point;
}

}  // namespace

CircuitParams::CircuitParams(double mu_watts, double nu_watts_per_hz, double eta_joule_per_bit)
    : mu_(mu_watts), nu_(nu_watts_per_hz), eta_(eta_joule_per_bit) {
  detail::require_finite(mu_watts, "mu");
  detail::require(mu_watts >= 0.0, "mu must be >= 0 W");
  detail::require_finite(nu_watts_per_hz, "nu");
  detail::require(nu_watts_per_hz >= 0.0, "nu must be >= 0 W/Hz");
  detail::require_finite(eta_joule_per_bit, "eta");
  detail::require(eta_joule_per_bit >= 0.0, "eta must be >= 0 J/bit");
}

EnergyEfficiency ee_constant_circuit(const SisoLink& link, PowerWatts p, BandwidthHz b,
                                     double mu_watts) {
  detail::require_finite(mu_watts, "mu");
  detail::require(mu_watts >= 0.0, "mu must be >= 0 W");
  detail::require(p.value() + mu_watts > 0.0, "P + mu must be > 0");
  return EnergyEfficiency(siso_capacity(link, p, b).value() / (p.value() + mu_watts));
}

EnergyEfficiency ee_varying_circuit(const SisoLink& link, PowerWatts p, BandwidthHz b,
                                    const CircuitParams& cp) {
  return EnergyEfficiency(
      varying_circuit_ee(link.beta().value(), link.n0().value(), p.value(), b.value(), cp));
}

OperatingPoint optimal_operating_point_siso(const SisoLink& link, const CircuitParams& cp,
                                            const SolverConfig& solver) {
  return optimal_point(link.beta().value(), link.n0().value(), cp, solver);
}

DataRate rate_at_optimum(BandwidthHz b, const OperatingPoint& point) {
  return DataRate(b.value() * point.x * std::numbers::log2e);
}

BandwidthHz bandwidth_for_rate(DataRate rate, const OperatingPoint& point) {
  detail::require(point.x > 0.0, "operating point has no finite maximizer");
  detail::require(rate.value() > 0.0, "target rate must be > 0 bit/s");
  return BandwidthHz(rate.value() / (point.x * std::numbers::log2e));
}

EnergyEfficiency ee_varying_circuit_mimo(const MimoConfig& cfg, NoisePsd n0, PowerWatts p,
                                         BandwidthHz b, const CircuitParams& cp) {
  detail::require(cfg.tx_antennas() == cfg.rx_antennas(),
                  "the MIMO circuit model assumes M = N antennas");
  // Dividing numerator and denominator by M reduces the expression to the
  // single-stream form with per-stream power P/M and gain sigma_max^2.
  const double per_stream_power = p.value() / static_cast<double>(cfg.tx_antennas());
  return EnergyEfficiency(
      varying_circuit_ee(cfg.sigma_max_sq().value(), n0.value(), per_stream_power, b.value(), cp));
}

OperatingPoint optimal_operating_point_mimo(const MimoConfig& cfg, NoisePsd n0,
                                            const CircuitParams& cp, const SolverConfig& solver) {
  detail::require(cfg.tx_antennas() == cfg.rx_antennas(),
                  "the MIMO circuit model assumes M = N antennas");
  return optimal_point(cfg.sigma_max_sq().value(), n0.value(), cp, solver);
}

GridSearchResult grid_search_oracle(const std::function<double(double, double)>& ee_eval,
                                    Interval p_range_watts, Interval b_range_hz,
                                    int grid_per_axis) {
  detail::require(static_cast<bool>(ee_eval), "ee_eval must be callable");
  detail::require(grid_per_axis >= 16, "grid must be >= 16 points per axis");
  detail::require(p_range_watts.lo > 0.0 && p_range_watts.hi > p_range_watts.lo,
                  "power range must be positive and ordered");
  detail::require(b_range_hz.lo > 0.0 && b_range_hz.hi > b_range_hz.lo,
                  "bandwidth range must be positive and ordered");

  const double log_p_lo = std::log(p_range_watts.lo);
  const double log_p_span = std::log(p_range_watts.hi) - log_p_lo;
  const double log_b_lo = std::log(b_range_hz.lo);
  const double log_b_span = std::log(b_range_hz.hi) - log_b_lo;
  const double steps = static_cast<double>(grid_per_axis - 1);

  GridSearchResult best;
  best.ee_bit_per_joule = -1.0;
  for (int i = 0; i < grid_per_axis; ++i) {
    const double p = std::exp(log_p_lo + log_p_span * static_cast<double>(i) / steps);
    for (int j = 0; j < grid_per_axis; ++j) {
      const double b = std::exp(log_b_lo + log_b_span * static_cast<double>(j) / steps);
      const double ee = ee_eval(p, b);
      if (!std::isfinite(ee)) {
        char msg[128];
        std::snprintf(msg, sizeof(msg), "non-finite EE at lattice point P=%.9e W, B=%.9e Hz", p, b);
        throw std::runtime_error(msg);
      }
      // Strict > plus ascending iteration: exact ties keep the lowest P,
      // then the lowest B.
      if (ee > best.ee_bit_per_joule) {
        best = GridSearchResult{p, b, ee};
      }
    }
  }
  return best;
}

}  // namespace eelim
