#include "eelim/link_limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eelim/special_functions.hpp"

namespace eelim {

SisoLink::SisoLink(LinearGain beta, NoisePsd n0) : SisoLink(beta, n0, /*physical=*/true) {}

SisoLink::SisoLink(LinearGain beta, NoisePsd n0, bool physical) : beta_(beta), n0_(n0) {
  detail::require(beta.value() > 0.0, "channel gain beta must be > 0");
  if (physical) {
    detail::require(beta.value() <= 1.0,
                    "channel gain beta must be <= 1 (use SisoLink::unchecked to override)");
  }
}

SisoLink SisoLink::unchecked(LinearGain beta, NoisePsd n0) {
  return SisoLink(beta, n0, /*physical=*/false);
}

MimoConfig::MimoConfig(int tx, int rx, LinearGain sigma_max_sq)
    : MimoConfig(tx, rx, sigma_max_sq, /*physical=*/true) {}

MimoConfig::MimoConfig(int tx, int rx, LinearGain sigma_max_sq, bool physical)
    : tx_(tx), rx_(rx), sigma_max_sq_(sigma_max_sq) {
  detail::require(tx >= 1, "tx antenna count must be >= 1");
  detail::require(rx >= 1, "rx antenna count must be >= 1");
  detail::require(sigma_max_sq.value() > 0.0, "sigma_max_sq must be > 0");
  if (physical) {
    detail::require(sigma_max_sq.value() <= 1.0,
                    "sigma_max_sq must be <= 1 (use MimoConfig::unchecked to override)");
  }
}

MimoConfig MimoConfig::unchecked(int tx, int rx, LinearGain sigma_max_sq) {
  return MimoConfig(tx, rx, sigma_max_sq, /*physical=*/false);
}

SphereGeometry::SphereGeometry(double radius_m, double antenna_area_m2,
                               double carrier_frequency_hz)
    : radius_m_(radius_m),
      antenna_area_m2_(antenna_area_m2),
      carrier_frequency_hz_(carrier_frequency_hz) {
  detail::require_finite(radius_m, "sphere radius");
  detail::require(radius_m > 0.0, "sphere radius must be > 0 m");
  detail::require_finite(antenna_area_m2, "antenna area");
  detail::require(antenna_area_m2 > 0.0, "antenna area must be > 0 m^2");
  detail::require_finite(carrier_frequency_hz, "carrier frequency");
  detail::require(carrier_frequency_hz > 0.0, "carrier frequency must be > 0 Hz");
}

DataRate siso_capacity(const SisoLink& link, PowerWatts p, BandwidthHz b) {
  const double snr = p.value() * link.beta().value() / (b.value() * link.n0().value());
  return DataRate(b.value() * spectral_efficiency(snr));
}

EnergyEfficiency siso_ee_tx_only(const SisoLink& link, PowerWatts p, BandwidthHz b) {
  detail::require(p.value() > 0.0, "EE needs transmit power > 0; the P -> 0 supremum is siso_ee_limit");
  return EnergyEfficiency(siso_capacity(link, p, b).value() / p.value());
}

EnergyEfficiency siso_ee_limit(const SisoLink& link) {
  return EnergyEfficiency(std::numbers::log2e * link.beta().value() / link.n0().value());
}

EnergyEfficiency siso_ee_with_interference(const SisoLink& link, LinearGain alpha, PowerWatts p,
                                           BandwidthHz b) {
  detail::require(p.value() > 0.0, "EE needs transmit power > 0");
  const double sinr = p.value() * link.beta().value() /
                      (b.value() * link.n0().value() + p.value() * alpha.value());
  return EnergyEfficiency(b.value() * spectral_efficiency(sinr) / p.value());
}

DataRate rate_limit_infinite_bandwidth(const SisoLink& link, PowerWatts p) {
  if (p.value() == 0.0) return DataRate(0.0);
  return DataRate(std::numbers::log2e * p.value() * link.beta().value() / link.n0().value());
}

DataRate mimo_capacity_upper(const MimoConfig& cfg, NoisePsd n0, PowerWatts p, BandwidthHz b) {
  const double m = static_cast<double>(cfg.tx_antennas());
  const double streams = static_cast<double>(std::min(cfg.tx_antennas(), cfg.rx_antennas()));
  const double snr = p.value() * cfg.sigma_max_sq().value() / (m * b.value() * n0.value());
  return DataRate(streams * b.value() * spectral_efficiency(snr));
}

EnergyEfficiency mimo_ee_limit(const MimoConfig& cfg, NoisePsd n0) {
  const double streams = static_cast<double>(std::min(cfg.tx_antennas(), cfg.rx_antennas()));
  const double m = static_cast<double>(cfg.tx_antennas());
  return EnergyEfficiency(streams / m * std::numbers::log2e * cfg.sigma_max_sq().value() /
                          n0.value());
}

ConstantModulusSigma sigma_max_sq_constant_modulus(LinearGain beta_per_element, int tx_antennas,
                                                   int rx_antennas) {
  detail::require(beta_per_element.value() > 0.0, "per-element gain must be > 0");
  detail::require(tx_antennas >= 1 && rx_antennas >= 1, "antenna counts must be >= 1");
  const double value =
      beta_per_element.value() * static_cast<double>(std::max(tx_antennas, rx_antennas));
  return ConstantModulusSigma{LinearGain(value), value <= 1.0};
}

EnergyEfficiency ultimate_ee(NoisePsd n0) {
  return EnergyEfficiency(std::numbers::log2e / n0.value());
}

std::uint64_t sphere_antenna_count(const SphereGeometry& geom) {
  const double count =
      std::ceil(4.0 * std::numbers::pi * geom.radius_m() * geom.radius_m() / geom.antenna_area_m2());
  return static_cast<std::uint64_t>(count);
}

double isotropic_aperture_m2(double carrier_frequency_hz, double speed_of_light) {
  detail::require(carrier_frequency_hz > 0.0, "carrier frequency must be > 0 Hz");
  const double lambda = speed_of_light / carrier_frequency_hz;
  return lambda * lambda / (4.0 * std::numbers::pi);
}

LinearGain free_space_gain(double distance_m, double carrier_frequency_hz,
                           double speed_of_light) {
  detail::require(distance_m > 0.0, "distance must be > 0 m");
  detail::require(carrier_frequency_hz > 0.0, "carrier frequency must be > 0 Hz");
  const double lambda = speed_of_light / carrier_frequency_hz;
  const double amplitude = lambda / (4.0 * std::numbers::pi * distance_m);
  return LinearGain(amplitude * amplitude);
}

double free_space_distance_m(LinearGain beta, double carrier_frequency_hz,
                             double speed_of_light) {
  detail::require(beta.value() > 0.0, "gain must be > 0");
  detail::require(carrier_frequency_hz > 0.0, "carrier frequency must be > 0 Hz");
  const double lambda = speed_of_light / carrier_frequency_hz;
  return lambda / (4.0 * std::numbers::pi * std::sqrt(beta.value()));
}

}  // namespace eelim
