#pragma once

#include <cstdint>

#include "eelim/quantities.hpp"

namespace eelim {

/// Default speed of light in m/s. The rounded value reproduces textbook
/// numbers such as lambda = 0.1 m at 3 GHz.
inline constexpr double kSpeedOfLight = 2.998e8;
inline constexpr double kSpeedOfLightRounded = 3.0e8;

/// One deterministic scalar channel: gain beta = |h|^2 and noise PSD N0.
/// The regular constructor enforces the physical bound beta <= 1 (a passive
/// channel cannot deliver more power than was transmitted); unchecked()
/// lifts that bound for asymptotic what-if studies.
class SisoLink {
 public:
  SisoLink(LinearGain beta, NoisePsd n0);
  static SisoLink unchecked(LinearGain beta, NoisePsd n0);

  LinearGain beta() const { return beta_; }
  NoisePsd n0() const { return n0_; }

 private:
  SisoLink(LinearGain beta, NoisePsd n0, bool physical);
  LinearGain beta_;
  NoisePsd n0_;
};

/// Bounded MIMO channel: antenna counts and the maximum squared singular
/// value of the channel matrix. Physical mode caps sigma_max_sq at 1.
class MimoConfig {
 public:
  MimoConfig(int tx_antennas, int rx_antennas, LinearGain sigma_max_sq);
  static MimoConfig unchecked(int tx_antennas, int rx_antennas, LinearGain sigma_max_sq);

  int tx_antennas() const { return tx_; }
  int rx_antennas() const { return rx_; }
  LinearGain sigma_max_sq() const { return sigma_max_sq_; }

 private:
  MimoConfig(int tx, int rx, LinearGain sigma_max_sq, bool physical);
  int tx_;
  int rx_;
  LinearGain sigma_max_sq_;
};

/// A transmitter enclosed by a sphere of receive antennas.
class SphereGeometry {
 public:
  SphereGeometry(double radius_m, double antenna_area_m2, double carrier_frequency_hz);

  double radius_m() const { return radius_m_; }
  double antenna_area_m2() const { return antenna_area_m2_; }
  double carrier_frequency_hz() const { return carrier_frequency_hz_; }

 private:
  double radius_m_;
  double antenna_area_m2_;
  double carrier_frequency_hz_;
};

/// Shannon capacity B*log2(1 + P*beta/(B*N0)) of the scalar channel.
DataRate siso_capacity(const SisoLink& link, PowerWatts p, BandwidthHz b);

/// Capacity over transmit power; requires p > 0. The p -> 0 supremum is
/// exposed separately through siso_ee_limit().
EnergyEfficiency siso_ee_tx_only(const SisoLink& link, PowerWatts p, BandwidthHz b);

/// The P/B -> 0 limit log2(e)*beta/N0, i.e. the reciprocal of the minimum
/// energy per bit N0*ln(2)/beta.
EnergyEfficiency siso_ee_limit(const SisoLink& link);

/// EE with co-channel interference treated as noise; alpha is the summed
/// gain from all interferers, each transmitting with the same power p.
EnergyEfficiency siso_ee_with_interference(const SisoLink& link, LinearGain alpha,
                                           PowerWatts p, BandwidthHz b);

/// Capacity limit log2(e)*P*beta/N0 as B -> infinity (0 for P = 0).
DataRate rate_limit_infinite_bandwidth(const SisoLink& link, PowerWatts p);

/// Capacity upper bound min(M,N)*B*log2(1 + P*sigma^2/(M*B*N0)), obtained
/// by setting every singular value equal to the largest one.
DataRate mimo_capacity_upper(const MimoConfig& cfg, NoisePsd n0, PowerWatts p, BandwidthHz b);

/// EE limit (min(M,N)/M) * log2(e)*sigma_max^2/N0.
EnergyEfficiency mimo_ee_limit(const MimoConfig& cfg, NoisePsd n0);

struct ConstantModulusSigma {
  LinearGain value;
  /// False when beta*max(M,N) exceeds 1, i.e. the scaling has left the
  /// physically reachable region.
  bool physical;
};

/// sigma_max^2 = beta*max(M,N) for a channel matrix whose entries all have
/// magnitude sqrt(beta).
ConstantModulusSigma sigma_max_sq_constant_modulus(LinearGain beta_per_element,
                                                   int tx_antennas, int rx_antennas);

/// log2(e)/N0: the EE limit with the channel gain at its physical bound 1.
EnergyEfficiency ultimate_ee(NoisePsd n0);

/// ceil(4*pi*r^2 / A): antennas needed to tile the sphere surface.
std::uint64_t sphere_antenna_count(const SphereGeometry& geom);

/// Effective aperture (c/f)^2/(4*pi) of a lossless isotropic antenna, m^2.
double isotropic_aperture_m2(double carrier_frequency_hz, double speed_of_light = kSpeedOfLight);

/// Friis free-space gain (lambda/(4*pi*d))^2 between isotropic antennas.
LinearGain free_space_gain(double distance_m, double carrier_frequency_hz,
                           double speed_of_light = kSpeedOfLight);

/// Distance at which free_space_gain() equals beta (inverse of the above).
double free_space_distance_m(LinearGain beta, double carrier_frequency_hz,
                             double speed_of_light = kSpeedOfLight);

}  // namespace eelim
