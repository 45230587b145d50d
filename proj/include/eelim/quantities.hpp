#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace eelim {

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

inline void require_finite(double v, const char* name) {
  require(std::isfinite(v), std::string(name) + " must be finite");
}

}  // namespace detail

/// Dimensionless power ratio: channel gain, interference gain or squared
/// singular value. Ratios are non-negative; contexts that need a strictly
/// positive gain (a channel, a dB conversion) enforce that themselves.
class LinearGain {
 public:
  explicit LinearGain(double ratio) : value_(ratio) {
    detail::require_finite(ratio, "linear gain");
    detail::require(ratio >= 0.0, "linear gain must be >= 0");
  }
  double value() const { return value_; }

 private:
  double value_;
};

class PowerWatts {
 public:
  explicit PowerWatts(double watts) : value_(watts) {
    detail::require_finite(watts, "power");
    detail::require(watts >= 0.0, "power must be >= 0 W");
  }
  double value() const { return value_; }

 private:
  double value_;
};

class BandwidthHz {
 public:
  explicit BandwidthHz(double hz) : value_(hz) {
    detail::require_finite(hz, "bandwidth");
    detail::require(hz > 0.0, "bandwidth must be > 0 Hz");
  }
  double value() const { return value_; }

 private:
  double value_;
};

/// Noise power spectral density in W/Hz (-174 dBm/Hz at room temperature).
class NoisePsd {
 public:
  explicit NoisePsd(double w_per_hz) : value_(w_per_hz) {
    detail::require_finite(w_per_hz, "noise PSD");
    detail::require(w_per_hz > 0.0, "noise PSD must be > 0 W/Hz");
  }
  double value() const { return value_; }

 private:
  double value_;
};

class EnergyEfficiency {
 public:
  explicit EnergyEfficiency(double bit_per_joule) : value_(bit_per_joule) {
    detail::require_finite(bit_per_joule, "energy efficiency");
    detail::require(bit_per_joule >= 0.0, "energy efficiency must be >= 0 bit/Joule");
  }
  double value() const { return value_; }

 private:
  double value_;
};

class DataRate {
 public:
  explicit DataRate(double bit_per_s) : value_(bit_per_s) {
    detail::require_finite(bit_per_s, "data rate");
    detail::require(bit_per_s >= 0.0, "data rate must be >= 0 bit/s");
  }
  double value() const { return value_; }

 private:
  double value_;
};

// dB conversions live at the I/O boundary only; everything downstream
// computes in linear SI units.

inline LinearGain db_to_linear(double x_db) {
  detail::require_finite(x_db, "dB value");
  return LinearGain(std::pow(10.0, x_db / 10.0));
}

inline double linear_to_db(const LinearGain& g) {
  detail::require(g.value() > 0.0, "dB conversion needs a gain > 0");
  return 10.0 * std::log10(g.value());
}

inline PowerWatts dbm_to_watts(double x_dbm) {
  detail::require_finite(x_dbm, "dBm value");
  return PowerWatts(std::pow(10.0, (x_dbm - 30.0) / 10.0));
}

inline double watts_to_dbm(const PowerWatts& p) {
  detail::require(p.value() > 0.0, "dBm conversion needs a power > 0");
  return 10.0 * std::log10(p.value()) + 30.0;
}

}  // namespace eelim
