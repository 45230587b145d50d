#include "eelim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "eelim/circuit_models.hpp"
#include "eelim/link_limits.hpp"
#include "eelim/quantities.hpp"
#include "eelim/special_functions.hpp"

namespace eelim::verify {

namespace {

constexpr int kPropertyCases = 1000;

Check make(const char* id, int criterion, std::string description, double expected,
           double actual, double tolerance, const char* mode) {
  Check c;
  c.id = id;
  c.criterion = criterion;
  c.description = std::move(description);
  c.expected = expected;
  c.actual = actual;
  c.tolerance = tolerance;
  c.mode = mode;
  if (c.mode == "rel") {
    c.pass = std::abs(actual - expected) <= tolerance * std::abs(expected);
  } else if (c.mode == "abs") {
    c.pass = std::abs(actual - expected) <= tolerance;
  } else if (c.mode == "factor") {
    c.pass = actual > 0.0 && expected > 0.0 && actual / expected <= tolerance &&
             expected / actual <= tolerance;
  } else if (c.mode == "le") {
    c.pass = actual <= tolerance;
  } else if (c.mode == "ge") {
    c.pass = actual >= tolerance;
  } else {
    c.pass = actual == expected;
  }
  return c;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(std::log(lo), std::log(hi));
  return std::exp(dist(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

void criterion_1_fig1_endpoints(std::vector<Check>& out, NoisePsd n0) {
  const double low = siso_ee_limit(SisoLink(db_to_linear(-110.0), n0)).value();
  const double high = siso_ee_limit(SisoLink(db_to_linear(-50.0), n0)).value();
  out.push_back(make("1a", 1, "EE limit at beta=-110 dB", 3.624e9, low, 1e-3, "rel"));
  out.push_back(make("1b", 1, "EE limit at beta=-50 dB", 3.624e15, high, 1e-3, "rel"));
  out.push_back(make("1c", 1, "EE limit at beta=-110 dB vs rounded 3 Gbit/J", 3e9, low, 1.25,
                     "factor"));
  out.push_back(make("1d", 1, "EE limit at beta=-50 dB vs rounded 3 Pbit/J", 3e15, high, 1.25,
                     "factor"));
}

void criterion_2_ultimate(std::vector<Check>& out, NoisePsd n0) {
  const double ult = ultimate_ee(n0).value();
  out.push_back(make("2a", 2, "ultimate EE limit log2(e)/N0", 3.624e20, ult, 1e-3, "rel"));
  out.push_back(make("2b", 2, "ultimate EE limit vs rounded 10^20.6", std::pow(10.0, 20.6), ult,
                     0.10, "rel"));
}

void criterion_3_infinite_bandwidth(std::vector<Check>& out, NoisePsd n0) {
  const SisoLink link(db_to_linear(-75.0), n0);
  const double rate = rate_limit_infinite_bandwidth(link, dbm_to_watts(20.0)).value();
  out.push_back(make("3a", 3, "infinite-bandwidth rate at P=20 dBm, beta=-75 dB", 1.146e12, rate,
                     1e-3, "rel"));
  out.push_back(make("3b", 3, "infinite-bandwidth rate vs rounded 1 Tbit/s", 1e12, rate, 1.2,
                     "factor"));
}

void criterion_4_sphere(std::vector<Check>& out) {
  const double area = 0.1 * 0.1 / (4.0 * std::numbers::pi);
  const auto count = sphere_antenna_count(SphereGeometry(10.0, area, 3e9));
  out.push_back(make("4a", 4, "antennas to tile a 10 m sphere with 3 GHz isotropic apertures",
                     1579137.0, static_cast<double>(count), 0.0, "exact"));
  out.push_back(make("4b", 4, "sphere antenna count vs rounded 1.6 million", 1.6e6,
                     static_cast<double>(count), 0.02, "rel"));
}

void criterion_5_free_space(std::vector<Check>& out) {
  const double c = kSpeedOfLightRounded;
  const double g25 = linear_to_db(free_space_gain(2.5, 3e9, c));
  const double g80 = linear_to_db(free_space_gain(80.0, 3e9, c));
  const double g800 = linear_to_db(free_space_gain(800.0, 3e9, c));
  out.push_back(make("5a", 5, "free-space gain at 2.5 m, 3 GHz (dB)", -49.9, g25, 0.2, "abs"));
  out.push_back(make("5b", 5, "free-space gain at 80 m, 3 GHz (dB)", -80.0, g80, 0.2, "abs"));
  out.push_back(make("5c", 5, "free-space gain at 800 m, 3 GHz (dB)", -100.0, g800, 0.2, "abs"));
}

void criterion_6_siso_optimum(std::vector<Check>& out, NoisePsd n0) {
  const SisoLink link(db_to_linear(-80.0), n0);
  const CircuitParams cp(0.0, 1e-14, 1e-15);
  const OperatingPoint op = optimal_operating_point_siso(link, cp);
  const double snr_db = 10.0 * std::log10(op.snr);
  out.push_back(make("6a", 6, "max EE at beta=-80 dB, nu=1e-14, eta=1e-15", 2.93e12,
                     op.ee.value(), 0.05, "rel"));
  out.push_back(make("6b", 6, "max EE vs rounded 3 Tbit/J", 3e12, op.ee.value(), 0.05, "rel"));
  out.push_back(make("6c", 6, "optimal SNR (dB)", -6.35, snr_db, 0.5, "abs"));
  out.push_back(make("6d", 6, "optimal SNR vs rounded -6 dB", -6.0, snr_db, 0.5, "abs"));
  out.push_back(make("6e", 6, "optimal spectral efficiency (bit/s/Hz)", 0.3008,
                     op.se_bit_per_s_hz, 0.02, "rel"));
  out.push_back(make("6f", 6, "optimal spectral efficiency vs rounded 0.3", 0.3,
                     op.se_bit_per_s_hz, 0.02, "rel"));
}

void criterion_7_mimo_optimum(std::vector<Check>& out, NoisePsd n0) {
  const MimoConfig cfg(4, 4, LinearGain(1.0));
  const CircuitParams cp(0.0, 1e-14, 1e-15);
  const OperatingPoint op = optimal_operating_point_mimo(cfg, n0, cp);
  out.push_back(make("7a", 7, "max MIMO EE at sigma^2=1, nu=1e-14, eta=1e-15", 6.20e14,
                     op.ee.value(), 0.05, "rel"));
  out.push_back(
      make("7b", 7, "max MIMO EE vs rounded 0.6 Pbit/J", 6e14, op.ee.value(), 0.05, "rel"));
}

void criterion_8_oracle(std::vector<Check>& out, NoisePsd n0) {
  const SisoLink link(db_to_linear(-80.0), n0);
  const CircuitParams cp(0.0, 1e-14, 1e-15);
  const OperatingPoint op = optimal_operating_point_siso(link, cp);

  const auto eval = [&](double p, double b) {
    return ee_varying_circuit(link, PowerWatts(p), BandwidthHz(b), cp).value();
  };
  const int grid = 256;
  const auto start = std::chrono::steady_clock::now();
  const GridSearchResult best =
      grid_search_oracle(eval, Interval{1e-8, 1.0}, Interval{1e6, 1e13}, grid);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const double fraction = best.ee_bit_per_joule / op.ee.value();
  const double ratio_log_dist =
      std::abs(std::log10((best.p_watts / best.b_hz) / op.ratio_w_per_hz));
  const double power_axis_step = 8.0 / static_cast<double>(grid - 1);  // decades between points
  out.push_back(make("8a", 8, "256x256 lattice EE as a fraction of the closed form", 0.995,
                     fraction, 0.995, "ge"));
  out.push_back(make("8b", 8, "lattice maximizer P/B within one lattice step of the closed form "
                              "(log10 distance)",
                     power_axis_step, ratio_log_dist, power_axis_step, "le"));
  out.push_back(make("8c", 8, "oracle runtime (s)", 5.0, elapsed.count(), 5.0, "le"));
}

void criterion_9_properties(std::vector<Check>& out, NoisePsd n0) {
  // 9a: Lambert W inverse identity over points log-spaced in the offset
  // from the branch point, spanning [-1/e + 1e-6, 1e9].
  {
    double worst = 0.0;
    const double lo = 1e-6;
    const double hi = 1e9 + 1.0 / std::numbers::e;
    for (int i = 0; i < kPropertyCases; ++i) {
      const double t = lo * std::pow(hi / lo, static_cast<double>(i) / (kPropertyCases - 1));
      const double a = -1.0 / std::numbers::e + t;
      const double w = lambert_w0(a);
      const double residual = std::abs(w * std::exp(w) - a) / std::max(1.0, std::abs(a));
      worst = std::max(worst, residual);
    }
    out.push_back(make("9a", 9, "Lambert W inverse identity, 1000 log-spaced points (max "
                                "residual / max(1,|a|))",
                       1e-10, worst, 1e-10, "le"));
  }

  // 9b: EE strictly increasing in B and below the limit (tx-only model).
  {
    std::mt19937_64 rng(0x9b);
    int violations = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
      const SisoLink link(db_to_linear(uniform(rng, -110.0, -50.0)), n0);
      const PowerWatts p = dbm_to_watts(uniform(rng, -10.0, 30.0));
      const double b1 = log_uniform(rng, 1e6, 1e10);
      const double b2 = b1 * log_uniform(rng, 1.5, 100.0);
      const double e1 = siso_ee_tx_only(link, p, BandwidthHz(b1)).value();
      const double e2 = siso_ee_tx_only(link, p, BandwidthHz(b2)).value();
      const double lim = siso_ee_limit(link).value();
      if (!(e2 > e1) || !(e1 < lim) || !(e2 < lim)) ++violations;
    }
    out.push_back(make("9b", 9, "EE monotone in B and below the limit, 1000 random links "
                                "(violations)",
                       0.0, static_cast<double>(violations), 0.0, "le"));
  }

  // 9c: interference invariance at P/B = 1e-18. The 0.01% bound holds for
  // gains small enough that (P/B)*(beta/2 + alpha)/N0 stays below 1e-4;
  // the generator draws beta in [-110, -70] dB and alpha in [0, beta].
  {
    std::mt19937_64 rng(0x9c);
    double worst = 0.0;
    for (int i = 0; i < kPropertyCases; ++i) {
      const SisoLink link(db_to_linear(uniform(rng, -110.0, -70.0)), n0);
      const double alpha =
          (i % 10 == 0) ? 0.0 : link.beta().value() * log_uniform(rng, 1e-2, 1.0);
      const double b = log_uniform(rng, 1e6, 1e12);
      const double p = 1e-18 * b;
      const double ee =
          siso_ee_with_interference(link, LinearGain(alpha), PowerWatts(p), BandwidthHz(b))
              .value();
      worst = std::max(worst, std::abs(ee / siso_ee_limit(link).value() - 1.0));
    }
    out.push_back(make("9c", 9, "interference EE at P/B=1e-18 vs limit, 1000 random "
                                "(beta, alpha) (max |EE/limit - 1|)",
                       1e-4, worst, 1e-4, "le"));
  }

  // 9d: scaling eta by 100 leaves the maximizer bit-identical and strictly
  // lowers the maximum EE.
  {
    std::mt19937_64 rng(0x9d);
    int violations = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
      const SisoLink link(db_to_linear(uniform(rng, -110.0, -50.0)), n0);
      const double nu = log_uniform(rng, 1e-16, 1e-10);
      const double eta = log_uniform(rng, 1e-17, 1e-13);
      const OperatingPoint a = optimal_operating_point_siso(link, CircuitParams(0.0, nu, eta));
      const OperatingPoint b =
          optimal_operating_point_siso(link, CircuitParams(0.0, nu, eta * 100.0));
      const bool maximizer_identical = a.x == b.x && a.ratio_w_per_hz == b.ratio_w_per_hz &&
                                       a.snr == b.snr &&
                                       a.se_bit_per_s_hz == b.se_bit_per_s_hz;
      if (!maximizer_identical || !(b.ee.value() < a.ee.value())) ++violations;
    }
    out.push_back(make("9d", 9, "eta x100 leaves the maximizer exactly unchanged and lowers EE, "
                                "1000 random cases (violations)",
                       0.0, static_cast<double>(violations), 0.0, "le"));
  }

  // 9e: EE depends on (P, B) only through the ratio P/B.
  {
    std::mt19937_64 rng(0x9e);
    double worst = 0.0;
    for (int i = 0; i < kPropertyCases; ++i) {
      const SisoLink link(db_to_linear(uniform(rng, -110.0, -50.0)), n0);
      const double nu = log_uniform(rng, 1e-16, 1e-10);
      const double eta = log_uniform(rng, 1e-17, 1e-13);
      const CircuitParams cp(0.0, nu, eta);
      const OperatingPoint op = optimal_operating_point_siso(link, cp);
      const double b0 = log_uniform(rng, 1e6, 1e8);
      double lo = 0.0;
      double hi = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double b = b0 * std::pow(1e3, k);
        const double ee =
            ee_varying_circuit(link, PowerWatts(op.ratio_w_per_hz * b), BandwidthHz(b), cp)
                .value();
        lo = (k == 0) ? ee : std::min(lo, ee);
        hi = (k == 0) ? ee : std::max(hi, ee);
      }
      worst = std::max(worst, (hi - lo) / lo);
    }
    out.push_back(make("9e", 9, "EE agreement across three (P, B) pairs sharing the optimal "
                                "ratio, 1000 random cases (max relative spread)",
                       1e-12, worst, 1e-12, "le"));
  }

  // 9f: no random (P, B) beats the closed-form optimum.
  {
    std::mt19937_64 rng(0x9f);
    const SisoLink link(db_to_linear(-80.0), n0);
    const CircuitParams cp(0.0, 1e-14, 1e-15);
    const double ee_opt = optimal_operating_point_siso(link, cp).ee.value();
    double worst = -1.0;
    for (int i = 0; i < kPropertyCases; ++i) {
      const double p = log_uniform(rng, 1e-8, 1.0);
      const double b = log_uniform(rng, 1e6, 1e13);
      const double ee = ee_varying_circuit(link, PowerWatts(p), BandwidthHz(b), cp).value();
      worst = std::max(worst, (ee - ee_opt) / ee_opt);
    }
    out.push_back(make("9f", 9, "closed-form dominance over 1000 random (P, B) samples (max "
                                "relative excess)",
                       1e-9, worst, 1e-9, "le"));
  }
}

void criterion_10_fig3_convergence(std::vector<Check>& out, NoisePsd n0) {
  const SisoLink link_a(db_to_linear(-110.0), n0);
  const double r1 = siso_ee_tx_only(link_a, dbm_to_watts(20.0), BandwidthHz(1e9)).value() /
                    siso_ee_limit(link_a).value();
  const SisoLink link_b(db_to_linear(-90.0), n0);
  const double r2 = siso_ee_tx_only(link_b, dbm_to_watts(20.0), BandwidthHz(1e11)).value() /
                    siso_ee_limit(link_b).value();
  out.push_back(
      make("10a", 10, "EE/limit at beta=-110 dB, B=1 GHz, P=20 dBm", 0.892, r1, 0.001, "abs"));
  out.push_back(make("10b", 10, "same ratio recurs at beta=-90 dB, B=100 GHz (relative "
                                "difference)",
                     1e-6, std::abs(r2 / r1 - 1.0), 1e-6, "le"));
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int Report::criteria_count() const {
  std::set<int> ids;
  for (const Check& c : checks) ids.insert(c.criterion);
  return static_cast<int>(ids.size());
}

bool Report::criterion_pass(int criterion) const {
  bool any = false;
  for (const Check& c : checks) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.pass) return false;
  }
  return any;
}

Report run_all_checks() {
  const NoisePsd n0 = NoisePsd(dbm_to_watts(-174.0).value());
  Report report;
  criterion_1_fig1_endpoints(report.checks, n0);
  criterion_2_ultimate(report.checks, n0);
  criterion_3_infinite_bandwidth(report.checks, n0);
  criterion_4_sphere(report.checks);
  criterion_5_free_space(report.checks);
  criterion_6_siso_optimum(report.checks, n0);
  criterion_7_mimo_optimum(report.checks, n0);
  criterion_8_oracle(report.checks, n0);
  criterion_9_properties(report.checks, n0);
  criterion_10_fig3_convergence(report.checks, n0);
  return report;
}

}  // namespace eelim::verify
