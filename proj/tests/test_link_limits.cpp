#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eelim/link_limits.hpp"
#include "eelim/quantities.hpp"

using namespace eelim;

namespace {
const NoisePsd kN0(3.981071705534972e-21);  // -174 dBm/Hz
}

TEST_CASE("physical mode rejects gains above 1, unchecked permits them") {
  CHECK_THROWS_AS(SisoLink(LinearGain(1.5), kN0), std::invalid_argument);
  CHECK_NOTHROW(SisoLink::unchecked(LinearGain(1.5), kN0));
  CHECK_NOTHROW(SisoLink(LinearGain(1.0), kN0));
  CHECK_THROWS_AS(SisoLink(LinearGain(0.0), kN0), std::invalid_argument);
  CHECK_THROWS_AS(MimoConfig(2, 2, LinearGain(1.0001)), std::invalid_argument);
  CHECK_NOTHROW(MimoConfig::unchecked(2, 2, LinearGain(10.0)));
  CHECK_THROWS_AS(MimoConfig(0, 2, LinearGain(0.5)), std::invalid_argument);
}

TEST_CASE("siso_capacity anchors") {
  const SisoLink link(LinearGain(1e-8), kN0);
  CHECK(siso_capacity(link, PowerWatts(0.0), BandwidthHz(1e7)).value() == 0.0);
  CHECK(siso_capacity(link, PowerWatts(0.1), BandwidthHz(1e7)).value() ==
        doctest::Approx(146165410.51085237).epsilon(1e-12));
  const SisoLink far(LinearGain(1e-11), kN0);
  CHECK(siso_capacity(far, PowerWatts(0.1), BandwidthHz(1e9)).value() ==
        doctest::Approx(323299322.6938424).epsilon(1e-12));
}

TEST_CASE("siso_ee_tx_only anchors and limit bound") {
  const SisoLink link(LinearGain(1e-8), kN0);
  CHECK(siso_ee_tx_only(link, PowerWatts(0.1), BandwidthHz(1e7)).value() ==
        doctest::Approx(1461654105.1085236).epsilon(1e-12));
  CHECK_THROWS_AS(siso_ee_tx_only(link, PowerWatts(0.0), BandwidthHz(1e7)),
                  std::invalid_argument);
  // Always below the limit, and within 0.01% of it at P/B = 1e-15 W/Hz.
  const SisoLink far(LinearGain(1e-11), kN0);
  const double ratio = siso_ee_tx_only(far, PowerWatts(1e-6), BandwidthHz(1e9)).value() /
                       siso_ee_limit(far).value();
  CHECK(ratio < 1.0);
  CHECK(std::abs(ratio - 1.0) < 1e-4);
}

TEST_CASE("siso_ee_limit anchors and scaling") {
  CHECK(siso_ee_limit(SisoLink(LinearGain(1e-11), kN0)).value() ==
        doctest::Approx(3623886098.0151463).epsilon(1e-12));
  CHECK(siso_ee_limit(SisoLink(LinearGain(1e-5), kN0)).value() ==
        doctest::Approx(3623886098015146.0).epsilon(1e-12));
  CHECK(siso_ee_limit(SisoLink(LinearGain(1.0), kN0)).value() == ultimate_ee(kN0).value());
  // Linear in beta and inversely proportional to N0, exactly.
  const double base = siso_ee_limit(SisoLink(LinearGain(1e-8), kN0)).value();
  CHECK(siso_ee_limit(SisoLink(LinearGain(2e-8), kN0)).value() == 2.0 * base);
  CHECK(siso_ee_limit(SisoLink(LinearGain(1e-8), NoisePsd(2.0 * kN0.value()))).value() ==
        base / 2.0);
}

TEST_CASE("interference EE reduces to tx-only at alpha = 0") {
  const SisoLink link(LinearGain(1e-8), kN0);
  const PowerWatts p(0.1);
  const BandwidthHz b(1e7);
  CHECK(siso_ee_with_interference(link, LinearGain(0.0), p, b).value() ==
        siso_ee_tx_only(link, p, b).value());
}

TEST_CASE("interference EE anchor and limit invariance") {
  const SisoLink link(LinearGain(1e-8), kN0);
  CHECK(siso_ee_with_interference(link, LinearGain(1e-9), PowerWatts(0.1), BandwidthHz(1e7))
            .value() == doctest::Approx(345890959.81328404).epsilon(1e-12));
  // At P/B = 1e-18 W/Hz the interference term vanishes from the limit.
  const double ee = siso_ee_with_interference(link, LinearGain(1e-9), PowerWatts(1e-9),
                                              BandwidthHz(1e9))
                        .value();
  CHECK(std::abs(ee / siso_ee_limit(link).value() - 1.0) < 1e-4);
}

TEST_CASE("rate_limit_infinite_bandwidth anchors") {
  const SisoLink link(db_to_linear(-75.0), kN0);
  CHECK(rate_limit_infinite_bandwidth(link, dbm_to_watts(20.0)).value() ==
        doctest::Approx(1145973405074.8054).epsilon(1e-12));
  CHECK(rate_limit_infinite_bandwidth(link, PowerWatts(0.0)).value() == 0.0);
  CHECK(rate_limit_infinite_bandwidth(SisoLink(LinearGain(1e-8), kN0), PowerWatts(1.0)).value() ==
        doctest::Approx(3623886098015.146).epsilon(1e-12));
}

TEST_CASE("mimo_capacity_upper anchors") {
  // M = N = 1 with sigma^2 = beta reduces bit-identically to the scalar case.
  const MimoConfig single(1, 1, LinearGain(1e-8));
  const SisoLink link(LinearGain(1e-8), kN0);
  CHECK(mimo_capacity_upper(single, kN0, PowerWatts(0.1), BandwidthHz(1e7)).value() ==
        siso_capacity(link, PowerWatts(0.1), BandwidthHz(1e7)).value());

  const MimoConfig four(4, 4, LinearGain(1.0));
  CHECK(mimo_capacity_upper(four, kN0, PowerWatts(0.1), BandwidthHz(1e7)).value() ==
        doctest::Approx(1567676335.0642235).epsilon(1e-12));

  const MimoConfig rect(2, 8, LinearGain(1.0));
  CHECK(mimo_capacity_upper(rect, kN0, PowerWatts(0.0), BandwidthHz(1e7)).value() == 0.0);
}

TEST_CASE("mimo dominance over the scalar channel") {
  // sigma^2 = 1, M = N upper-bounds any physical scalar capacity at equal P, B.
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> beta_db(-110.0, 0.0);
  const MimoConfig cfg(4, 4, LinearGain(1.0));
  for (int i = 0; i < 100; ++i) {
    const SisoLink link(db_to_linear(beta_db(rng)), kN0);
    const PowerWatts p(0.1);
    const BandwidthHz b(1e8);
    CHECK(mimo_capacity_upper(cfg, kN0, p, b).value() >= siso_capacity(link, p, b).value());
  }
}

TEST_CASE("mimo_ee_limit anchors") {
  CHECK(mimo_ee_limit(MimoConfig(4, 4, LinearGain(1.0)), kN0).value() ==
        ultimate_ee(kN0).value());
  CHECK(mimo_ee_limit(MimoConfig(2, 1, LinearGain(1.0)), kN0).value() ==
        0.5 * ultimate_ee(kN0).value());
  CHECK(mimo_ee_limit(MimoConfig(1, 1, LinearGain(1e-8)), kN0).value() ==
        siso_ee_limit(SisoLink(LinearGain(1e-8), kN0)).value());
}

TEST_CASE("sigma_max_sq_constant_modulus") {
  const auto small = sigma_max_sq_constant_modulus(LinearGain(1e-8), 64, 1);
  CHECK(small.value.value() == doctest::Approx(6.4e-7).epsilon(1e-15));
  CHECK(small.physical);

  const auto big = sigma_max_sq_constant_modulus(LinearGain(1e-2), 1000, 1);
  CHECK(big.value.value() == doctest::Approx(10.0).epsilon(1e-15));
  CHECK_FALSE(big.physical);

  const auto boundary = sigma_max_sq_constant_modulus(LinearGain(0.5), 2, 2);
  CHECK(boundary.value.value() == 1.0);
  CHECK(boundary.physical);
}

TEST_CASE("ultimate_ee anchor") {
  CHECK(ultimate_ee(kN0).value() == doctest::Approx(3.623886098015146e20).epsilon(1e-12));
  CHECK(std::log10(ultimate_ee(kN0).value()) == doctest::Approx(20.559).epsilon(1e-4));
  CHECK(ultimate_ee(NoisePsd(2.0 * kN0.value())).value() == ultimate_ee(kN0).value() / 2.0);
}

TEST_CASE("sphere_antenna_count anchors") {
  const double aperture_3ghz = 0.1 * 0.1 / (4.0 * std::numbers::pi);
  CHECK(sphere_antenna_count(SphereGeometry(10.0, aperture_3ghz, 3e9)) == 1579137);
  CHECK(sphere_antenna_count(SphereGeometry(20.0, aperture_3ghz, 3e9)) == 6316547);
  CHECK(sphere_antenna_count(SphereGeometry(1.0, 4.0 * std::numbers::pi, 3e9)) == 1);
  CHECK_THROWS_AS(SphereGeometry(0.0, 1.0, 3e9), std::invalid_argument);
  CHECK_THROWS_AS(SphereGeometry(1.0, -1.0, 3e9), std::invalid_argument);
}

TEST_CASE("sphere count never under-covers the surface") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_r(-1.0, 3.0);
  std::uniform_real_distribution<double> log_a(-6.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double r = std::pow(10.0, log_r(rng));
    const double a = std::pow(10.0, log_a(rng));
    const SphereGeometry geom(r, a, 3e9);
    const double covered = static_cast<double>(sphere_antenna_count(geom)) * a;
    CHECK(covered >= 4.0 * std::numbers::pi * r * r * (1.0 - 1e-12));
  }
}

TEST_CASE("isotropic_aperture anchors") {
  CHECK(isotropic_aperture_m2(3e9, kSpeedOfLightRounded) ==
        doctest::Approx(0.1 * 0.1 / (4.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(isotropic_aperture_m2(3e9) == doctest::Approx(7.947140361831821e-4).epsilon(1e-12));
  CHECK(isotropic_aperture_m2(6e9) ==
        doctest::Approx(isotropic_aperture_m2(3e9) / 4.0).epsilon(1e-14));
  CHECK(isotropic_aperture_m2(3e8) ==
        doctest::Approx(isotropic_aperture_m2(3e9) * 100.0).epsilon(1e-12));
}

TEST_CASE("free_space_gain anchors at 3 GHz with c = 3e8") {
  const double c = kSpeedOfLightRounded;
  CHECK(free_space_gain(2.5, 3e9, c).value() ==
        doctest::Approx(1.0132118364233778e-5).epsilon(1e-12));
  CHECK(linear_to_db(free_space_gain(2.5, 3e9, c)) == doctest::Approx(-49.943).epsilon(1e-4));
  CHECK(linear_to_db(free_space_gain(80.0, 3e9, c)) == doctest::Approx(-80.046).epsilon(1e-4));
  CHECK(linear_to_db(free_space_gain(800.0, 3e9, c)) == doctest::Approx(-100.046).epsilon(1e-4));
}

TEST_CASE("free_space_distance inverts free_space_gain") {
  CHECK(free_space_distance_m(db_to_linear(-80.0), 3e9, kSpeedOfLightRounded) ==
        doctest::Approx(79.57747154594767).epsilon(1e-12));
  for (double d : {0.5, 2.5, 80.0, 800.0, 12345.0}) {
    const LinearGain g = free_space_gain(d, 3e9);
    CHECK(free_space_distance_m(g, 3e9) == doctest::Approx(d).epsilon(1e-12));
  }
}
