#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "eelim/quantities.hpp"

using namespace eelim;

TEST_CASE("db_to_linear anchors") {
  CHECK(db_to_linear(0.0).value() == 1.0);
  CHECK(db_to_linear(-110.0).value() == doctest::Approx(1e-11).epsilon(1e-12));
  CHECK(db_to_linear(-80.0).value() == doctest::Approx(1e-8).epsilon(1e-12));
  CHECK_THROWS_AS(db_to_linear(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(db_to_linear(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("linear_to_db anchors") {
  CHECK(linear_to_db(LinearGain(1.0)) == 0.0);
  CHECK(linear_to_db(LinearGain(0.2318)) == doctest::Approx(-6.348865683724228).epsilon(1e-12));
  CHECK(std::abs(linear_to_db(LinearGain(1e-5)) + 50.0) < 1e-9);
  CHECK_THROWS_AS(linear_to_db(LinearGain(0.0)), std::invalid_argument);
}

TEST_CASE("dbm_to_watts anchors") {
  CHECK(dbm_to_watts(20.0).value() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(dbm_to_watts(-174.0).value() == doctest::Approx(3.981071705534972e-21).epsilon(1e-12));
  CHECK(dbm_to_watts(30.0).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(dbm_to_watts(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK(std::abs(watts_to_dbm(dbm_to_watts(17.3)) - 17.3) < 1e-12);
}

TEST_CASE("dB round trip and monotonicity over [-200, 50]") {
  double previous = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = -200.0 + 250.0 * static_cast<double>(i) / 1000.0;
    const LinearGain g = db_to_linear(x);
    CHECK(std::abs(linear_to_db(g) - x) <= 1e-12);
    if (i > 0) CHECK(g.value() > previous);
    previous = g.value();
  }
}

TEST_CASE("type invariants reject bad values") {
  CHECK_THROWS_AS(LinearGain(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(LinearGain(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_NOTHROW(LinearGain(0.0));  // interference gain may be zero
  CHECK_THROWS_AS(PowerWatts(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(PowerWatts(std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK_NOTHROW(PowerWatts(0.0));
  CHECK_THROWS_AS(BandwidthHz(0.0), std::invalid_argument);
  CHECK_THROWS_AS(BandwidthHz(-1e6), std::invalid_argument);
  CHECK_THROWS_AS(NoisePsd(0.0), std::invalid_argument);
  CHECK_THROWS_AS(EnergyEfficiency(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(DataRate(-1.0), std::invalid_argument);
}
