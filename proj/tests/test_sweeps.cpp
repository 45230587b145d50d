#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "eelim/link_limits.hpp"
#include "eelim/sweeps.hpp"

using namespace eelim;
using namespace eelim::sweeps;

TEST_CASE("format_float gives 9 significant digits in scientific notation") {
  CHECK(format_float(3623886098.0151463) == "3.62388610e+09");
  CHECK(format_float(-6.35) == "-6.35000000e+00");
  CHECK(format_float(0.0) == "0.00000000e+00");
}

TEST_CASE("SweepSpec validation") {
  SweepSpec spec = SweepSpec::defaults(FigureId::fig1);
  CHECK_NOTHROW(spec.validate());
  spec.samples_per_axis = 1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  SweepSpec bad_range = SweepSpec::defaults(FigureId::fig1);
  bad_range.beta_db_min = -50.0;
  bad_range.beta_db_max = -110.0;
  CHECK_THROWS_AS(bad_range.validate(), std::invalid_argument);

  SweepSpec positive_db = SweepSpec::defaults(FigureId::fig1);
  positive_db.beta_db_max = 10.0;
  CHECK_THROWS_AS(positive_db.validate(), std::invalid_argument);

  CHECK_THROWS_AS(figure_from_string("fig2"), std::invalid_argument);
}

TEST_CASE("fig1 table matches the EE limit and distance anchors") {
  SweepSpec spec = SweepSpec::defaults(FigureId::fig1);
  spec.speed_of_light = kSpeedOfLightRounded;
  const SweepTable t = sweep_fig1(spec);

  CHECK(t.columns == std::vector<std::string>{"beta_db", "ee_limit_bit_per_joule",
                                              "free_space_distance_m"});
  REQUIRE(t.rows.size() == 121);  // -110 .. -50 dB in 0.5 dB steps
  CHECK(t.rows.front()[0] == -110.0);
  CHECK(t.rows.front()[1] == doctest::Approx(3623886098.0151463).epsilon(1e-9));
  CHECK(t.rows.back()[0] == -50.0);
  CHECK(t.rows.back()[1] == doctest::Approx(3623886098015146.0).epsilon(1e-9));

  const auto& row_m80 = t.rows.at(60);  // beta = -80 dB
  CHECK(row_m80[0] == -80.0);
  CHECK(row_m80[2] == doctest::Approx(79.57747154594767).epsilon(1e-9));
  CHECK(std::abs(row_m80[2] - 80.0) < 0.5);
}

TEST_CASE("fig1 CSV serialization is deterministic and carries metadata") {
  const SweepSpec spec = SweepSpec::defaults(FigureId::fig1);
  const std::string a = sweep_fig1(spec).to_csv();
  const std::string b = sweep_fig1(spec).to_csv();
  CHECK(a == b);
  CHECK(a.rfind("# tool = eelim", 0) == 0);
  CHECK(a.find("# assumption =") != std::string::npos);
  CHECK(a.find("3.62388610e+09") != std::string::npos);
  CHECK(a.find("beta_db,ee_limit_bit_per_joule,free_space_distance_m") != std::string::npos);
}

TEST_CASE("fig3 table hits the convergence ratio anchors") {
  const SweepSpec spec = SweepSpec::defaults(FigureId::fig3);
  const SweepTable t = sweep_fig3(spec);
  REQUIRE(t.rows.size() == 121);
  REQUIRE(t.columns.size() == 1 + 2 * spec.beta_db_set.size());
  CHECK(t.columns[1] == "ee_bit_per_joule_beta_m110db");
  CHECK(t.columns[2] == "limit_bit_per_joule_beta_m110db");

  // B = 1e9 lands on lattice index 60 of the default 1e6..1e12 range.
  const auto& row_1ghz = t.rows.at(60);
  CHECK(row_1ghz[0] == doctest::Approx(1e9).epsilon(1e-12));
  const double ratio_110 = row_1ghz[1] / row_1ghz[2];
  CHECK(ratio_110 == doctest::Approx(0.8921343385238241).epsilon(1e-9));

  // The same ratio recurs for beta = -90 dB at 100x the bandwidth.
  const auto& row_100ghz = t.rows.at(100);
  CHECK(row_100ghz[0] == doctest::Approx(1e11).epsilon(1e-12));
  const double ratio_90 = row_100ghz[3] / row_100ghz[4];
  CHECK(std::abs(ratio_90 / ratio_110 - 1.0) < 1e-6);

  // EE stays strictly below the limit everywhere.
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k + 1 < row.size(); k += 2) {
      CHECK(row[k + 1] < row[k + 2]);
    }
  }
}

TEST_CASE("fig4 locus carries the constant maximum EE and the rate endpoints") {
  const SweepSpec spec = SweepSpec::defaults(FigureId::fig4);
  const Fig4Tables tables = sweep_fig4(spec);

  REQUIRE(tables.locus.rows.size() == static_cast<std::size_t>(spec.samples_per_axis));
  REQUIRE(tables.ee_surface.rows.size() ==
          static_cast<std::size_t>(spec.samples_per_axis) * spec.samples_per_axis);

  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < tables.locus.rows.size(); ++i) {
    const double ee = tables.locus.rows[i][2];
    lo = (i == 0) ? ee : std::min(lo, ee);
    hi = (i == 0) ? ee : std::max(hi, ee);
  }
  CHECK((hi - lo) / lo < 1e-12);  // constant along the locus
  CHECK(tables.locus.rows.front()[2] == doctest::Approx(2931977867531.1094).epsilon(1e-9));
  CHECK(tables.locus.rows.front()[3] == doctest::Approx(301427234.64716125).epsilon(1e-9));
  CHECK(tables.locus.rows.back()[3] == doctest::Approx(3014272346471.6123).epsilon(1e-9));
}

TEST_CASE("fig4 surface maximizer sits on the locus within one lattice step") {
  const SweepSpec spec = SweepSpec::defaults(FigureId::fig4);
  const Fig4Tables tables = sweep_fig4(spec);
  const double ee_max_allowed = tables.locus.rows.front()[2] * (1.0 + 1e-9);

  double best_ee = -1.0;
  double best_p = 0.0;
  double best_b = 0.0;
  for (const auto& row : tables.ee_surface.rows) {
    CHECK(row[2] <= ee_max_allowed);
    if (row[2] > best_ee) {
      best_ee = row[2];
      best_p = row[0];
      best_b = row[1];
    }
  }
  const double locus_ratio = tables.locus.rows.front()[1] / tables.locus.rows.front()[0];
  const double p_axis_step_decades =
      std::log10(spec.p_max_watts / spec.p_min_watts) / (spec.samples_per_axis - 1);
  CHECK(std::abs(std::log10(best_p / (locus_ratio * best_b))) <= p_axis_step_decades);
}

TEST_CASE("run dispatches per figure") {
  CHECK(run(SweepSpec::defaults(FigureId::fig1)).size() == 1);
  CHECK(run(SweepSpec::defaults(FigureId::fig3)).size() == 1);
  const auto fig4 = run(SweepSpec::defaults(FigureId::fig4));
  REQUIRE(fig4.size() == 3);
  CHECK(fig4[0].name == "_ee_surface");
  CHECK(fig4[1].name == "_rate_surface");
  CHECK(fig4[2].name == "_locus");
}

TEST_CASE("plot scripts are self-contained matplotlib programs") {
  const SweepSpec f1 = SweepSpec::defaults(FigureId::fig1);
  const std::string s1 = plot_script(f1, {"fig1.csv"});
  CHECK(s1.find("matplotlib") != std::string::npos);
  CHECK(s1.find("fig1.csv") != std::string::npos);

  const SweepSpec f4 = SweepSpec::defaults(FigureId::fig4);
  CHECK_THROWS_AS(plot_script(f4, {"only_one.csv"}), std::invalid_argument);
  const std::string s4 = plot_script(f4, {"a.csv", "b.csv", "c.csv"});
  CHECK(s4.find("pcolormesh") != std::string::npos);
}
