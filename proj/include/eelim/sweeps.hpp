#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eelim/circuit_models.hpp"
#include "eelim/link_limits.hpp"

namespace eelim::sweeps {

enum class FigureId { fig1, fig3, fig4 };

const char* to_string(FigureId id);
FigureId figure_from_string(const std::string& name);

/// Tabular sweep output: ordered metadata block, column names, numeric
/// rows. Serialization is deterministic (fixed order, fixed formatting), so
/// identical inputs give byte-identical CSV files.
struct SweepTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
  void write_csv(std::ostream& os) const;
  std::string to_csv() const;
};

/// Scientific notation with 9 significant digits; the one float format used
/// in every CSV cell and metadata value.
std::string format_float(double v);

/// All knobs for one sweep run. defaults(figure) fills the ranges each
/// figure was designed with; unused fields are ignored by the other
/// figures.
struct SweepSpec {
  FigureId figure_id = FigureId::fig1;

  // fig1: EE limit and free-space distance vs channel gain
  double beta_db_min = -110.0;
  double beta_db_max = -50.0;
  double beta_db_step = 0.5;

  // fig3: EE vs bandwidth for a set of channel gains at fixed power
  std::vector<double> beta_db_set{-110.0, -90.0, -70.0, -50.0};
  double p_watts = 0.1;  // 20 dBm
  double b_min_hz = 1e6;
  double b_max_hz = 1e12;

  // fig4: EE / rate surfaces over (P, B) plus the optimal-ratio locus
  double beta_db = -80.0;
  double p_min_watts = 1e-5;
  double p_max_watts = 1e1;
  double fig4_b_min_hz = 1e9;
  double fig4_b_max_hz = 1e13;
  double nu_watts_per_hz = 1e-14;
  double eta_joule_per_bit = 1e-15;

  int samples_per_axis = 121;
  double n0_w_per_hz = 3.981071705534972e-21;  // -174 dBm/Hz
  double carrier_frequency_hz = 3e9;
  double speed_of_light = kSpeedOfLight;
  std::string output_path;

  static SweepSpec defaults(FigureId id);
  void validate() const;
};

/// EE limit vs channel gain, with the free-space distance that produces
/// each gain. Columns: beta_db, ee_limit_bit_per_joule,
/// free_space_distance_m.
SweepTable sweep_fig1(const SweepSpec& spec);

/// EE vs bandwidth at fixed transmit power, one EE column and one limit
/// column per channel gain. Columns: bandwidth_hz, then
/// ee_bit_per_joule_<tag> / limit_bit_per_joule_<tag> per gain.
SweepTable sweep_fig3(const SweepSpec& spec);

struct Fig4Tables {
  SweepTable ee_surface;    // p_watts, bandwidth_hz, ee_bit_per_joule
  SweepTable rate_surface;  // p_watts, bandwidth_hz, rate_bit_per_s
  SweepTable locus;         // bandwidth_hz, p_watts, ee_bit_per_joule, rate_bit_per_s
};

/// EE and rate over a log-spaced (P, B) lattice plus the optimal-ratio
/// locus along which the EE maximum is attained.
Fig4Tables sweep_fig4(const SweepSpec& spec);

struct NamedTable {
  std::string name;  // output file suffix, e.g. "" or "_locus"
  SweepTable table;
};

/// Dispatch on spec.figure_id; fig4 yields three tables, the others one.
std::vector<NamedTable> run(const SweepSpec& spec);

/// Self-contained matplotlib script that reads the generated CSV file(s)
/// and reproduces the figure with log-scaled axes.
std::string plot_script(const SweepSpec& spec, const std::vector<std::string>& csv_paths);

}  // namespace eelim::sweeps
