#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eelim/circuit_models.hpp"
#include "eelim/link_limits.hpp"
#include "eelim/quantities.hpp"
#include "eelim/sweeps.hpp"
#include "eelim/verify.hpp"
#include "eelim/version.hpp"

namespace {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailure = 1,
  kUsage = 2,
  kDegenerateOptimum = 3,
  kIoError = 4,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double v) { return eelim::sweeps::format_float(v); }

std::string ee_pretty(double bit_per_joule) {
  struct Scale {
    double factor;
    const char* prefix;
  };
  static constexpr Scale kScales[] = {{1e18, "Ebit"}, {1e15, "Pbit"}, {1e12, "Tbit"},
                                      {1e9, "Gbit"},  {1e6, "Mbit"}, {1e3, "kbit"}};
  char buf[64];
  for (const auto& s : kScales) {
    if (bit_per_joule >= s.factor) {
      std::snprintf(buf, sizeof(buf), "~%.1f %s/Joule", bit_per_joule / s.factor, s.prefix);
      return buf;
    }
  }
  std::snprintf(buf, sizeof(buf), "%.4g bit/Joule", bit_per_joule);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string canonical_key(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return key;
}

// Flat key=value config support. File values are injected as long options
// for keys the user did not pass on the command line, so flags always win
// and unknown keys fail parsing like any unknown flag would.
std::vector<std::string> inject_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config requires a file path");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);

  std::set<std::string> given;
  for (const std::string& a : args) {
    if (a.rfind("--", 0) != 0) continue;
    const auto eq = a.find('=');
    given.insert(canonical_key(a.substr(2, eq == std::string::npos ? eq : eq - 2)));
  }

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value: " + stripped);
    }
    const std::string key = canonical_key(trim(stripped.substr(0, eq)));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value: " + stripped);
    }
    if (given.count(key)) continue;
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing output file: " + path);
}

// ---------------------------------------------------------------------------
// limit

struct LimitArgs {
  double beta = 0.0, beta_db = 0.0;
  double sigma_sq = 0.0, sigma_sq_db = 0.0;
  double n0_w_per_hz = 0.0, n0_dbm_hz = -174.0;
  int m = 1, n = 1;
  bool ultimate = false;
  bool unchecked = false;
  std::string format = "human";
  CLI::Option *o_beta = nullptr, *o_beta_db = nullptr, *o_sigma = nullptr, *o_sigma_db = nullptr,
              *o_n0 = nullptr;
};

int run_limit(const LimitArgs& a) {
  const bool has_beta = a.o_beta->count() > 0 || a.o_beta_db->count() > 0;
  const bool has_sigma = a.o_sigma->count() > 0 || a.o_sigma_db->count() > 0;
  if (static_cast<int>(has_beta) + static_cast<int>(has_sigma) +
          static_cast<int>(a.ultimate) != 1) {
    throw CLI::ValidationError(
        "limit", "give exactly one of --beta/--beta-db, --sigma-sq/--sigma-sq-db, --ultimate");
  }
  const eelim::NoisePsd n0(a.o_n0->count() > 0 ? a.n0_w_per_hz
                                               : eelim::dbm_to_watts(a.n0_dbm_hz).value());

  double value = 0.0;
  json inputs;
  inputs["n0_w_per_hz"] = n0.value();
  if (a.ultimate) {
    value = eelim::ultimate_ee(n0).value();
    inputs["mode"] = "ultimate";
  } else if (has_beta) {
    const eelim::LinearGain beta =
        a.o_beta->count() > 0 ? eelim::LinearGain(a.beta) : eelim::db_to_linear(a.beta_db);
    const eelim::SisoLink link = a.unchecked ? eelim::SisoLink::unchecked(beta, n0)
                                             : eelim::SisoLink(beta, n0);
    value = eelim::siso_ee_limit(link).value();
    inputs["mode"] = "siso";
    inputs["beta"] = beta.value();
  } else {
    const eelim::LinearGain sigma = a.o_sigma->count() > 0 ? eelim::LinearGain(a.sigma_sq)
                                                           : eelim::db_to_linear(a.sigma_sq_db);
    const eelim::MimoConfig cfg = a.unchecked
                                      ? eelim::MimoConfig::unchecked(a.m, a.n, sigma)
                                      : eelim::MimoConfig(a.m, a.n, sigma);
    value = eelim::mimo_ee_limit(cfg, n0).value();
    inputs["mode"] = "mimo";
    inputs["sigma_max_sq"] = sigma.value();
    inputs["tx_antennas"] = a.m;
    inputs["rx_antennas"] = a.n;
  }

  if (a.format == "json") {
    json out;
    out["ee_limit_bit_per_joule"] = value;
    out["pretty"] = ee_pretty(value);
    out["inputs"] = inputs;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "EE limit: " << sci(value) << " bit/Joule (" << ee_pretty(value) << ")\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// optimum

struct OptimumArgs {
  double beta = 0.0, beta_db = 0.0;
  double sigma_sq = 0.0, sigma_sq_db = 0.0;
  double n0_w_per_hz = 0.0, n0_dbm_hz = -174.0;
  double nu = 0.0, eta = 0.0;
  double bandwidth_hz = 0.0;
  int m = 1;
  bool unchecked = false;
  std::string format = "human";
  CLI::Option *o_beta = nullptr, *o_beta_db = nullptr, *o_sigma = nullptr, *o_sigma_db = nullptr,
              *o_n0 = nullptr, *o_bandwidth = nullptr;
};

int run_optimum(const OptimumArgs& a) {
  const bool has_beta = a.o_beta->count() > 0 || a.o_beta_db->count() > 0;
  const bool has_sigma = a.o_sigma->count() > 0 || a.o_sigma_db->count() > 0;
  if (static_cast<int>(has_beta) + static_cast<int>(has_sigma) != 1) {
    throw CLI::ValidationError("optimum",
                               "give exactly one of --beta/--beta-db or --sigma-sq/--sigma-sq-db");
  }
  const eelim::NoisePsd n0(a.o_n0->count() > 0 ? a.n0_w_per_hz
                                               : eelim::dbm_to_watts(a.n0_dbm_hz).value());
  const eelim::CircuitParams cp(0.0, a.nu, a.eta);

  eelim::OperatingPoint op;
  int streams = 1;
  if (has_beta) {
    const eelim::LinearGain beta =
        a.o_beta->count() > 0 ? eelim::LinearGain(a.beta) : eelim::db_to_linear(a.beta_db);
    const eelim::SisoLink link = a.unchecked ? eelim::SisoLink::unchecked(beta, n0)
                                             : eelim::SisoLink(beta, n0);
    op = eelim::optimal_operating_point_siso(link, cp);
  } else {
    const eelim::LinearGain sigma = a.o_sigma->count() > 0 ? eelim::LinearGain(a.sigma_sq)
                                                           : eelim::db_to_linear(a.sigma_sq_db);
    const eelim::MimoConfig cfg = a.unchecked
                                      ? eelim::MimoConfig::unchecked(a.m, a.m, sigma)
                                      : eelim::MimoConfig(a.m, a.m, sigma);
    op = eelim::optimal_operating_point_mimo(cfg, n0, cp);
    streams = a.m;
  }

  if (!op.has_finite_maximizer) {
    std::cerr << "degenerate optimum: with nu = 0 the EE has no finite maximizer; the supremum "
              << sci(op.ee.value()) << " bit/Joule is approached as P/B -> 0\n";
    return kDegenerateOptimum;
  }

  const double snr_db = 10.0 * std::log10(op.snr);
  const double ratio_dbm_per_mhz =
      eelim::watts_to_dbm(eelim::PowerWatts(op.ratio_w_per_hz * 1e6));
  json out;
  out["x"] = op.x;
  out["ratio_w_per_hz"] = op.ratio_w_per_hz;
  out["ratio_dbm_per_mhz"] = ratio_dbm_per_mhz;
  out["snr"] = op.snr;
  out["snr_db"] = snr_db;
  out["se_bit_per_s_hz"] = op.se_bit_per_s_hz;
  out["ee_bit_per_joule"] = op.ee.value();

  double p_watts = 0.0;
  double rate = 0.0;
  if (a.o_bandwidth->count() > 0) {
    const eelim::BandwidthHz b(a.bandwidth_hz);
    p_watts = op.ratio_w_per_hz * static_cast<double>(streams) * b.value();
    rate = eelim::rate_at_optimum(b, op).value();
    out["bandwidth_hz"] = b.value();
    out["p_watts"] = p_watts;
    out["rate_bit_per_s"] = rate;
  }

  if (a.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    char line[160];
    std::printf("x (auxiliary)       : %.6f\n", op.x);
    std::snprintf(line, sizeof(line), "optimal ratio       : %s W/Hz (%s = P/(M*B)%s)",
                  sci(op.ratio_w_per_hz).c_str(), has_sigma ? "z" : "P/B",
                  has_sigma ? "" : " with M = 1");
    std::printf("%s\n", line);
    std::printf("                      %.2f dBm per MHz\n", ratio_dbm_per_mhz);
    std::printf("optimal SNR         : %.6f (%.2f dB)\n", op.snr, snr_db);
    std::printf("spectral efficiency : %.6f bit/s/Hz\n", op.se_bit_per_s_hz);
    std::printf("max EE              : %s bit/Joule (%s)\n", sci(op.ee.value()).c_str(),
                ee_pretty(op.ee.value()).c_str());
    if (a.o_bandwidth->count() > 0) {
      std::printf("transmit power      : %s W (%.2f dBm)\n", sci(p_watts).c_str(),
                  eelim::watts_to_dbm(eelim::PowerWatts(p_watts)));
      std::printf("data rate           : %s bit/s\n", sci(rate).c_str());
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string figure;
  std::string out;
  int samples = 0;
  double beta_db_min = 0.0, beta_db_max = 0.0, beta_db_step = 0.0;
  std::vector<double> betas_db;
  double p_watts = 0.0, p_dbm = 0.0;
  double b_min_hz = 0.0, b_max_hz = 0.0;
  double p_min_watts = 0.0, p_max_watts = 0.0;
  double beta_db = 0.0;
  double nu = 0.0, eta = 0.0;
  double n0_w_per_hz = 0.0, n0_dbm_hz = -174.0;
  double c = eelim::kSpeedOfLight;
  bool rounded_c = false;
  bool plot = false;
  CLI::Option *o_samples = nullptr, *o_bmin = nullptr, *o_bmax = nullptr, *o_bstep = nullptr,
              *o_betas = nullptr, *o_p = nullptr, *o_p_dbm = nullptr, *o_bwmin = nullptr,
              *o_bwmax = nullptr, *o_pmin = nullptr, *o_pmax = nullptr, *o_beta_db = nullptr,
              *o_nu = nullptr, *o_eta = nullptr, *o_n0 = nullptr, *o_c = nullptr;
};

std::string strip_csv_suffix(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
    return path.substr(0, path.size() - 4);
  }
  return path;
}

int run_sweep(const SweepArgs& a) {
  namespace sw = eelim::sweeps;
  sw::SweepSpec spec = sw::SweepSpec::defaults(sw::figure_from_string(a.figure));
  if (a.o_samples->count()) spec.samples_per_axis = a.samples;
  if (a.o_bmin->count()) spec.beta_db_min = a.beta_db_min;
  if (a.o_bmax->count()) spec.beta_db_max = a.beta_db_max;
  if (a.o_bstep->count()) spec.beta_db_step = a.beta_db_step;
  if (a.o_betas->count()) spec.beta_db_set = a.betas_db;
  if (a.o_p->count()) spec.p_watts = a.p_watts;
  if (a.o_p_dbm->count()) spec.p_watts = eelim::dbm_to_watts(a.p_dbm).value();
  if (a.o_bwmin->count()) {
    spec.b_min_hz = a.b_min_hz;
    spec.fig4_b_min_hz = a.b_min_hz;
  }
  if (a.o_bwmax->count()) {
    spec.b_max_hz = a.b_max_hz;
    spec.fig4_b_max_hz = a.b_max_hz;
  }
  if (a.o_pmin->count()) spec.p_min_watts = a.p_min_watts;
  if (a.o_pmax->count()) spec.p_max_watts = a.p_max_watts;
  if (a.o_beta_db->count()) spec.beta_db = a.beta_db;
  if (a.o_nu->count()) spec.nu_watts_per_hz = a.nu;
  if (a.o_eta->count()) spec.eta_joule_per_bit = a.eta;
  spec.n0_w_per_hz = a.o_n0->count() > 0 ? a.n0_w_per_hz
                                         : eelim::dbm_to_watts(a.n0_dbm_hz).value();
  spec.speed_of_light = a.rounded_c ? eelim::kSpeedOfLightRounded : a.c;
  spec.output_path = a.out;

  const std::vector<sw::NamedTable> tables = sw::run(spec);
  std::vector<std::string> csv_paths;
  for (const sw::NamedTable& nt : tables) {
    const std::string path =
        nt.name.empty() ? a.out : strip_csv_suffix(a.out) + nt.name + ".csv";
    write_text_file(path, nt.table.to_csv());
    csv_paths.push_back(path);
    std::cout << "wrote " << nt.table.rows.size() << " rows to " << path << "\n";
  }
  if (a.plot) {
    const std::string script_path = strip_csv_suffix(a.out) + ".py";
    write_text_file(script_path, sw::plot_script(spec, csv_paths));
    std::cout << "wrote plot script to " << script_path << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(bool as_json) {
  const eelim::verify::Report report = eelim::verify::run_all_checks();
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"check_id", c.id},
                        {"description", c.description},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    json out;
    out["all_pass"] = report.all_pass();
    out["checks"] = checks;
    std::cout << out.dump(2) << "\n";
  } else {
    int passed = 0;
    for (const auto& c : report.checks) {
      if (c.pass) ++passed;
      std::printf("[%s] %-3s %s: expected=%s actual=%s (%s tol %s)\n",
                  c.pass ? "PASS" : "FAIL", c.id.c_str(), c.description.c_str(),
                  sci(c.expected).c_str(), sci(c.actual).c_str(), c.mode.c_str(),
                  sci(c.tolerance).c_str());
    }
    std::printf("%d/%zu checks passed\n", passed, report.checks.size());
  }
  return report.all_pass() ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = inject_config(args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{std::string("eelim ") + eelim::kVersion +
               " - physical limits on the energy efficiency of wireless links"};
  app.require_subcommand(1);
  int rc = kOk;

  // limit ------------------------------------------------------------------
  LimitArgs la;
  CLI::App* limit = app.add_subcommand("limit", "EE limit of a link (bit/Joule)");
  la.o_beta = limit->add_option("--beta", la.beta, "channel gain (linear)");
  la.o_beta_db = limit->add_option("--beta-db", la.beta_db, "channel gain (dB)");
  la.o_beta->excludes(la.o_beta_db);
  la.o_sigma = limit->add_option("--sigma-sq", la.sigma_sq, "max squared singular value (linear)");
  la.o_sigma_db = limit->add_option("--sigma-sq-db", la.sigma_sq_db,
                                    "max squared singular value (dB)");
  la.o_sigma->excludes(la.o_sigma_db);
  limit->add_flag("--ultimate", la.ultimate, "EE limit with the channel gain at its bound 1");
  limit->add_option("--m,-M", la.m, "transmit antennas")->check(CLI::PositiveNumber);
  limit->add_option("--n,-N", la.n, "receive antennas")->check(CLI::PositiveNumber);
  la.o_n0 = limit->add_option("--n0", la.n0_w_per_hz, "noise PSD (W/Hz)");
  CLI::Option* la_n0_dbm =
      limit->add_option("--n0-dbm-hz", la.n0_dbm_hz, "noise PSD (dBm/Hz)")->capture_default_str();
  la.o_n0->excludes(la_n0_dbm);
  limit->add_flag("--unchecked", la.unchecked, "permit gains above the physical bound 1");
  limit->add_option("--format", la.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"human", "json"}));
  limit->callback([&]() { rc = run_limit(la); });

  // optimum ----------------------------------------------------------------
  OptimumArgs oa;
  CLI::App* optimum =
      app.add_subcommand("optimum", "EE-optimal P/B operating point (closed form)");
  oa.o_beta = optimum->add_option("--beta", oa.beta, "channel gain (linear)");
  oa.o_beta_db = optimum->add_option("--beta-db", oa.beta_db, "channel gain (dB)");
  oa.o_beta->excludes(oa.o_beta_db);
  oa.o_sigma =
      optimum->add_option("--sigma-sq", oa.sigma_sq, "max squared singular value (linear)");
  oa.o_sigma_db = optimum->add_option("--sigma-sq-db", oa.sigma_sq_db,
                                      "max squared singular value (dB)");
  oa.o_sigma->excludes(oa.o_sigma_db);
  optimum->add_option("--m,-M", oa.m, "antennas per side (MIMO, M = N)")
      ->check(CLI::PositiveNumber);
  optimum->add_option("--nu", oa.nu, "per-sample processing energy (W/Hz)")->required();
  optimum->add_option("--eta", oa.eta, "per-bit coding energy (J/bit)")->capture_default_str();
  oa.o_n0 = optimum->add_option("--n0", oa.n0_w_per_hz, "noise PSD (W/Hz)");
  CLI::Option* oa_n0_dbm =
      optimum->add_option("--n0-dbm-hz", oa.n0_dbm_hz, "noise PSD (dBm/Hz)")->capture_default_str();
  oa.o_n0->excludes(oa_n0_dbm);
  oa.o_bandwidth =
      optimum->add_option("--bandwidth", oa.bandwidth_hz, "report P and rate for this B (Hz)");
  optimum->add_flag("--unchecked", oa.unchecked, "permit gains above the physical bound 1");
  optimum->add_option("--format", oa.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"human", "json"}));
  optimum->callback([&]() { rc = run_optimum(oa); });

  // sweep ------------------------------------------------------------------
  SweepArgs sa;
  CLI::App* sweep = app.add_subcommand("sweep", "regenerate a figure as CSV data");
  sweep->add_option("--figure", sa.figure, "fig1, fig3 or fig4")->required();
  sweep->add_option("--out", sa.out, "output CSV path (fig4: path prefix)")->required();
  sa.o_samples = sweep->add_option("--samples", sa.samples, "samples per axis");
  sa.o_bmin = sweep->add_option("--beta-db-min", sa.beta_db_min, "fig1: gain axis start (dB)");
  sa.o_bmax = sweep->add_option("--beta-db-max", sa.beta_db_max, "fig1: gain axis end (dB)");
  sa.o_bstep = sweep->add_option("--beta-db-step", sa.beta_db_step, "fig1: gain axis step (dB)");
  sa.o_betas = sweep->add_option("--betas-db", sa.betas_db, "fig3: gain set (dB)");
  sa.o_p = sweep->add_option("--p", sa.p_watts, "fig3: transmit power (W)");
  sa.o_p_dbm = sweep->add_option("--p-dbm", sa.p_dbm, "fig3: transmit power (dBm)");
  sa.o_p->excludes(sa.o_p_dbm);
  sa.o_bwmin = sweep->add_option("--b-min", sa.b_min_hz, "bandwidth axis start (Hz)");
  sa.o_bwmax = sweep->add_option("--b-max", sa.b_max_hz, "bandwidth axis end (Hz)");
  sa.o_pmin = sweep->add_option("--p-min", sa.p_min_watts, "fig4: power axis start (W)");
  sa.o_pmax = sweep->add_option("--p-max", sa.p_max_watts, "fig4: power axis end (W)");
  sa.o_beta_db = sweep->add_option("--beta-db", sa.beta_db, "fig4: channel gain (dB)");
  sa.o_nu = sweep->add_option("--nu", sa.nu, "fig4: per-sample processing energy (W/Hz)");
  sa.o_eta = sweep->add_option("--eta", sa.eta, "fig4: per-bit coding energy (J/bit)");
  sa.o_n0 = sweep->add_option("--n0", sa.n0_w_per_hz, "noise PSD (W/Hz)");
  CLI::Option* sa_n0_dbm =
      sweep->add_option("--n0-dbm-hz", sa.n0_dbm_hz, "noise PSD (dBm/Hz)")->capture_default_str();
  sa.o_n0->excludes(sa_n0_dbm);
  sa.o_c = sweep->add_option("--c", sa.c, "speed of light (m/s)")->capture_default_str();
  sweep->add_flag("--rounded-c", sa.rounded_c, "use c = 3e8 m/s exactly");
  sweep->add_flag("--plot-script", sa.plot, "also write a matplotlib script");
  sweep->callback([&]() { rc = run_sweep(sa); });

  // verify -----------------------------------------------------------------
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "run the numeric regression suite");
  verify->add_flag("--json", verify_json, "machine-readable report");
  verify->callback([&]() { rc = run_verify(verify_json); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailure;
  }
  return rc;
}
