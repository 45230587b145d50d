#include "eelim/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "eelim/version.hpp"

namespace eelim::sweeps {

namespace {

std::string db_tag(double db) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", db);
  std::string tag(buf);
  for (char& c : tag) {
    if (c == '-') c = 'm';
    if (c == '.') c = 'p';
  }
  return tag + "db";
}

double log_point(double lo, double hi, int i, int samples) {
  const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
  return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * t);
}

void add_common_meta(SweepTable& t, const SweepSpec& spec) {
  t.add_meta("tool", std::string("eelim ") + kVersion);
  t.add_meta("figure", to_string(spec.figure_id));
  t.add_meta("n0_w_per_hz", spec.n0_w_per_hz);
}

}  // namespace

const char* to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
  }
  return "unknown";
}

FigureId figure_from_string(const std::string& name) {
  if (name == "fig1") return FigureId::fig1;
  if (name == "fig3") return FigureId::fig3;
  if (name == "fig4") return FigureId::fig4;
  throw std::invalid_argument("unknown figure id: " + name + " (expected fig1, fig3 or fig4)");
}

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

void SweepTable::add_meta(const std::string& key, const std::string& value) {
  metadata.emplace_back(key, value);
}

void SweepTable::add_meta(const std::string& key, double value) {
  metadata.emplace_back(key, format_float(value));
}

void SweepTable::write_csv(std::ostream& os) const {
  for (const auto& [key, value] : metadata) {
    os << "# " << key << " = " << value << "\n";
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    os << (i == 0 ? "" : ",") << columns[i];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i == 0 ? "" : ",") << format_float(row[i]);
    }
    os << "\n";
  }
}

std::string SweepTable::to_csv() const {
  std::ostringstream oss;
  write_csv(oss);
  return oss.str();
}

SweepSpec SweepSpec::defaults(FigureId id) {
  SweepSpec spec;
  spec.figure_id = id;
  if (id == FigureId::fig4) {
    spec.samples_per_axis = 61;
  }
  return spec;
}

void SweepSpec::validate() const {
  detail::require(samples_per_axis >= 2, "samples_per_axis must be >= 2");
  detail::require(n0_w_per_hz > 0.0, "n0 must be > 0 W/Hz");
  switch (figure_id) {
    case FigureId::fig1:
      detail::require(beta_db_min < beta_db_max, "beta_db range must be ordered");
      detail::require(beta_db_min >= -200.0 && beta_db_max <= 0.0,
                      "beta_db range must lie within [-200, 0] dB");
      detail::require(beta_db_step > 0.0, "beta_db_step must be > 0");
      break;
    case FigureId::fig3:
      detail::require(!beta_db_set.empty(), "beta_db_set must not be empty");
      for (double db : beta_db_set) {
        detail::require(db <= 0.0, "beta_db_set entries must be <= 0 dB");
      }
      detail::require(p_watts > 0.0, "p_watts must be > 0");
      detail::require(b_min_hz > 0.0 && b_min_hz < b_max_hz, "bandwidth range must be ordered");
      break;
    case FigureId::fig4:
      detail::require(beta_db <= 0.0, "beta_db must be <= 0 dB");
      detail::require(p_min_watts > 0.0 && p_min_watts < p_max_watts,
                      "power range must be ordered");
      detail::require(fig4_b_min_hz > 0.0 && fig4_b_min_hz < fig4_b_max_hz,
                      "bandwidth range must be ordered");
      detail::require(nu_watts_per_hz >= 0.0 && eta_joule_per_bit >= 0.0,
                      "nu and eta must be >= 0");
      break;
  }
}

SweepTable sweep_fig1(const SweepSpec& spec) {
  spec.validate();
  const NoisePsd n0(spec.n0_w_per_hz);

  SweepTable t;
  add_common_meta(t, spec);
  t.add_meta("beta_db_min", spec.beta_db_min);
  t.add_meta("beta_db_max", spec.beta_db_max);
  t.add_meta("beta_db_step", spec.beta_db_step);
  t.add_meta("carrier_frequency_hz", spec.carrier_frequency_hz);
  t.add_meta("speed_of_light_m_per_s", spec.speed_of_light);
  t.add_meta("assumption",
             "distance column assumes free-space propagation between lossless isotropic "
             "antennas at carrier_frequency_hz");
  t.columns = {"beta_db", "ee_limit_bit_per_joule", "free_space_distance_m"};

  const int n =
      static_cast<int>(std::floor((spec.beta_db_max - spec.beta_db_min) / spec.beta_db_step +
                                  1e-9)) +
      1;
  for (int i = 0; i < n; ++i) {
    const double beta_db = spec.beta_db_min + spec.beta_db_step * static_cast<double>(i);
    const LinearGain beta = db_to_linear(beta_db);
    const SisoLink link(beta, n0);
    t.rows.push_back({beta_db, siso_ee_limit(link).value(),
                      free_space_distance_m(beta, spec.carrier_frequency_hz,
                                            spec.speed_of_light)});
  }
  return t;
}

SweepTable sweep_fig3(const SweepSpec& spec) {
  spec.validate();
  const NoisePsd n0(spec.n0_w_per_hz);
  const PowerWatts p(spec.p_watts);

  SweepTable t;
  add_common_meta(t, spec);
  t.add_meta("p_watts", spec.p_watts);
  t.add_meta("b_min_hz", spec.b_min_hz);
  t.add_meta("b_max_hz", spec.b_max_hz);
  t.add_meta("samples", static_cast<double>(spec.samples_per_axis));
  {
    std::string betas;
    for (double db : spec.beta_db_set) betas += (betas.empty() ? "" : " ") + format_float(db);
    t.add_meta("beta_db_set", betas);
  }
  t.add_meta("assumption",
             "default beta_db_set spans the fig1 gain range at 20 dB spacing; the exact set is "
             "a tool choice");

  t.columns = {"bandwidth_hz"};
  std::vector<SisoLink> links;
  for (double db : spec.beta_db_set) {
    links.emplace_back(db_to_linear(db), n0);
    t.columns.push_back("ee_bit_per_joule_beta_" + db_tag(db));
    t.columns.push_back("limit_bit_per_joule_beta_" + db_tag(db));
  }

  for (int i = 0; i < spec.samples_per_axis; ++i) {
    const BandwidthHz b(log_point(spec.b_min_hz, spec.b_max_hz, i, spec.samples_per_axis));
    std::vector<double> row{b.value()};
    for (const SisoLink& link : links) {
      row.push_back(siso_ee_tx_only(link, p, b).value());
      row.push_back(siso_ee_limit(link).value());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Fig4Tables sweep_fig4(const SweepSpec& spec) {
  spec.validate();
  const NoisePsd n0(spec.n0_w_per_hz);
  const SisoLink link(db_to_linear(spec.beta_db), n0);
  const CircuitParams cp(0.0, spec.nu_watts_per_hz, spec.eta_joule_per_bit);

  Fig4Tables out;
  for (SweepTable* t : {&out.ee_surface, &out.rate_surface, &out.locus}) {
    add_common_meta(*t, spec);
    t->add_meta("beta_db", spec.beta_db);
    t->add_meta("nu_watts_per_hz", spec.nu_watts_per_hz);
    t->add_meta("eta_joule_per_bit", spec.eta_joule_per_bit);
    t->add_meta("p_min_watts", spec.p_min_watts);
    t->add_meta("p_max_watts", spec.p_max_watts);
    t->add_meta("b_min_hz", spec.fig4_b_min_hz);
    t->add_meta("b_max_hz", spec.fig4_b_max_hz);
    t->add_meta("samples_per_axis", static_cast<double>(spec.samples_per_axis));
    t->add_meta("assumption",
                "axis ranges are an inferred default sized so the optimal-ratio locus spans "
                "rates from ~0.3 Gbit/s to ~3 Tbit/s");
  }
  out.ee_surface.columns = {"p_watts", "bandwidth_hz", "ee_bit_per_joule"};
  out.rate_surface.columns = {"p_watts", "bandwidth_hz", "rate_bit_per_s"};
  out.locus.columns = {"bandwidth_hz", "p_watts", "ee_bit_per_joule", "rate_bit_per_s"};

  for (int i = 0; i < spec.samples_per_axis; ++i) {
    const PowerWatts p(log_point(spec.p_min_watts, spec.p_max_watts, i, spec.samples_per_axis));
    for (int j = 0; j < spec.samples_per_axis; ++j) {
      const BandwidthHz b(
          log_point(spec.fig4_b_min_hz, spec.fig4_b_max_hz, j, spec.samples_per_axis));
      out.ee_surface.rows.push_back(
          {p.value(), b.value(), ee_varying_circuit(link, p, b, cp).value()});
      out.rate_surface.rows.push_back(
          {p.value(), b.value(), siso_capacity(link, p, b).value()});
    }
  }

  const OperatingPoint point = optimal_operating_point_siso(link, cp);
  for (int j = 0; j < spec.samples_per_axis; ++j) {
    const BandwidthHz b(
        log_point(spec.fig4_b_min_hz, spec.fig4_b_max_hz, j, spec.samples_per_axis));
    out.locus.rows.push_back({b.value(), point.ratio_w_per_hz * b.value(), point.ee.value(),
                              rate_at_optimum(b, point).value()});
  }
  return out;
}

std::vector<NamedTable> run(const SweepSpec& spec) {
  switch (spec.figure_id) {
    case FigureId::fig1:
      return {{"", sweep_fig1(spec)}};
    case FigureId::fig3:
      return {{"", sweep_fig3(spec)}};
    case FigureId::fig4: {
      Fig4Tables tables = sweep_fig4(spec);
      std::vector<NamedTable> out;
      out.push_back({"_ee_surface", std::move(tables.ee_surface)});
      out.push_back({"_rate_surface", std::move(tables.rate_surface)});
      out.push_back({"_locus", std::move(tables.locus)});
      return out;
    }
  }
  throw std::invalid_argument("unknown figure id");
}

std::string plot_script(const SweepSpec& spec, const std::vector<std::string>& csv_paths) {
  detail::require(!csv_paths.empty(), "plot script needs at least one CSV path");
  std::ostringstream py;
  py << "#!/usr/bin/env python3\n"
     << "# Generated by eelim " << kVersion << "; reads the CSV sweep next to it.\n"
     << "import numpy as np\n"
     << "import matplotlib\n"
     << "matplotlib.use(\"Agg\")\n"
     << "import matplotlib.pyplot as plt\n\n";

  switch (spec.figure_id) {
    case FigureId::fig1:
      py << "d = np.genfromtxt(\"" << csv_paths[0] << "\", delimiter=\",\", names=True)\n"
         << "fig, ax = plt.subplots(figsize=(7, 4.5))\n"
         << "ax.semilogy(d[\"beta_db\"], d[\"ee_limit_bit_per_joule\"], lw=2)\n"
         << "ax.set_xlabel(\"channel gain beta [dB]\")\n"
         << "ax.set_ylabel(\"EE limit [bit/Joule]\")\n"
         << "ax.grid(True, which=\"both\", alpha=0.4)\n"
         << "fig.tight_layout()\n"
         << "fig.savefig(\"" << csv_paths[0] << ".png\", dpi=150)\n";
      break;
    case FigureId::fig3:
      py << "d = np.genfromtxt(\"" << csv_paths[0] << "\", delimiter=\",\", names=True)\n"
         << "fig, ax = plt.subplots(figsize=(7, 4.5))\n"
         << "for name in d.dtype.names:\n"
         << "    if name.startswith(\"ee_\"):\n"
         << "        ax.loglog(d[\"bandwidth_hz\"], d[name], lw=2, label=name)\n"
         << "    elif name.startswith(\"limit_\"):\n"
         << "        ax.loglog(d[\"bandwidth_hz\"], d[name], \"k--\", lw=1)\n"
         << "ax.set_xlabel(\"bandwidth [Hz]\")\n"
         << "ax.set_ylabel(\"EE [bit/Joule]\")\n"
         << "ax.legend(fontsize=8)\n"
         << "ax.grid(True, which=\"both\", alpha=0.4)\n"
         << "fig.tight_layout()\n"
         << "fig.savefig(\"" << csv_paths[0] << ".png\", dpi=150)\n";
      break;
    case FigureId::fig4: {
      detail::require(csv_paths.size() >= 3, "fig4 plot script needs the three CSV paths");
      py << "def surface(path, zcol):\n"
         << "    d = np.genfromtxt(path, delimiter=\",\", names=True)\n"
         << "    p = np.unique(d[\"p_watts\"])\n"
         << "    b = np.unique(d[\"bandwidth_hz\"])\n"
         << "    z = d[zcol].reshape(len(p), len(b))\n"
         << "    return p, b, z\n\n"
         << "locus = np.genfromtxt(\"" << csv_paths[2] << "\", delimiter=\",\", names=True)\n"
         << "fig, axes = plt.subplots(1, 2, figsize=(12, 4.5))\n"
         << "for ax, path, zcol, title in [\n"
         << "    (axes[0], \"" << csv_paths[0] << "\", \"ee_bit_per_joule\", \"EE [bit/Joule]\"),\n"
         << "    (axes[1], \"" << csv_paths[1] << "\", \"rate_bit_per_s\", \"rate [bit/s]\"),\n"
         << "]:\n"
         << "    p, b, z = surface(path, zcol)\n"
         << "    pm = ax.pcolormesh(b, p, np.log10(np.maximum(z, 1e-300)), shading=\"auto\")\n"
         << "    ax.plot(locus[\"bandwidth_hz\"], locus[\"p_watts\"], \"r-\", lw=2.5)\n"
         << "    ax.set_xscale(\"log\")\n"
         << "    ax.set_yscale(\"log\")\n"
         << "    ax.set_xlabel(\"bandwidth [Hz]\")\n"
         << "    ax.set_ylabel(\"transmit power [W]\")\n"
         << "    ax.set_title(\"log10 \" + title)\n"
         << "    fig.colorbar(pm, ax=ax)\n"
         << "fig.tight_layout()\n"
         << "fig.savefig(\"" << csv_paths[0] << ".png\", dpi=150)\n";
      break;
    }
  }
  return py.str();
}

}  // namespace eelim::sweeps
