#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "output.hpp"
#include "pdc/constants.hpp"
#include "pdc/dispersion.hpp"
#include "pdc/error.hpp"
#include "pdc/jsa.hpp"
#include "pdc/phasematch.hpp"
#include "pdc/squeezing.hpp"
#include "run_config.hpp"

#ifndef PDC_DEFAULT_CRYSTAL
#define PDC_DEFAULT_CRYSTAL ""
#endif

namespace pdc::cli {

namespace {

using nlohmann::json;
using constants::kTwoPi;

constexpr int kCgvmScanSamples = 256;

/// Global flags. Anything left unset falls back to the config file, then to defaults.
struct Overrides {
  std::string config;
  std::string crystal;
  std::string out;
  std::string format;
  std::optional<int> grid_n;
  std::optional<double> pump_um;
  std::optional<double> temperature_c;
  std::optional<double> length_mm;
  std::optional<double> bandwidth_nm;
  std::optional<double> power_mw;
  std::optional<double> rep_rate_mhz;
  std::optional<double> poling_um;
  std::string type;
  std::string pump_axis;
  std::string signal_axis;
  std::string pump_reference;
};

RunConfig resolve_run(const Overrides& o) {
  RunConfig run = o.config.empty() ? RunConfig{} : load_run_config(o.config);
  if (!o.crystal.empty()) run.crystal_file = o.crystal;
  if (run.crystal_file.empty()) run.crystal_file = PDC_DEFAULT_CRYSTAL;
  if (!o.out.empty()) run.out_dir = o.out;
  if (!o.format.empty()) run.format = parse_format(o.format);
  if (o.grid_n) run.grid_n = *o.grid_n;
  if (o.pump_um) run.pump_wavelength_um = *o.pump_um;
  if (o.temperature_c) run.temperature_c = *o.temperature_c;
  if (o.length_mm) run.length_mm = *o.length_mm;
  if (o.bandwidth_nm) run.bandwidth_nm = *o.bandwidth_nm;
  if (o.power_mw) run.mean_power_mw = *o.power_mw;
  if (o.rep_rate_mhz) run.repetition_rate_mhz = *o.rep_rate_mhz;
  if (o.poling_um) run.poling_period_um = *o.poling_um;
  if (!o.type.empty()) run.pdc_type = o.type;
  if (!o.pump_axis.empty()) run.pump_axis = o.pump_axis;
  if (!o.signal_axis.empty()) run.signal_axis = o.signal_axis;
  if (!o.pump_reference.empty()) run.transform_limited_at = o.pump_reference;
  return run;
}

std::string_view reference_name(PumpReference reference) {
  return reference == PumpReference::kCrystalCenter ? "center" : "input";
}

std::string_view type_name(PdcType type) { return type == PdcType::kType0 ? "type-0" : "type-I"; }

json config_json(const Pipeline& p) {
  return {
      {"crystal", p.crystal->name},
      {"type", type_name(p.pdc.type)},
      {"pump_axis", p.pdc.pump_axis.label},
      {"signal_axis", p.pdc.signal_axis.label},
      {"pump_wavelength_um", p.pdc.pump_wavelength_um},
      {"signal_wavelength_um", p.pdc.signal_wavelength_um()},
      {"temperature_c", p.pdc.temperature_c},
      {"length_mm", p.pdc.length_m * 1e3},
      {"bandwidth_nm", p.pump.bandwidth_nm},
      {"mean_power_mW", p.pump.mean_power_w * 1e3},
      {"repetition_rate_MHz", p.pump.repetition_rate_hz * 1e-6},
      {"transform_limited_at", reference_name(p.pump.reference)},
  };
}

std::vector<double> frequency_axis_thz(const PdcConfig& config, const FrequencyGrid& grid) {
  std::vector<double> f(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i)
    f[static_cast<std::size_t>(i)] = (config.signal_omega() + grid.detuning(i)) / kTwoPi * 1e-12;
  return f;
}

// ---------------------------------------------------------------------------

struct DispersionArgs {
  double lambda_min_um = 0.5;
  double lambda_max_um = 3.5;
  int samples = 301;
  std::vector<std::string> axes;
};

void cmd_dispersion(const RunConfig& run, const DispersionArgs& args, std::ostream& out) {
  if (!(args.lambda_max_um > args.lambda_min_um) || args.samples < 2)
    throw UsageError(fmt::format("empty wavelength range [{}, {}] um with {} samples", args.lambda_min_um,
                                 args.lambda_max_um, args.samples));
  const auto crystal = load_crystal_file(run.crystal_file);
  std::vector<std::string> axes = args.axes;
  if (axes.empty())
    for (const auto& [label, _] : crystal.axes) axes.push_back(label);
  std::vector<AxisDispersion> models;
  for (auto& label : axes) {
    label = OpticalAxis::parse(label).label;
    models.emplace_back(crystal, OpticalAxis{label}, run.temperature_c);
  }

  CsvTable table({"lambda_um", "axis", "n", "group_index", "gvd_ps2_per_m"}, run.precision);
  json rows = json::array();
  for (int i = 0; i < args.samples; ++i) {
    const double lambda =
        args.lambda_min_um + (args.lambda_max_um - args.lambda_min_um) * i / (args.samples - 1);
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const auto s = models[a].sample(constants::angular_frequency(lambda));
      const double gvd_ps2 = s.k2 / constants::kPs2PerM;
      table.row().cell(lambda).cell(axes[a]).cell(s.n).cell(s.group_index).cell(gvd_ps2);
      rows.push_back({{"lambda_um", lambda}, {"axis", axes[a]}, {"n", s.n}, {"group_index", s.group_index},
                      {"gvd_ps2_per_m", gvd_ps2}});
    }
  }

  std::filesystem::path written;
  if (run.format == OutputFormat::kCsv) {
    written = run.out_dir / "dispersion.csv";
    write_atomic(written, table.str());
  } else {
    written = run.out_dir / "dispersion.json";
    write_atomic(written, dump_json({{"crystal", crystal.name}, {"temperature_c", run.temperature_c}, {"rows", rows}}));
  }
  out << "wrote " << written.string() << "\n";
}

// ---------------------------------------------------------------------------

struct CgvmArgs {
  std::vector<double> bracket_um{1.0, 3.5};
  std::optional<double> target_um;
  std::vector<double> temperature_bracket_c{-20.0, 80.0};
};

PdcConfig cgvm_config(const std::shared_ptr<const CrystalModel>& crystal, const AxisPairing& pairing,
                      double signal_um, double temperature_c) {
  PdcConfig config;
  config.crystal = crystal;
  config.type = pairing.pump == pairing.signal ? PdcType::kType0 : PdcType::kTypeI;
  config.pump_axis = pairing.pump;
  config.signal_axis = pairing.signal;
  config.pump_wavelength_um = 0.5 * signal_um;
  config.temperature_c = temperature_c;
  config.length_m = 1.0;
  return config;
}

void cmd_cgvm(const RunConfig& run, const CgvmArgs& args, std::ostream& out) {
  if (args.bracket_um.size() != 2 || !(args.bracket_um[1] > args.bracket_um[0]))
    throw UsageError("--bracket-um needs two increasing wavelengths");
  if (args.temperature_bracket_c.size() != 2 || !(args.temperature_bracket_c[1] > args.temperature_bracket_c[0]))
    throw UsageError("--t-bracket-c needs two increasing temperatures");
  const auto crystal = std::make_shared<const CrystalModel>(load_crystal_file(run.crystal_file));
  const AxisPairing pairing{OpticalAxis::parse(run.pump_axis), OpticalAxis::parse(run.signal_axis)};
  crystal->axis(pairing.pump);
  crystal->axis(pairing.signal);

  // Coarse scan for every sign change, then refine each bracketed root.
  const double lo = args.bracket_um[0];
  const double hi = args.bracket_um[1];
  std::vector<double> roots;
  double prev_lambda = lo;
  double prev = cgvm_residual(*crystal, pairing, run.temperature_c, lo);
  for (int i = 1; i <= kCgvmScanSamples; ++i) {
    const double lambda = lo + (hi - lo) * i / kCgvmScanSamples;
    const double value = cgvm_residual(*crystal, pairing, run.temperature_c, lambda);
    if (prev == 0.0) {
      roots.push_back(prev_lambda);
    } else if (std::signbit(prev) != std::signbit(value) && value != 0.0) {
      roots.push_back(solve_cgvm(*crystal, pairing, run.temperature_c, {prev_lambda, lambda}));
    }
    prev = value;
    prev_lambda = lambda;
  }
  if (prev == 0.0) roots.push_back(hi);
  if (roots.empty())
    throw SolverError(fmt::format("no cGVM point for pump axis {} / signal axis {} in [{}, {}] um at {} C",
                                  pairing.pump.label, pairing.signal.label, lo, hi, run.temperature_c));

  const double lambda = roots.front();
  const double period = poling_period(cgvm_config(crystal, pairing, lambda, run.temperature_c));
  json report = {
      {"crystal", crystal->name},
      {"pump_axis", pairing.pump.label},
      {"signal_axis", pairing.signal.label},
      {"temperature_c", run.temperature_c},
      {"bracket_um", {lo, hi}},
      {"lambda_cgvm_um", lambda},
      {"pump_wavelength_um", 0.5 * lambda},
      {"poling_period_um", period},
      {"roots_um", roots},
  };
  out << fmt::format("{} {}->{}: cGVM at {:.6f} um (pump {:.6f} um), poling period {:.4f} um at {} C\n",
                     crystal->name, pairing.pump.label, pairing.signal.label, lambda, 0.5 * lambda, period,
                     run.temperature_c);

  if (args.target_um) {
    const double target = *args.target_um;
    const double temperature = solve_cgvm_temperature(
        *crystal, pairing, target, {args.temperature_bracket_c[0], args.temperature_bracket_c[1]});
    const double target_period = poling_period(cgvm_config(crystal, pairing, target, temperature));
    report["target"] = {{"lambda_um", target}, {"temperature_c", temperature}, {"poling_period_um", target_period}};
    out << fmt::format("cGVM at {:.4f} um reached at {:.3f} C, poling period {:.4f} um\n", target, temperature,
                       target_period);
  }
  write_atomic(run.out_dir / "cgvm.json", dump_json(report));
}

// ---------------------------------------------------------------------------

void cmd_poling(const RunConfig& run, std::ostream& out) {
  const auto p = build_pipeline(run);
  const PhaseMismatch mismatch(p.pdc);
  const auto taylor = taylor_dispersion(p.pdc);
  const double walkoff = walkoff_time(p.pdc);
  const json report = {
      {"config", config_json(p)},
      {"poling_period_um", mismatch.poling_period_um()},
      {"perfect_qpm_period_um", poling_period(p.pdc)},
      {"taylor",
       {{"dk1_fs_per_mm", taylor.dk1 * 1e12},
        {"kp2_ps2_per_m", taylor.kp2 / constants::kPs2PerM},
        {"ks2_ps2_per_m", taylor.ks2 / constants::kPs2PerM},
        {"omega_d_rad_per_s", taylor.omega_d}}},
      {"walkoff_fs", walkoff * 1e15},
  };
  write_atomic(run.out_dir / "poling.json", dump_json(report));
  out << fmt::format("poling period {:.4f} um, walk-off {:.2f} fs over {} mm\n", mismatch.poling_period_um(),
                     walkoff * 1e15, run.length_mm);
}

// ---------------------------------------------------------------------------

struct JsaArgs {
  bool complex_parts = false;
};

void cmd_jsa(const RunConfig& run, const JsaArgs& args, std::ostream& out) {
  const auto p = build_pipeline(run);
  const auto grid = resolve_grid(p.pdc, p.pump, p.grid);
  const auto jsa = compute_jsa(p.pdc, p.pump, grid);
  const auto decomposition = schmidt_decompose(jsa, {.compute_modes = false});
  const auto f = frequency_axis_thz(p.pdc, grid);
  const int n = grid.n;

  json meta = {
      {"config", config_json(p)},
      {"grid_n", n},
      {"f_min_THz", f.front()},
      {"f_max_THz", f.back()},
      {"poling_period_um", jsa.poling_period_um},
      {"schmidt_number", decomposition.schmidt_number},
      {"eta_jsa", jsa_efficiency(jsa, decomposition)},
      {"raw_norm", decomposition.raw_norm},
  };

  if (run.format == OutputFormat::kCsv) {
    const auto matrix_csv = [&](auto&& value) {
      std::string text;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (j) text += ',';
          text += format_number(value(jsa.values(i, j)), run.precision);
        }
        text += '\n';
      }
      return text;
    };
    CsvTable axis({"index", "f_THz"}, run.precision);
    for (int i = 0; i < n; ++i) axis.row().cell(i).cell(f[static_cast<std::size_t>(i)]);
    write_atomic(run.out_dir / "jsa_axis.csv", axis.str());
    write_atomic(run.out_dir / "jsa_abs.csv", matrix_csv([](const std::complex<double>& v) { return std::abs(v); }));
    if (args.complex_parts) {
      write_atomic(run.out_dir / "jsa_re.csv", matrix_csv([](const std::complex<double>& v) { return v.real(); }));
      write_atomic(run.out_dir / "jsa_im.csv", matrix_csv([](const std::complex<double>& v) { return v.imag(); }));
    }
    write_atomic(run.out_dir / "jsa_meta.json", dump_json(meta));
  } else {
    const auto matrix_json = [&](auto&& value) {
      json rows = json::array();
      for (int i = 0; i < n; ++i) {
        std::vector<double> r(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = value(jsa.values(i, j));
        rows.push_back(std::move(r));
      }
      return rows;
    };
    json doc = meta;
    doc["f_THz"] = f;
    doc["abs"] = matrix_json([](const std::complex<double>& v) { return std::abs(v); });
    if (args.complex_parts) {
      doc["re"] = matrix_json([](const std::complex<double>& v) { return v.real(); });
      doc["im"] = matrix_json([](const std::complex<double>& v) { return v.imag(); });
    }
    write_atomic(run.out_dir / "jsa.json", dump_json(doc));
  }
  out << fmt::format("JSA {}x{}: K = {:.4f}, eta_JSA = {:.4f}, poling period {:.4f} um\n", n, n,
                     decomposition.schmidt_number, meta["eta_jsa"].get<double>(), jsa.poling_period_um);
}

// ---------------------------------------------------------------------------

struct ModesArgs {
  int n_modes = 4;
};

void cmd_modes(const RunConfig& run, const ModesArgs& args, std::ostream& out) {
  if (args.n_modes < 1) throw UsageError("--n-modes must be at least 1");
  const auto p = build_pipeline(run);
  const auto grid = resolve_grid(p.pdc, p.pump, p.grid);
  if (args.n_modes > grid.n)
    throw DomainError(fmt::format("requested {} modes but the {}-point grid has rank at most {}", args.n_modes, grid.n,
                                  grid.n));
  const auto jsa = compute_jsa(p.pdc, p.pump, grid);
  const auto decomposition = schmidt_decompose(jsa);
  const auto f = frequency_axis_thz(p.pdc, grid);

  CsvTable schmidt({"n", "s_n"}, 17);
  for (std::size_t i = 0; i < decomposition.s.size(); ++i) schmidt.row().cell(static_cast<int>(i)).cell(decomposition.s[i]);

  json modes = json::array();
  for (int m = 0; m < args.n_modes; ++m) {
    const auto mode = phase_aligned_mode(decomposition, m);
    if (run.format == OutputFormat::kCsv) {
      CsvTable table({"f_THz", "re", "im", "abs"}, run.precision);
      for (std::size_t i = 0; i < mode.size(); ++i)
        table.row().cell(f[i]).cell(mode[i].real()).cell(mode[i].imag()).cell(std::abs(mode[i]));
      write_atomic(run.out_dir / fmt::format("mode_{}.csv", m), table.str());
    } else {
      std::vector<double> re, im, mag;
      for (const auto& v : mode) {
        re.push_back(v.real());
        im.push_back(v.imag());
        mag.push_back(std::abs(v));
      }
      modes.push_back({{"index", m}, {"s", decomposition.s[static_cast<std::size_t>(m)]}, {"re", re}, {"im", im}, {"abs", mag}});
    }
  }
  if (run.format == OutputFormat::kCsv) {
    write_atomic(run.out_dir / "schmidt.csv", schmidt.str());
  } else {
    write_atomic(run.out_dir / "modes.json", dump_json({{"config", config_json(p)},
                                                        {"grid_n", grid.n},
                                                        {"schmidt_number", decomposition.schmidt_number},
                                                        {"s", decomposition.s},
                                                        {"f_THz", f},
                                                        {"modes", modes}}));
  }
  out << fmt::format("K = {:.4f}; exported {} modes\n", decomposition.schmidt_number, args.n_modes);
}

// ---------------------------------------------------------------------------

json squeezing_json(const Pipeline& p, const SqueezingResult& r) {
  return {
      {"config", config_json(p)},
      {"eta_jsa", r.eta_jsa},
      {"eta_pdc_per_W", r.eta_pdc_per_w},
      {"peak_power_W", r.peak_power_w},
      {"pulse_duration_fs", r.pulse_duration_s * 1e15},
      {"beam_waist_um", r.beam_waist_m * 1e6},
      {"gain_parameter", r.gain_parameter},
      {"schmidt_number", r.schmidt_number},
      {"poling_period_um", r.poling_period_um},
      {"s", r.s},
      {"r", r.r},
      {"S_db", r.squeezing_db},
      {"mean_photons", r.mean_photons},
      {"pump_photons_per_pulse", r.pump_photons_per_pulse},
      {"validity_flag", r.beyond_validity},
  };
}

void cmd_squeeze(const RunConfig& run, std::ostream& out) {
  const auto p = build_pipeline(run);
  const auto result = squeezing_spectrum(p.pdc, p.pump, p.grid);
  write_atomic(run.out_dir / "squeeze.json", dump_json(squeezing_json(p, result)));
  out << fmt::format("L = {} mm: K = {:.4f}, eta_JSA = {:.4f}, r0 = {:.4f}, S0 = {:.3f} dB{}\n", run.length_mm,
                     result.schmidt_number, result.eta_jsa, result.r.front(), result.squeezing_db.front(),
                     result.beyond_validity ? " (beyond 12 dB model validity)" : "");
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  std::vector<double> lengths_mm;
};

void cmd_scan(const RunConfig& run, const ScanArgs& args, std::ostream& out) {
  const auto p = build_pipeline(run);
  std::vector<double> lengths_m;
  for (double mm : args.lengths_mm) lengths_m.push_back(mm * 1e-3);
  const auto points = length_scan(p.pdc, p.pump, lengths_m, p.grid);

  CsvTable table({"L_mm", "K", "eta_jsa", "eta_pdc_per_W", "r0", "S_db", "validity_flag"}, run.precision);
  json rows = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& r = points[i].result;
    const double length_mm = args.lengths_mm[i];
    table.row()
        .cell(length_mm)
        .cell(r.schmidt_number)
        .cell(r.eta_jsa)
        .cell(r.eta_pdc_per_w)
        .cell(r.r.front())
        .cell(r.squeezing_db.front())
        .cell(r.beyond_validity ? 1 : 0);
    rows.push_back({{"L_mm", length_mm},
                    {"K", r.schmidt_number},
                    {"eta_jsa", r.eta_jsa},
                    {"eta_pdc_per_W", r.eta_pdc_per_w},
                    {"r0", r.r.front()},
                    {"S_db", r.squeezing_db.front()},
                    {"validity_flag", r.beyond_validity}});
  }
  if (run.format == OutputFormat::kCsv)
    write_atomic(run.out_dir / "scan.csv", table.str());
  else
    write_atomic(run.out_dir / "scan.json", dump_json({{"config", config_json(p)}, {"rows", rows}}));
  out << fmt::format("scanned {} lengths\n", points.size());
}

std::string single_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pulsed type-I / type-0 PDC: dispersion, cGVM, JSA, Schmidt modes and squeezing"};
  app.name("pdcsq");
  app.require_subcommand(1);

  Overrides o;
  app.add_option("--config", o.config, "Run configuration file (JSON)");
  app.add_option("--crystal", o.crystal, "Crystal data file (JSON)");
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--format", o.format, "Table format: csv or json");
  app.add_option("--grid-n", o.grid_n, "Grid points per frequency axis");
  app.add_option("--pump-um", o.pump_um, "Pump wavelength (um)");
  app.add_option("--temperature-c", o.temperature_c, "Crystal temperature (C)");
  app.add_option("--length-mm", o.length_mm, "Crystal length (mm)");
  app.add_option("--bandwidth-nm", o.bandwidth_nm, "Pump intensity FWHM bandwidth (nm)");
  app.add_option("--power-mw", o.power_mw, "Mean pump power (mW)");
  app.add_option("--rep-rate-mhz", o.rep_rate_mhz, "Pump repetition rate (MHz)");
  app.add_option("--poling-um", o.poling_um, "Poling period override (um)");
  app.add_option("--type", o.type, "PDC type: type-0 or type-I");
  app.add_option("--pump-axis", o.pump_axis, "Pump polarization axis");
  app.add_option("--signal-axis", o.signal_axis, "Signal polarization axis");
  app.add_option("--pump-reference", o.pump_reference, "Plane where the pump is transform limited: center or input");

  DispersionArgs dispersion_args;
  auto* dispersion = app.add_subcommand("dispersion", "Refractive index, group index and GVD tables");
  dispersion->add_option("--lambda-min-um", dispersion_args.lambda_min_um);
  dispersion->add_option("--lambda-max-um", dispersion_args.lambda_max_um);
  dispersion->add_option("--samples", dispersion_args.samples);
  dispersion->add_option("--axes", dispersion_args.axes, "Axis labels (default: all)");

  CgvmArgs cgvm_args;
  auto* cgvm = app.add_subcommand("cgvm", "Solve for complete group-velocity matching");
  cgvm->add_option("--bracket-um", cgvm_args.bracket_um, "Signal wavelength search interval")->expected(2);
  cgvm->add_option("--target-um", cgvm_args.target_um, "Solve the temperature putting cGVM at this wavelength");
  cgvm->add_option("--t-bracket-c", cgvm_args.temperature_bracket_c, "Temperature search interval")->expected(2);

  auto* poling = app.add_subcommand("poling", "Poling period, Taylor coefficients and walk-off");

  JsaArgs jsa_args;
  auto* jsa = app.add_subcommand("jsa", "Joint spectral amplitude grid");
  jsa->add_flag("--complex", jsa_args.complex_parts, "Also export real and imaginary parts");

  ModesArgs modes_args;
  auto* modes = app.add_subcommand("modes", "Schmidt mode functions");
  modes->add_option("--n-modes", modes_args.n_modes);

  auto* squeeze = app.add_subcommand("squeeze", "Per-mode squeezing at the configured point");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Squeezing versus crystal length");
  scan->add_option("--lengths-mm", scan_args.lengths_mm, "Crystal lengths (mm)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << error_code_tag(ErrorCode::kUsage) << ": " << single_line(e.what()) << "\n";
    return static_cast<int>(ErrorCode::kUsage);
  }

  try {
    const RunConfig run_config = resolve_run(o);
    if (dispersion->parsed()) cmd_dispersion(run_config, dispersion_args, out);
    if (cgvm->parsed()) cmd_cgvm(run_config, cgvm_args, out);
    if (poling->parsed()) cmd_poling(run_config, out);
    if (jsa->parsed()) cmd_jsa(run_config, jsa_args, out);
    if (modes->parsed()) cmd_modes(run_config, modes_args, out);
    if (squeeze->parsed()) cmd_squeeze(run_config, out);
    if (scan->parsed()) cmd_scan(run_config, scan_args, out);
  } catch (const Error& e) {
    err << error_code_tag(e.code()) << ": " << single_line(e.what()) << "\n";
    return static_cast<int>(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << error_code_tag(ErrorCode::kIo) << ": " << single_line(e.what()) << "\n";
    return static_cast<int>(ErrorCode::kIo);
  } catch (const std::exception& e) {
    err << error_code_tag(ErrorCode::kDomain) << ": " << single_line(e.what()) << "\n";
    return static_cast<int>(ErrorCode::kDomain);
  }
  return 0;
}

}  // namespace pdc::cli
