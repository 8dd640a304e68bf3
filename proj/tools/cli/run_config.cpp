#include "run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pdc/constants.hpp"
#include "pdc/error.hpp"

namespace pdc::cli {

namespace {

using nlohmann::json;

void check_keys(const json& section, std::string_view name, const std::set<std::string>& allowed) {
  if (!section.is_object()) throw UsageError(fmt::format("config: '{}' must be an object", name));
  for (const auto& [key, _] : section.items())
    if (!allowed.count(key)) throw UsageError(fmt::format("config: unknown key '{}' in '{}'", key, name));
}

template <typename T>
void read(const json& section, const char* key, T& target) {
  if (!section.contains(key)) return;
  try {
    target = section.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(fmt::format("config: key '{}' has the wrong type", key));
  }
}

template <typename T>
void read_optional(const json& section, const char* key, std::optional<T>& target) {
  if (!section.contains(key) || section.at(key).is_null()) return;
  T value{};
  read(section, key, value);
  target = value;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::filesystem::path& p) {
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw UsageError(fmt::format("unknown output format '{}' (expected csv or json)", text));
}

RunConfig parse_run_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(fmt::format("config: not valid JSON ({})", e.what()));
  }
  check_keys(doc, "config", {"crystal_file", "pdc", "pump", "grid", "output"});

  RunConfig run;
  std::string crystal_file;
  read(doc, "crystal_file", crystal_file);
  run.crystal_file = resolve(base_dir, crystal_file);

  if (doc.contains("pdc")) {
    const auto& pdc = doc["pdc"];
    check_keys(pdc, "pdc",
               {"type", "pump_axis", "signal_axis", "pump_wavelength_um", "temperature_c", "length_mm",
                "poling_period_um"});
    read(pdc, "type", run.pdc_type);
    read(pdc, "pump_axis", run.pump_axis);
    read(pdc, "signal_axis", run.signal_axis);
    read(pdc, "pump_wavelength_um", run.pump_wavelength_um);
    read(pdc, "temperature_c", run.temperature_c);
    read(pdc, "length_mm", run.length_mm);
    read_optional(pdc, "poling_period_um", run.poling_period_um);
  }
  if (doc.contains("pump")) {
    const auto& pump = doc["pump"];
    check_keys(pump, "pump", {"bandwidth_nm", "mean_power_mW", "repetition_rate_MHz", "transform_limited_at"});
    read(pump, "bandwidth_nm", run.bandwidth_nm);
    read(pump, "mean_power_mW", run.mean_power_mw);
    read(pump, "repetition_rate_MHz", run.repetition_rate_mhz);
    read(pump, "transform_limited_at", run.transform_limited_at);
  }
  if (doc.contains("grid")) {
    const auto& grid = doc["grid"];
    check_keys(grid, "grid", {"n", "half_width_THz"});
    read(grid, "n", run.grid_n);
    read_optional(grid, "half_width_THz", run.grid_half_width_thz);
  }
  if (doc.contains("output")) {
    const auto& output = doc["output"];
    check_keys(output, "output", {"directory", "format", "precision"});
    std::string dir;
    std::string format = "csv";
    read(output, "directory", dir);
    read(output, "format", format);
    read(output, "precision", run.precision);
    if (!dir.empty()) run.out_dir = resolve(base_dir, dir);
    run.format = parse_format(format);
  }
  if (run.precision < 1 || run.precision > 17) throw UsageError("config: precision must be within 1..17");
  return run;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open config file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str(), path.parent_path());
}

Pipeline build_pipeline(const RunConfig& run) {
  Pipeline p;
  p.crystal = std::make_shared<const CrystalModel>(load_crystal_file(run.crystal_file));

  if (run.pdc_type == "type-0")
    p.pdc.type = PdcType::kType0;
  else if (run.pdc_type == "type-I")
    p.pdc.type = PdcType::kTypeI;
  else
    throw UsageError(fmt::format("unknown PDC type '{}' (expected type-0 or type-I)", run.pdc_type));
  p.pdc.crystal = p.crystal;
  p.pdc.pump_axis = OpticalAxis::parse(run.pump_axis);
  p.pdc.signal_axis = OpticalAxis::parse(run.signal_axis);
  p.pdc.pump_wavelength_um = run.pump_wavelength_um;
  p.pdc.temperature_c = run.temperature_c;
  p.pdc.length_m = run.length_mm * 1e-3;
  p.pdc.poling_period_um = run.poling_period_um;
  validate(p.pdc);

  p.pump.wavelength_um = run.pump_wavelength_um;
  p.pump.bandwidth_nm = run.bandwidth_nm;
  p.pump.mean_power_w = run.mean_power_mw * 1e-3;
  p.pump.repetition_rate_hz = run.repetition_rate_mhz * 1e6;
  if (run.transform_limited_at == "center")
    p.pump.reference = PumpReference::kCrystalCenter;
  else if (run.transform_limited_at == "input")
    p.pump.reference = PumpReference::kCrystalInput;
  else
    throw UsageError(fmt::format("unknown pump reference '{}' (expected center or input)", run.transform_limited_at));
  validate(p.pump);

  p.grid.n = run.grid_n;
  if (run.grid_half_width_thz) p.grid.max_detuning = constants::kTwoPi * *run.grid_half_width_thz * 1e12;
  return p;
}

}  // namespace pdc::cli
