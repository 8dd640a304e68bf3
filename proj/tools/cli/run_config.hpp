#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "pdc/jsa.hpp"
#include "pdc/phasematch.hpp"

namespace pdc::cli {

enum class OutputFormat { kCsv, kJson };

/// Everything a subcommand needs, in user-facing units. Keys in the config file
/// carry their unit in the name (pump_wavelength_um, mean_power_mW, ...).
struct RunConfig {
  std::filesystem::path crystal_file;

  std::string pdc_type = "type-I";
  std::string pump_axis = "e";
  std::string signal_axis = "o";
  double pump_wavelength_um = 0.775;
  double temperature_c = kRoomTemperatureC;
  double length_mm = 10.0;
  std::optional<double> poling_period_um;

  double bandwidth_nm = 4.0;
  double mean_power_mw = 12.0;
  double repetition_rate_mhz = 100.0;
  std::string transform_limited_at = "center";

  int grid_n = kDefaultGridPoints;
  std::optional<double> grid_half_width_thz;

  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::kCsv;
  int precision = 9;
};

/// Parses a JSON config document. Relative crystal/output paths are resolved
/// against `base_dir`. Unknown keys and wrong types throw UsageError.
RunConfig parse_run_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

OutputFormat parse_format(std::string_view text);

/// Module inputs built from a run configuration.
struct Pipeline {
  std::shared_ptr<const CrystalModel> crystal;
  PdcConfig pdc;
  PumpPulse pump;
  GridSpec grid;
};

Pipeline build_pipeline(const RunConfig& run);

}  // namespace pdc::cli
