#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace pdc::cli {

/// Writes `content` to a sibling temp file and renames it over `path`, so readers
/// never observe a partial file. Creates the parent directory. Throws IoError.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Fixed "%.{precision}g" formatting; the same double always prints the same way.
std::string format_number(double value, int precision);

class CsvTable {
 public:
  CsvTable(std::vector<std::string> header, int precision) : header_(std::move(header)), precision_(precision) {}

  /// Starts a new row; chain cell() calls to fill it.
  CsvTable& row();
  CsvTable& cell(double value);
  CsvTable& cell(std::string_view text);
  CsvTable& cell(int value);

  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  int precision_;
};

/// Pretty-printed JSON with a trailing newline. Doubles round-trip exactly.
std::string dump_json(const nlohmann::json& doc);

}  // namespace pdc::cli
