#include "output.hpp"

#include <fstream>
#include <system_error>

#include <fmt/format.h>
#include <unistd.h>

#include "pdc/error.hpp"

namespace pdc::cli {

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(fmt::format("cannot create directory '{}': {}", path.parent_path().string(), ec.message()));
  }
  auto temp = path;
  temp += fmt::format(".tmp.{}", ::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", temp.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError(fmt::format("write to '{}' failed", temp.string()));
  }
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError(fmt::format("cannot move output into place at '{}'", path.string()));
  }
}

std::string format_number(double value, int precision) { return fmt::format("{:.{}g}", value, precision); }

CsvTable& CsvTable::row() {
  rows_.emplace_back();
  rows_.back().reserve(header_.size());
  return *this;
}

CsvTable& CsvTable::cell(double value) {
  rows_.back().push_back(format_number(value, precision_));
  return *this;
}

CsvTable& CsvTable::cell(std::string_view text) {
  rows_.back().emplace_back(text);
  return *this;
}

CsvTable& CsvTable::cell(int value) {
  rows_.back().push_back(std::to_string(value));
  return *this;
}

std::string CsvTable::str() const {
  std::string out;
  const auto append_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  if (!header_.empty()) append_line(header_);
  for (const auto& r : rows_) append_line(r);
  return out;
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace pdc::cli
