#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pdc {

/// Polarization axis label: "o"/"e" for uniaxial crystals, "x"/"y"/"z" for biaxial ones.
struct OpticalAxis {
  std::string label;

  static OpticalAxis ordinary() { return {"o"}; }
  static OpticalAxis extraordinary() { return {"e"}; }

  /// Accepts the long forms "ordinary"/"extraordinary" as aliases.
  static OpticalAxis parse(std::string_view text);

  friend bool operator==(const OpticalAxis&, const OpticalAxis&) = default;
};

enum class CrystalClass { kUniaxial, kBiaxial };

struct WavelengthRange {
  double min_um = 0.0;
  double max_um = 0.0;

  bool contains(double wavelength_um) const {
    return wavelength_um >= min_um && wavelength_um <= max_um;
  }
  bool contains_strictly(double wavelength_um) const {
    return wavelength_um > min_um && wavelength_um < max_um;
  }
};

/// Temperature correction entering the Sellmeier coefficients through the factor
/// f(T) = (T - reference)(T + offset). Form kNone yields f = 0 for every T.
struct TemperatureModel {
  enum class Form { kNone, kQuadraticFactor };

  Form form = Form::kNone;
  double reference_c = 24.5;
  double offset_c = 0.0;

  double factor(double temperature_c) const;
};

/// The dielectric function n^2 written in u = lambda^2 (um^2):
///
///   n^2(u) = constant + sum_j strength_j / (u - resonance_j) - ir_slope * u
///
/// Every supported Sellmeier form reduces to this at a fixed temperature, which
/// gives closed-form derivatives in u for all of them.
struct PoleExpansion {
  struct Pole {
    double strength = 0.0;
    double resonance = 0.0;  // um^2
  };

  double constant = 0.0;
  std::vector<Pole> poles;
  double ir_slope = 0.0;  // um^-2

  double epsilon(double u) const;
  double d_epsilon(double u) const;
  double d2_epsilon(double u) const;
};

class SellmeierSet {
 public:
  /// kConstant:  n^2 = n*n (no dispersion, used for synthetic test crystals)
  /// kStandard:  n^2 = A + sum_i B_i u / (u - C_i) - D u, with i = 1..3
  /// kGayer:     n^2 = a1 + b1 f + (a2 + b2 f)/(u - (a3 + b3 f)^2) + (a4 + b4 f)/(u - a5^2) - a6 u
  enum class Form { kConstant, kStandard, kGayer };

  /// Throws DomainError on unknown or missing coefficient names.
  SellmeierSet(Form form, std::map<std::string, double> coefficients);

  Form form() const { return form_; }
  const std::map<std::string, double>& coefficients() const { return coefficients_; }

  PoleExpansion expand(double temperature_factor) const;

  static Form parse_form(std::string_view id);
  static std::string_view form_id(Form form);

 private:
  double coefficient(const std::string& name) const;

  Form form_;
  std::map<std::string, double> coefficients_;
};

/// Dispersion record for one crystal. Treat as immutable once validated; share it
/// through std::shared_ptr<const CrystalModel>.
struct CrystalModel {
  std::string name;
  CrystalClass crystal_class = CrystalClass::kUniaxial;
  std::map<std::string, SellmeierSet> axes;
  TemperatureModel temperature_model;
  double d_eff_pm_per_v = 0.0;
  WavelengthRange valid_range;
  std::string provenance;

  /// Throws DomainError naming the registered axes if `axis` is absent.
  const SellmeierSet& axis(const OpticalAxis& axis) const;
  bool has_axis(const OpticalAxis& axis) const { return axes.count(axis.label) != 0; }
};

/// Checks every invariant of a crystal record: non-empty axes matching the crystal
/// class, d_eff > 0, a non-empty range, and a real index n > 1 with no pole inside
/// the range at temperatures from 0 to 200 C. Throws DomainError.
void validate_crystal(const CrystalModel& crystal);

/// Parses and validates a crystal data file (JSON). Throws DomainError on schema or
/// invariant violations.
CrystalModel load_crystal(std::string_view json_text);

/// Reads `path` then defers to load_crystal. Throws IoError if unreadable.
CrystalModel load_crystal_file(const std::filesystem::path& path);

}  // namespace pdc
