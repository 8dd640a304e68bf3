#include "pdc/crystal.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pdc/error.hpp"

namespace pdc {

namespace {

using nlohmann::json;

struct FormSpec {
  SellmeierSet::Form form;
  std::string_view id;
  std::set<std::string> required;
  std::set<std::string> optional;
};

const std::vector<FormSpec>& form_specs() {
  static const std::vector<FormSpec> specs = {
      {SellmeierSet::Form::kConstant, "constant", {"n"}, {}},
      {SellmeierSet::Form::kStandard, "sellmeier", {"A", "B1", "C1"}, {"B2", "C2", "B3", "C3", "D"}},
      {SellmeierSet::Form::kGayer,
       "gayer2008",
       {"a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4"},
       {}},
  };
  return specs;
}

const FormSpec& spec_for(SellmeierSet::Form form) {
  for (const auto& spec : form_specs())
    if (spec.form == form) return spec;
  throw DomainError("unknown Sellmeier form");
}

// Sample counts for the invariant scan in validate_crystal().
constexpr int kValidationWavelengths = 400;
constexpr double kValidationTemperatures[] = {0.0, 24.5, 50.0, 100.0, 150.0, 200.0};

[[noreturn]] void schema_error(const std::string& what) {
  throw DomainError("crystal file: " + what);
}

template <typename T>
T require(const json& doc, const char* key) {
  if (!doc.contains(key)) schema_error(fmt::format("missing field '{}'", key));
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    schema_error(fmt::format("field '{}' has the wrong type", key));
  }
}

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed, std::string_view where) {
  for (const auto& [key, _] : doc.items())
    if (!allowed.count(key)) schema_error(fmt::format("unknown key '{}' in {}", key, where));
}

TemperatureModel parse_temperature_model(const json& doc) {
  TemperatureModel model;
  if (doc.is_string()) {
    if (doc.get<std::string>() != "none") schema_error("temperature_model string must be \"none\"");
    return model;
  }
  if (!doc.is_object()) schema_error("temperature_model must be an object or \"none\"");
  reject_unknown_keys(doc, {"form", "reference_c", "offset_c"}, "temperature_model");
  const auto form = require<std::string>(doc, "form");
  if (form == "none") return model;
  if (form != "quadratic_factor") schema_error(fmt::format("unknown temperature_model form '{}'", form));
  model.form = TemperatureModel::Form::kQuadraticFactor;
  model.reference_c = require<double>(doc, "reference_c");
  model.offset_c = require<double>(doc, "offset_c");
  return model;
}

}  // namespace

OpticalAxis OpticalAxis::parse(std::string_view text) {
  if (text == "ordinary") return ordinary();
  if (text == "extraordinary") return extraordinary();
  if (text.empty()) throw DomainError("empty optical axis label");
  return {std::string(text)};
}

double TemperatureModel::factor(double temperature_c) const {
  if (form == Form::kNone) return 0.0;
  return (temperature_c - reference_c) * (temperature_c + offset_c);
}

double PoleExpansion::epsilon(double u) const {
  double value = constant - ir_slope * u;
  for (const auto& p : poles) value += p.strength / (u - p.resonance);
  return value;
}

double PoleExpansion::d_epsilon(double u) const {
  double value = -ir_slope;
  for (const auto& p : poles) {
    const double d = u - p.resonance;
    value -= p.strength / (d * d);
  }
  return value;
}

double PoleExpansion::d2_epsilon(double u) const {
  double value = 0.0;
  for (const auto& p : poles) {
    const double d = u - p.resonance;
    value += 2.0 * p.strength / (d * d * d);
  }
  return value;
}

SellmeierSet::SellmeierSet(Form form, std::map<std::string, double> coefficients)
    : form_(form), coefficients_(std::move(coefficients)) {
  const auto& spec = spec_for(form_);
  for (const auto& name : spec.required)
    if (!coefficients_.count(name))
      throw DomainError(fmt::format("Sellmeier form '{}' requires coefficient '{}'", spec.id, name));
  for (const auto& [name, value] : coefficients_) {
    if (!spec.required.count(name) && !spec.optional.count(name))
      throw DomainError(fmt::format("Sellmeier form '{}' has no coefficient '{}'", spec.id, name));
    if (!std::isfinite(value))
      throw DomainError(fmt::format("Sellmeier coefficient '{}' is not finite", name));
  }
  for (int i = 2; i <= 3; ++i) {
    const bool has_b = coefficients_.count(fmt::format("B{}", i)) != 0;
    const bool has_c = coefficients_.count(fmt::format("C{}", i)) != 0;
    if (has_b != has_c) throw DomainError(fmt::format("Sellmeier terms B{0} and C{0} must come in pairs", i));
  }
}

double SellmeierSet::coefficient(const std::string& name) const {
  const auto it = coefficients_.find(name);
  return it == coefficients_.end() ? 0.0 : it->second;
}

PoleExpansion SellmeierSet::expand(double f) const {
  PoleExpansion e;
  switch (form_) {
    case Form::kConstant: {
      const double n = coefficient("n");
      e.constant = n * n;
      break;
    }
    case Form::kStandard: {
      // B u / (u - C) = B + B C / (u - C)
      e.constant = coefficient("A");
      for (int i = 1; i <= 3; ++i) {
        const auto b_name = fmt::format("B{}", i);
        if (!coefficients_.count(b_name)) continue;
        const double b = coefficient(b_name);
        const double c = coefficient(fmt::format("C{}", i));
        e.constant += b;
        e.poles.push_back({b * c, c});
      }
      e.ir_slope = coefficient("D");
      break;
    }
    case Form::kGayer: {
      const double uv_root = coefficient("a3") + coefficient("b3") * f;
      const double ir_root = coefficient("a5");
      e.constant = coefficient("a1") + coefficient("b1") * f;
      e.poles.push_back({coefficient("a2") + coefficient("b2") * f, uv_root * uv_root});
      e.poles.push_back({coefficient("a4") + coefficient("b4") * f, ir_root * ir_root});
      e.ir_slope = coefficient("a6");
      break;
    }
  }
  return e;
}

SellmeierSet::Form SellmeierSet::parse_form(std::string_view id) {
  for (const auto& spec : form_specs())
    if (spec.id == id) return spec.form;
  throw DomainError(fmt::format("unknown Sellmeier form '{}'", id));
}

std::string_view SellmeierSet::form_id(Form form) { return spec_for(form).id; }

const SellmeierSet& CrystalModel::axis(const OpticalAxis& axis) const {
  const auto it = axes.find(axis.label);
  if (it == axes.end()) {
    std::string known;
    for (const auto& [label, _] : axes) known += (known.empty() ? "" : ", ") + label;
    throw DomainError(fmt::format("crystal '{}' has no axis '{}' (registered: {})", name, axis.label, known));
  }
  return it->second;
}

void validate_crystal(const CrystalModel& crystal) {
  if (crystal.name.empty()) throw DomainError("crystal name is empty");
  if (crystal.axes.empty()) throw DomainError(fmt::format("crystal '{}' has an empty axes map", crystal.name));

  const std::set<std::string> allowed = crystal.crystal_class == CrystalClass::kUniaxial
                                            ? std::set<std::string>{"o", "e"}
                                            : std::set<std::string>{"x", "y", "z"};
  for (const auto& [label, _] : crystal.axes)
    if (!allowed.count(label))
      throw DomainError(fmt::format("axis label '{}' does not fit the crystal class of '{}'", label, crystal.name));

  if (!(crystal.d_eff_pm_per_v > 0.0) || !std::isfinite(crystal.d_eff_pm_per_v))
    throw DomainError(fmt::format("crystal '{}': d_eff must be positive", crystal.name));

  const auto& range = crystal.valid_range;
  if (!(range.min_um > 0.0) || !(range.max_um > range.min_um) || !std::isfinite(range.max_um))
    throw DomainError(fmt::format("crystal '{}': valid range [{}, {}] um is empty", crystal.name, range.min_um,
                                  range.max_um));

  const double u_min = range.min_um * range.min_um;
  const double u_max = range.max_um * range.max_um;
  for (const auto& [label, set] : crystal.axes) {
    for (double temperature : kValidationTemperatures) {
      const auto expansion = set.expand(crystal.temperature_model.factor(temperature));
      for (const auto& pole : expansion.poles)
        if (pole.resonance >= u_min && pole.resonance <= u_max)
          throw DomainError(fmt::format("crystal '{}' axis '{}': Sellmeier pole at {:.4g} um lies inside the valid range",
                                        crystal.name, label, std::sqrt(pole.resonance)));
      for (int i = 0; i <= kValidationWavelengths; ++i) {
        const double lambda = range.min_um + (range.max_um - range.min_um) * i / kValidationWavelengths;
        const double eps = expansion.epsilon(lambda * lambda);
        if (!std::isfinite(eps) || eps <= 1.0)
          throw DomainError(fmt::format("crystal '{}' axis '{}': n = {:.4g} <= 1 at {:.4g} um, {} C", crystal.name,
                                        label, eps > 0.0 ? std::sqrt(eps) : 0.0, lambda, temperature));
      }
    }
  }
}

CrystalModel load_crystal(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error(fmt::format("not valid JSON ({})", e.what()));
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  reject_unknown_keys(doc,
                      {"name", "class", "axes", "temperature_model", "d_eff_pm_per_V", "valid_range_um", "provenance"},
                      "crystal");

  CrystalModel crystal;
  crystal.name = require<std::string>(doc, "name");
  const auto cls = require<std::string>(doc, "class");
  if (cls == "uniaxial")
    crystal.crystal_class = CrystalClass::kUniaxial;
  else if (cls == "biaxial")
    crystal.crystal_class = CrystalClass::kBiaxial;
  else
    schema_error(fmt::format("class must be 'uniaxial' or 'biaxial', got '{}'", cls));

  if (!doc.contains("axes") || !doc["axes"].is_object()) schema_error("missing object field 'axes'");
  if (doc["axes"].empty()) schema_error("axes map is empty");
  for (const auto& [label, block] : doc["axes"].items()) {
    if (!block.is_object() || !block.contains("sellmeier")) schema_error(fmt::format("axis '{}' lacks a sellmeier block", label));
    reject_unknown_keys(block, {"sellmeier"}, "axis " + label);
    const auto& sm = block["sellmeier"];
    reject_unknown_keys(sm, {"form", "coefficients"}, "sellmeier block");
    const auto form = SellmeierSet::parse_form(require<std::string>(sm, "form"));
    auto coefficients = require<std::map<std::string, double>>(sm, "coefficients");
    crystal.axes.emplace(OpticalAxis::parse(label).label, SellmeierSet(form, std::move(coefficients)));
  }

  if (!doc.contains("temperature_model")) schema_error("missing field 'temperature_model'");
  crystal.temperature_model = parse_temperature_model(doc["temperature_model"]);
  crystal.d_eff_pm_per_v = require<double>(doc, "d_eff_pm_per_V");
  const auto range = require<std::vector<double>>(doc, "valid_range_um");
  if (range.size() != 2) schema_error("valid_range_um must hold exactly two numbers");
  crystal.valid_range = {range[0], range[1]};
  crystal.provenance = require<std::string>(doc, "provenance");

  validate_crystal(crystal);
  return crystal;
}

CrystalModel load_crystal_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open crystal file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_crystal(buffer.str());
}

}  // namespace pdc
