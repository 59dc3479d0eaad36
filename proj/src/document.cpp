#include "harmonic_shear/document.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

namespace hshear {

namespace {

using nlohmann::json;

constexpr std::string_view kAngleSign = "\xE2\x88\xA0";  // ∠

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "map document: " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

json coeffs_to_json(const std::vector<Complex>& c) {
  json out = json::array();
  for (const Complex& z : c) out.push_back({z.real(), z.imag()});
  return out;
}

std::vector<Complex> coeffs_from_json(const json& j, const char* field) {
  if (!j.is_array()) schema_error(std::string(field) + " must be an array of [re, im]");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      schema_error(std::string(field) + " entries must be [re, im] number pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

double number_or(const json& j, const char* key, double fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) schema_error(std::string("params.") + key + " must be a number");
  return it->get<double>();
}

std::vector<Complex> series_coeffs(const TruncatedSeries& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

}  // namespace

json family_params_to_json(const FamilyParams& p) {
  json j = {{"mu", p.mu}, {"nu", p.nu}, {"alpha", p.alpha}, {"omega", coeffs_to_json(p.omega)}};
  if (p.shear_angle) j["shear_angle"] = *p.shear_angle;
  return j;
}

FamilyParams family_params_from_json(const json& j) {
  if (!j.is_object()) schema_error("params must be an object");
  FamilyParams p;
  p.mu = number_or(j, "mu", 0.0);
  p.nu = number_or(j, "nu", 0.0);
  p.alpha = number_or(j, "alpha", 0.0);
  if (j.contains("shear_angle")) p.shear_angle = number_or(j, "shear_angle", 0.0);
  if (j.contains("omega")) p.omega = coeffs_from_json(j.at("omega"), "params.omega");
  return p;
}

MapDocument make_document(const HarmonicMap& f, std::string family, json params) {
  MapDocument doc;
  doc.family = std::move(family);
  doc.params = std::move(params);
  doc.truncation = f.order();
  doc.h = series_coeffs(f.h());
  doc.g = series_coeffs(f.g());
  return doc;
}

HarmonicMap to_map(const MapDocument& doc) {
  std::optional<ShearRecipe> recipe;
  if (const auto family = parse_family(doc.family)) {
    recipe = family_recipe(*family, family_params_from_json(doc.params));
  }
  return HarmonicMap(TruncatedSeries(doc.h), TruncatedSeries(doc.g), std::move(recipe));
}

json to_json(const MapDocument& doc) {
  return {{"schema_version", doc.schema_version},
          {"family", doc.family},
          {"params", doc.params},
          {"truncation", doc.truncation},
          {"h", coeffs_to_json(doc.h)},
          {"g", coeffs_to_json(doc.g)}};
}

MapDocument document_from_json(const json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  for (const char* key : {"schema_version", "family", "params", "truncation", "h", "g"}) {
    if (!j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  }
  MapDocument doc;
  if (!j["schema_version"].is_string()) schema_error("schema_version must be a string");
  doc.schema_version = j["schema_version"].get<std::string>();
  if (doc.schema_version != kSchemaVersion) {
    schema_error("unsupported schema_version '" + doc.schema_version + "'");
  }
  if (!j["family"].is_string()) schema_error("family must be a string");
  doc.family = j["family"].get<std::string>();
  if (doc.family != "custom" && !parse_family(doc.family)) {
    schema_error("unknown family '" + doc.family + "'");
  }
  if (!j["params"].is_object()) schema_error("params must be an object");
  doc.params = j["params"];
  if (!j["truncation"].is_number_integer() || j["truncation"].get<long long>() < 0 ||
      j["truncation"].get<long long>() > std::numeric_limits<int>::max() - 1) {
    schema_error("truncation must be a non-negative integer");
  }
  doc.truncation = j["truncation"].get<int>();
  doc.h = coeffs_from_json(j["h"], "h");
  doc.g = coeffs_from_json(j["g"], "g");
  const auto expected = static_cast<std::size_t>(doc.truncation) + 1;
  if (doc.h.size() != expected || doc.g.size() != expected) {
    schema_error("h and g must each hold truncation + 1 coefficients");
  }
  return doc;
}

void save_document(const MapDocument& doc, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  os << to_json(doc).dump(2) << '\n';
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

MapDocument load_document(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open '" + path.string() + "' for reading");
  json j;
  try {
    is >> j;
  } catch (const json::parse_error& e) {
    schema_error("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return document_from_json(j);
}

json to_json(const CheckReport& report) {
  json details = json::object();
  for (const auto& [key, value] : report.details) details[key] = value;
  return {{"passed", report.passed},
          {"criterion", report.criterion},
          {"extremal_value", report.extremal_value},
          {"witness", {report.witness.real(), report.witness.imag()}},
          {"samples_checked", report.samples_checked},
          {"details", details}};
}

json to_json(const SuiteReport& report) {
  json cases = json::array();
  for (const SuiteCase& c : report.cases) {
    json entry = to_json(c.report);
    entry["label"] = c.label;
    cases.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion},
          {"suite", report.suite},
          {"passed", report.passed()},
          {"cases", cases}};
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (const auto at = text.find(kAngleSign); at != std::string_view::npos) {
    return std::polar(parse_real(text.substr(0, at)),
                      parse_real(text.substr(at + kAngleSign.size())));
  }
  if (const auto comma = text.find(','); comma != std::string_view::npos) {
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
  }
  return parse_real(text);
}

std::vector<Complex> parse_omega(std::string_view text) {
  std::vector<Complex> coeffs;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view term = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (term.empty()) continue;

    const auto n_at = term.rfind(",n=");
    if (term.substr(0, 2) != "a=" || n_at == std::string_view::npos || n_at < 2) {
      throw Error(ErrorKind::InvalidArgument,
                  "omega term must look like 'a=<complex>,n=<int>': '" + std::string(term) + "'");
    }
    const Complex a = parse_complex(term.substr(2, n_at - 2));
    const int n = parse_int(term.substr(n_at + 3));
    if (n < 0 || n > 100000) throw Error(ErrorKind::InvalidArgument, "omega power out of range");
    if (coeffs.size() <= static_cast<std::size_t>(n)) coeffs.resize(static_cast<std::size_t>(n) + 1);
    coeffs[static_cast<std::size_t>(n)] += a;
  }
  return coeffs;
}

SampleGrid grid_from_environment() {
  if (const char* spec = std::getenv(kGridEnvVar); spec != nullptr && *spec != '\0') {
    return SampleGrid::parse(spec);
  }
  return SampleGrid::default_grid();
}

std::vector<CurveRow> sample_boundary(const HarmonicMap& f, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "radius must lie in (0, 1)");
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  std::vector<CurveRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = kTwoPi * j / samples;
    const Complex w = f.value(std::polar(r, theta));
    rows.push_back({theta, w.real(), w.imag()});
  }
  return rows;
}

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  const auto old = os.precision(std::numeric_limits<double>::max_digits10);
  os << "theta,re,im\n";
  for (const CurveRow& row : rows) os << row.theta << ',' << row.re << ',' << row.im << '\n';
  os.precision(old);
}

}  // namespace hshear
