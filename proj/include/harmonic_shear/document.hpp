#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "harmonic_shear/analysis.hpp"
#include "harmonic_shear/mappings.hpp"
#include "harmonic_shear/suites.hpp"

namespace hshear {

inline constexpr std::string_view kSchemaVersion = "1";

/// Environment variable overriding the default grid, as "r1,r2,...;M".
inline constexpr const char* kGridEnvVar = "HARMONIC_SHEAR_GRID";

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serialized harmonic map. `params` is kept verbatim so that
/// save/load/save is byte-stable; named families read their parameters from it.
struct MapDocument {
  std::string schema_version{kSchemaVersion};
  std::string family = "custom";
  nlohmann::json params = nlohmann::json::object();
  int truncation = 0;
  std::vector<Complex> h;
  std::vector<Complex> g;
};

nlohmann::json family_params_to_json(const FamilyParams& params);
FamilyParams family_params_from_json(const nlohmann::json& params);

MapDocument make_document(const HarmonicMap& f, std::string family, nlohmann::json params);

/// The map, with its recipe restored when the family is a named one.
HarmonicMap to_map(const MapDocument& doc);

nlohmann::json to_json(const MapDocument& doc);
/// Throws Error(InvalidArgument) on schema violations.
MapDocument document_from_json(const nlohmann::json& j);

void save_document(const MapDocument& doc, const std::filesystem::path& path);
MapDocument load_document(const std::filesystem::path& path);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const SuiteReport& report);

/// "re,im", "r∠θ" (θ in radians), or a bare real.
Complex parse_complex(std::string_view text);

/// Polynomial dilatation from terms "a=<complex>,n=<int>" separated by ';'.
std::vector<Complex> parse_omega(std::string_view text);

/// HARMONIC_SHEAR_GRID when set, otherwise the default grid.
SampleGrid grid_from_environment();

struct CurveRow {
  double theta;
  double re;
  double im;
};

/// f(re^{iθ}) at M equispaced θ in [0, 2π).
std::vector<CurveRow> sample_boundary(const HarmonicMap& f, double r, int samples);
void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);

}  // namespace hshear
