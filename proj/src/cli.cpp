#include "harmonic_shear/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "harmonic_shear/analysis.hpp"
#include "harmonic_shear/convolve.hpp"
#include "harmonic_shear/document.hpp"
#include "harmonic_shear/suites.hpp"

namespace hshear {

namespace {

using nlohmann::json;

struct GenArgs {
  std::string family;
  double mu = 0.0;
  double nu = 0.0;
  double alpha = 0.0;
  std::optional<double> shear_angle;
  std::string omega;
  int order = kDefaultOrder;
  std::string out;
};

struct ConvolveArgs {
  std::string first;
  std::string second;
  bool tilde = false;
  std::string out;
};

struct CheckArgs {
  std::string doc;
  std::string criterion;
  double gamma = 0.0;
  double r = 0.95;
  int samples = 720;
  std::string grid;
  std::string lattice;
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> n;
  std::optional<std::string> a;
  double phase = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  int samples = 20;
  std::uint64_t seed = 1;
  std::optional<int> order;
  int directions = 36;
  std::string grid;
};

struct ExportArgs {
  std::string doc;
  double r = 0.99;
  int samples = 720;
  std::string out;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw IoError("failed writing '" + path + "'");
}

SampleGrid resolve_grid(const std::string& flag) {
  return flag.empty() ? grid_from_environment() : SampleGrid::parse(flag);
}

Lattice parse_lattice(const std::string& text) {
  if (text.empty()) return {};
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "lattice must look like '<mu_steps>,<nu_steps>'");
  }
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "lattice steps must be integers");
  }
}

bool is_analytic(const HarmonicMap& f) {
  const auto g = f.g().coeffs();
  return std::all_of(g.begin(), g.end(), [](Complex c) { return c == Complex(0.0); });
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(a.family);
  if (!family) throw Error(ErrorKind::InvalidArgument, "unknown family '" + a.family + "'");
  if (a.order < 1) throw Error(ErrorKind::InvalidArgument, "--N must be at least 1");

  FamilyParams p{a.mu, a.nu, a.alpha, a.shear_angle, parse_omega(a.omega)};
  const HarmonicMap f = build_family(*family, p, a.order);
  const MapDocument doc = make_document(f, a.family, family_params_to_json(p));
  write_text(a.out, to_json(doc).dump(2) + "\n", out);

  err << "normalization: h(0)=" << std::abs(f.h()[0]) << " |h'(0)-1|=" << std::abs(f.h()[1] - 1.0)
      << " g(0)=" << std::abs(f.g()[0]) << " |g'(0)|=" << std::abs(f.g()[1])
      << " normalized=" << (f.is_normalized() ? "yes" : "no")
      << " S0=" << (f.is_s0() ? "yes" : "no") << '\n';
  return kExitPass;
}

int cmd_convolve(const ConvolveArgs& a, std::ostream& out, std::ostream& err) {
  const MapDocument d1 = load_document(a.first);
  const MapDocument d2 = load_document(a.second);
  if (d1.truncation != d2.truncation) {
    err << "warning: truncation orders differ (" << d1.truncation << " vs " << d2.truncation
        << "); using " << std::min(d1.truncation, d2.truncation) << '\n';
  }
  const HarmonicMap f1 = to_map(d1);
  const HarmonicMap f2 = to_map(d2);

  HarmonicMap f = f1;
  std::string operation;
  if (a.tilde) {
    if (!is_analytic(f2)) {
      throw Error(ErrorKind::InvalidArgument, "--tilde needs an analytic second document (g = 0)");
    }
    f = tilde_convolve(f1, f2.h());
    operation = "tilde-convolution";
  } else {
    f = harmonic_convolve(f1, f2);
    operation = "harmonic-convolution";
  }
  const json params = {{"operation", operation}, {"operands", {d1.family, d2.family}}};
  write_text(a.out, to_json(make_document(f, "custom", params)).dump(2) + "\n", out);
  return kExitPass;
}

CheckReport check_convex(const HarmonicMap& f, const SampleGrid& grid, Lattice lattice) {
  if (is_analytic(f)) {
    const auto& recipe = f.recipe();
    if (recipe && recipe->omega.empty()) {
      // h is the recipe kernel itself, so the closed form covers the whole grid.
      const KernelParams k = recipe->target;
      return convexity_check([k](Complex z) { return k.derivative(z); },
                             [k](Complex z) { return k.second_derivative(z); }, grid);
    }
    return convexity_check(f.h(), grid);
  }
  // Harmonic: convex iff convex in every direction.
  constexpr int kDirections = 36;
  CheckReport total;
  total.criterion = "convex-all-directions";
  total.passed = true;
  total.extremal_value = std::numeric_limits<double>::infinity();
  int passed = 0;
  for (int j = 0; j < kDirections; ++j) {
    const double gamma = kPi * j / kDirections;
    const CheckReport r = direction_convexity_certificate(f, gamma, grid, lattice);
    total.samples_checked += r.samples_checked;
    if (r.passed) ++passed;
    if (!r.passed && total.passed) {
      total.passed = false;
      total.criterion = r.criterion;
      total.extremal_value = r.extremal_value;
      total.witness = r.witness;
      total.details = r.details;
    } else if (total.passed && r.extremal_value < total.extremal_value) {
      total.extremal_value = r.extremal_value;
      total.witness = r.witness;
    }
  }
  total.details["directions"] = kDirections;
  total.details["directions_passed"] = passed;
  return total;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const HarmonicMap f = to_map(load_document(a.doc));
  const SampleGrid grid = resolve_grid(a.grid);
  const Lattice lattice = parse_lattice(a.lattice);

  CheckReport report;
  if (a.criterion == "sense") {
    const TruncatedSeries w = dilatation_series(f);
    report = sup_modulus([&](Complex z) { return evaluate(w, z); }, grid.capped(kSeriesRadiusCap));
  } else if (a.criterion == "convex") {
    report = check_convex(f, grid, lattice);
  } else if (a.criterion == "direction") {
    report = direction_convexity_certificate(f, a.gamma, grid, lattice);
  } else {
    const int count = boundary_extrema_count(f, a.gamma, a.r, a.samples);
    report.criterion = "boundary-extrema";
    report.passed = count == 2;
    report.extremal_value = count;
    report.samples_checked = a.samples;
    report.details = {{"gamma", a.gamma}, {"r", a.r}};
  }
  json j = to_json(report);
  j["schema_version"] = kSchemaVersion;
  out << j.dump(2) << '\n';
  return report.passed ? kExitPass : kExitCertificateFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const SampleGrid grid = resolve_grid(a.grid);
  auto complex_or = [&](Complex fallback) { return a.a ? parse_complex(*a.a) : fallback; };

  SuiteReport report;
  if (a.suite == "monomial-theorem") {
    report = monomial_theorem_suite({complex_or(1.0), a.n.value_or(1), a.mu, a.nu}, grid);
  } else if (a.suite == "counterexample") {
    report = counterexample_suite(a.n.value_or(3), a.phase, a.mu, a.nu, grid);
  } else if (a.suite == "generalized-f1") {
    GeneralizedCase c{complex_or(0.5), a.n.value_or(1), a.mu1, a.mu2, a.nu};
    if (a.order) c.order = *a.order;
    report = generalized_f1_suite(c, grid);
  } else if (a.suite == "phi-convex") {
    report = a.order ? phi_convex_suite(a.samples, a.seed, grid, *a.order)
                     : phi_convex_suite(a.samples, a.seed, grid);
  } else {
    TildeCase c{a.mu, a.nu, complex_or(0.5), a.directions};
    if (a.order) c.order = *a.order;
    report = tilde_convex_suite(c, grid);
  }
  out << to_json(report).dump(2) << '\n';
  return report.passed() ? kExitPass : kExitCertificateFailed;
}

int cmd_export(const ExportArgs& a, std::ostream& out, std::ostream& err) {
  const MapDocument doc = load_document(a.doc);
  const HarmonicMap f = to_map(doc);
  std::ostringstream csv;
  write_curve_csv(csv, sample_boundary(f, a.r, a.samples));
  write_text(a.out, csv.str(), out);

  const auto family = parse_family(doc.family);
  if (family == Family::Strip || family == Family::SlantedStrip) {
    const FamilyParams p = family_params_from_json(doc.params);
    const auto [lower, upper] = strip_bounds(p.mu);
    err << std::setprecision(17) << "strip bounds: " << lower << " < Re w < " << upper;
    if (family == Family::SlantedStrip) err << " (before rotation by e^{i alpha})";
    err << '\n';
  }
  return kExitPass;
}

bool is_evaluation_failure(ErrorKind kind) {
  return kind == ErrorKind::VanishingDenominator || kind == ErrorKind::NearSingularDivision ||
         kind == ErrorKind::NonFinite;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic mappings by shear construction, Hadamard convolution and grid "
               "certificates.",
               "harmonic-shear"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "harmonic-shear 1.0");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a named family and write its map document");
  gen_cmd->add_option("family", gen.family,
                      "half-plane | slanted-half-plane | strip | slanted-strip | phi-kernel | "
                      "generalized-half-plane")
      ->required();
  gen_cmd->add_option("--mu", gen.mu, "Angle mu (radians)");
  gen_cmd->add_option("--nu", gen.nu, "Angle nu (radians)");
  gen_cmd->add_option("--alpha", gen.alpha, "Slant angle alpha (radians)");
  gen_cmd->add_option("--shear-angle", gen.shear_angle, "phi-kernel shear angle (default mu)");
  gen_cmd->add_option("--omega", gen.omega, "Dilatation, e.g. \"a=0.5,0.1,n=1;a=0.2,n=3\"");
  gen_cmd->add_option("--N", gen.order, "Truncation order")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  ConvolveArgs conv;
  auto* conv_cmd = app.add_subcommand("convolve", "Hadamard-convolve two map documents");
  conv_cmd->add_option("first", conv.first, "First map document")->required();
  conv_cmd->add_option("second", conv.second, "Second map document")->required();
  conv_cmd->add_flag("--tilde", conv.tilde, "Convolve both parts of the first with h of the second");
  conv_cmd->add_option("--out", conv.out, "Output path (default stdout)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run one grid certificate on a map document");
  check_cmd->add_option("doc", check.doc, "Map document")->required();
  check_cmd->add_option("--criterion", check.criterion, "sense | convex | direction | boundary")
      ->required()
      ->check(CLI::IsMember({"sense", "convex", "direction", "boundary"}));
  check_cmd->add_option("--gamma", check.gamma, "Direction angle (radians)");
  check_cmd->add_option("--r", check.r, "Boundary radius")->capture_default_str();
  check_cmd->add_option("--M", check.samples, "Boundary samples")->capture_default_str();
  check_cmd->add_option("--grid", check.grid, "Grid spec \"r1,r2,...;M\"");
  check_cmd->add_option("--lattice", check.lattice, "Certificate lattice \"mu_steps,nu_steps\"");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem suite");
  verify_cmd->add_option("suite", verify.suite,
                         "monomial-theorem | counterexample | generalized-f1 | phi-convex | "
                         "tilde-convex")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames),
                                                     std::end(kSuiteNames))));
  verify_cmd->add_option("--n", verify.n, "Monomial power n");
  verify_cmd->add_option("--a", verify.a, "Monomial coefficient a (\"re,im\" or \"r∠θ\")");
  verify_cmd->add_option("--phase", verify.phase, "Counterexample phase of a = e^{i phase}");
  verify_cmd->add_option("--mu", verify.mu, "Angle mu (radians)");
  verify_cmd->add_option("--nu", verify.nu, "Angle nu (radians)");
  verify_cmd->add_option("--mu1", verify.mu1, "Angle mu1 of the generalized half-plane map");
  verify_cmd->add_option("--mu2", verify.mu2, "Shear angle mu2 of the second map");
  verify_cmd->add_option("--samples", verify.samples, "Random draws (phi-convex)")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Random seed (phi-convex)")->capture_default_str();
  verify_cmd->add_option("--order", verify.order, "Truncation order");
  verify_cmd->add_option("--directions", verify.directions, "Directions (tilde-convex)")
      ->capture_default_str();
  verify_cmd->add_option("--grid", verify.grid, "Grid spec \"r1,r2,...;M\"");

  ExportArgs exp;
  auto* exp_cmd = app.add_subcommand("export-boundary", "Write the image of |z| = r as CSV");
  exp_cmd->add_option("doc", exp.doc, "Map document")->required();
  exp_cmd->add_option("--r", exp.r, "Radius in (0, 1)")->capture_default_str();
  exp_cmd->add_option("--M", exp.samples, "Number of samples")->capture_default_str();
  exp_cmd->add_option("--out", exp.out, "Output path (default stdout)");

  std::vector<std::string> argv_store{"harmonic-shear"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
    if (conv_cmd->parsed()) return cmd_convolve(conv, out, err);
    if (check_cmd->parsed()) return cmd_check(check, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    return cmd_export(exp, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (!is_evaluation_failure(e.kind())) return kExitUsage;
    json j = {{"schema_version", kSchemaVersion},
              {"error", to_string(e.kind())},
              {"message", e.what()}};
    if (e.point()) j["point"] = {e.point()->real(), e.point()->imag()};
    out << j.dump(2) << '\n';
    return kExitEvaluation;
  } catch (const json::exception& e) {
    err << "error: malformed document: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hshear
