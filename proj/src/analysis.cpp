#include "harmonic_shear/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace hshear {

namespace {

constexpr double kVanishingDerivative = 1e-10;
constexpr double kFlatDifference = 1e-12;
constexpr double kNonvanishingQ = 1e-10;

Complex unit(double theta) { return std::polar(1.0, theta); }

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

// Re-throws evaluation failures with the grid point attached.
template <class F>
Complex evaluate_at(const F& eval, Complex z) {
  try {
    return eval(z);
  } catch (const Error& e) {
    if (e.point()) throw;
    throw Error(e.kind(), e.what(), z);
  }
}

// Minimum of a real-valued functional over a point set, with its witness.
struct Minimum {
  double value = std::numeric_limits<double>::infinity();
  Complex where{};
  void offer(double v, Complex z) {
    if (v < value) {
      value = v;
      where = z;
    }
  }
};

CheckReport convexity_over(const std::vector<Complex>& pts, const PointFunction& dphi,
                           const PointFunction& d2phi) {
  CheckReport report;
  report.criterion = "convexity";
  Minimum m;
  for (Complex z : pts) {
    ++report.samples_checked;
    const Complex d = evaluate_at(dphi, z);
    if (std::abs(d) <= kVanishingDerivative) {
      report.criterion = "derivative-vanishes";
      report.extremal_value = std::abs(d);
      report.witness = z;
      return report;
    }
    m.offer(std::real(1.0 + z * evaluate_at(d2phi, z) / d), z);
  }
  report.extremal_value = m.value;
  report.witness = m.where;
  report.passed = m.value > 0.0;
  return report;
}

// Re{A·F' + B·zF' + C·z²F'} for the directional criterion.
struct RzCoefficients {
  Complex a, b, c;
  RzCoefficients(double gamma, double mu, double nu)
      : a(unit(mu - gamma)), b(-2.0 * std::cos(nu) * unit(-gamma)), c(unit(-(mu + gamma))) {}
};

CheckReport rz_over(const std::vector<Complex>& pts, const PointFunction& dphi, double gamma,
                    double mu, double nu) {
  const RzCoefficients k(gamma, mu, nu);
  CheckReport report;
  report.criterion = "royster-zeigler";
  Minimum m;
  for (Complex z : pts) {
    ++report.samples_checked;
    const Complex d = evaluate_at(dphi, z);
    m.offer(std::real((k.a + k.b * z + k.c * z * z) * d), z);
  }
  report.extremal_value = m.value;
  report.witness = m.where;
  report.passed = m.value >= -kCertificateTolerance;
  report.details = {{"mu", mu}, {"nu", nu}, {"gamma", gamma}};
  return report;
}

PointFunction series_function(TruncatedSeries s) {
  return [s = std::move(s)](Complex z) { return evaluate(s, z); };
}

}  // namespace

SampleGrid::SampleGrid(std::vector<double> radii, int angle_count)
    : radii_(std::move(radii)), angles_(angle_count) {
  if (radii_.empty()) throw Error(ErrorKind::InvalidArgument, "sample grid needs a radius");
  if (angles_ < 8) throw Error(ErrorKind::InvalidArgument, "sample grid needs at least 8 angles");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0 && radii_[i] < 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "grid radii must lie in (0, 1)");
    }
    if (i > 0 && !(radii_[i] > radii_[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "grid radii must be strictly increasing");
    }
  }
}

SampleGrid SampleGrid::default_grid() {
  return SampleGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.995}, 720);
}

SampleGrid SampleGrid::parse(std::string_view spec) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument, "grid spec must look like 'r1,r2,...;M'");
  }
  std::vector<double> radii;
  std::string_view list = spec.substr(0, semi);
  while (true) {
    const auto comma = list.find(',');
    radii.push_back(parse_double(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  const double m = parse_double(spec.substr(semi + 1));
  if (m != std::floor(m) || m > 1e7) {
    throw Error(ErrorKind::InvalidArgument, "grid angle count must be an integer");
  }
  return SampleGrid(std::move(radii), static_cast<int>(m));
}

double SampleGrid::angle(int j) const { return kTwoPi * j / angles_; }

std::vector<Complex> SampleGrid::points() const {
  std::vector<Complex> pts;
  pts.reserve(size());
  for (double r : radii_) {
    for (int j = 0; j < angles_; ++j) pts.push_back(std::polar(r, angle(j)));
  }
  return pts;
}

SampleGrid SampleGrid::capped(double cap) const {
  std::vector<double> kept;
  for (double r : radii_) {
    if (r <= cap) kept.push_back(r);
  }
  if (kept.empty()) kept.push_back(cap);
  return SampleGrid(std::move(kept), angles_);
}

CheckReport sup_modulus(const PointFunction& eval, const SampleGrid& grid, double bound) {
  CheckReport report;
  report.criterion = "sense-preserving";
  double best = -1.0;
  for (Complex z : grid.points()) {
    ++report.samples_checked;
    const double v = std::abs(evaluate_at(eval, z));
    if (v > best) {
      best = v;
      report.witness = z;
    }
  }
  report.extremal_value = best;
  report.passed = best < bound;
  return report;
}

CheckReport convexity_check(const TruncatedSeries& phi, const SampleGrid& grid) {
  const TruncatedSeries d1 = differentiate(phi);
  const TruncatedSeries d2 = d1.order() >= 1 ? differentiate(d1) : TruncatedSeries::zero(0);
  return convexity_over(grid.capped(kSeriesRadiusCap).points(), series_function(d1),
                        series_function(d2));
}

CheckReport convexity_check(const PointFunction& dphi, const PointFunction& d2phi,
                            const SampleGrid& grid) {
  return convexity_over(grid.points(), dphi, d2phi);
}

CheckReport rz_check(const TruncatedSeries& phi, double gamma, double mu, double nu,
                     const SampleGrid& grid) {
  return rz_over(grid.capped(kSeriesRadiusCap).points(), series_function(differentiate(phi)),
                 gamma, mu, nu);
}

CheckReport rz_check(const PointFunction& dphi, double gamma, double mu, double nu,
                     const SampleGrid& grid) {
  return rz_over(grid.points(), dphi, gamma, mu, nu);
}

CheckReport direction_convexity_certificate(const HarmonicMap& f, double gamma,
                                            const SampleGrid& grid, Lattice lattice) {
  if (lattice.mu_steps < 1 || lattice.nu_steps < 1) {
    throw Error(ErrorKind::InvalidArgument, "lattice needs at least one step per angle");
  }
  const SampleGrid g = grid.capped(kSeriesRadiusCap);

  const TruncatedSeries omega = dilatation_series(f);
  CheckReport sense = sup_modulus(series_function(omega), g);
  if (!sense.passed) {
    sense.criterion = "not-sense-preserving";
    return sense;
  }

  // Outer radii first: violations concentrate near the circle.
  std::vector<Complex> pts = g.points();
  std::reverse(pts.begin(), pts.end());
  const TruncatedSeries dF =
      differentiate(linear_combine(1.0, f.h(), -unit(2.0 * gamma), f.g()));
  std::vector<Complex> p0(pts.size()), p1(pts.size()), p2(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    p0[i] = evaluate(dF, pts[i]);
    p1[i] = pts[i] * p0[i];
    p2[i] = pts[i] * p1[i];
  }

  CheckReport report;
  report.samples_checked = sense.samples_checked;
  std::size_t best_survival = 0;
  double best_mu = 0.0, best_nu = 0.0;
  for (int i = 0; i < lattice.mu_steps; ++i) {
    const double mu = kTwoPi * i / lattice.mu_steps;
    for (int j = 0; j < lattice.nu_steps; ++j) {
      const double nu = kPi * j / lattice.nu_steps;
      const RzCoefficients k(gamma, mu, nu);
      std::size_t s = 0;
      for (; s < pts.size(); ++s) {
        if (std::real(k.a * p0[s] + k.b * p1[s] + k.c * p2[s]) < -kCertificateTolerance) break;
      }
      report.samples_checked += static_cast<long long>(std::min(s + 1, pts.size()));
      if (s == pts.size()) {
        Minimum m;
        for (std::size_t t = 0; t < pts.size(); ++t) {
          m.offer(std::real(k.a * p0[t] + k.b * p1[t] + k.c * p2[t]), pts[t]);
        }
        report.passed = true;
        report.criterion = "direction-convexity";
        report.extremal_value = m.value;
        report.witness = m.where;
        report.details = {{"mu", mu}, {"nu", nu}, {"gamma", gamma},
                          {"sup_dilatation", sense.extremal_value}};
        return report;
      }
      if (s >= best_survival) {
        best_survival = s;
        best_mu = mu;
        best_nu = nu;
      }
    }
  }

  // Report the pair that held out longest, with its true minimum.
  const RzCoefficients k(gamma, best_mu, best_nu);
  Minimum m;
  for (std::size_t t = 0; t < pts.size(); ++t) {
    m.offer(std::real(k.a * p0[t] + k.b * p1[t] + k.c * p2[t]), pts[t]);
  }
  report.passed = false;
  report.criterion = "no-certificate";
  report.extremal_value = m.value;
  report.witness = m.where;
  report.details = {{"mu", best_mu}, {"nu", best_nu}, {"gamma", gamma},
                    {"sup_dilatation", sense.extremal_value}};
  return report;
}

int boundary_extrema_count(const HarmonicMap& f, double gamma, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "radius must lie in (0, 1)");
  if (samples < 64) throw Error(ErrorKind::InvalidArgument, "need at least 64 boundary samples");
  const Complex rot = unit(-gamma);
  std::vector<double> v(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const Complex z = std::polar(r, kTwoPi * j / samples);
    v[static_cast<std::size_t>(j)] = std::imag(rot * evaluate_at([&](Complex w) { return f.value(w); }, z));
  }
  std::vector<int> signs;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double d = v[(j + 1) % v.size()] - v[j];
    if (std::abs(d) >= kFlatDifference) signs.push_back(d > 0.0 ? 1 : -1);
  }
  if (signs.size() < 2) return 0;
  int changes = 0;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] != signs[(j + 1) % signs.size()]) ++changes;
  }
  return changes;
}

double theorem_bound(int n) {
  if (n <= 0) throw Error(ErrorKind::Domain, "theorem bound needs n >= 1");
  if (n <= 2) return 1.0;
  // n-1-√(n²-2n) rewritten as its reciprocal conjugate to avoid cancellation.
  const double m = n;
  return 1.0 / (m - 1.0 + std::sqrt(m * m - 2.0 * m));
}

double bound_expression(Complex a, int n) {
  const double t = std::abs(a);
  return 1.0 + t * t - t * (std::abs(2.0 - n) + n);
}

CheckReport verify_monomial_theorem(Complex a, int n, double mu, double nu,
                                    const SampleGrid& grid, int boundary_samples) {
  CheckReport report;
  const double bound = theorem_bound(n);
  if (std::abs(a) > bound + 1e-12) {
    report.criterion = "out-of-theorem-range";
    report.extremal_value = std::abs(a);
    report.details = {{"bound", bound}, {"abs_a", std::abs(a)}};
    return report;
  }
  if (boundary_samples < 8) throw Error(ErrorKind::InvalidArgument, "too few boundary samples");
  report.criterion = "monomial-theorem";
  const MonomialDilatation w(a, n, mu, nu);

  const double expr = bound_expression(a, n);

  double min_q = std::numeric_limits<double>::infinity();
  double sup_inner = 0.0;
  double sup_all = -1.0;
  for (Complex z : grid.points()) {
    ++report.samples_checked;
    const Complex q = w.q_at(z);
    min_q = std::min(min_q, std::abs(q));
    if (std::abs(q) <= kNonvanishingQ) {
      report.witness = z;
      continue;
    }
    const double v = std::abs(std::pow(z, n) * w.p_at(z) / q);
    if (std::abs(z) <= kSeriesRadiusCap + 1e-12) sup_inner = std::max(sup_inner, v);
    if (v > sup_all) {
      sup_all = v;
      report.witness = z;
    }
  }

  double margin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < boundary_samples; ++j) {
    const Complex z = unit(kTwoPi * j / boundary_samples);
    margin = std::min(margin, std::norm(w.q_at(z)) - std::norm(w.p_at(z)));
  }
  report.samples_checked += boundary_samples;

  const bool expr_ok = expr >= -1e-12;
  const bool q_ok = min_q > kNonvanishingQ;
  const bool inner_ok = sup_inner < 1.0 - kCertificateTolerance;
  const bool outer_ok = sup_all <= 1.0 + kCertificateTolerance;
  const bool margin_ok = margin >= -kCertificateTolerance;
  report.passed = expr_ok && q_ok && inner_ok && outer_ok && margin_ok;
  report.extremal_value = sup_all;
  report.details = {{"bound", bound},
                    {"abs_a", std::abs(a)},
                    {"bound_expression", expr},
                    {"min_abs_q", min_q},
                    {"sup_inner", sup_inner},
                    {"sup_grid", sup_all},
                    {"boundary_margin", margin}};
  return report;
}

CheckReport counterexample_search(int n, double phase, double mu, double nu,
                                  const SampleGrid& grid) {
  if (n < 3) throw Error(ErrorKind::Domain, "counterexample search needs n >= 3");
  const MonomialDilatation w(unit(phase), n, mu, nu);
  const double ratio = std::abs(w.p().front()) / std::abs(w.p().back());

  CheckReport report;
  report.criterion = "counterexample";
  double best = -1.0;
  double best_r = grid.radii().front();
  double best_t = 0.0;
  auto probe = [&](double r, double t) {
    ++report.samples_checked;
    const Complex z = std::polar(r, t);
    const Complex q = w.q_at(z);
    if (std::abs(q) <= 1e-12) return;
    const double v = std::abs(std::pow(z, n) * w.p_at(z) / q);
    if (v > best) {
      best = v;
      best_r = r;
      best_t = t;
    }
  };

  const auto& radii = grid.radii();
  for (double r : radii) {
    for (int j = 0; j < grid.angle_count(); ++j) probe(r, grid.angle(j));
  }

  // Local refinement around the best cell: 3 rounds, 10x finer each.
  const auto it = std::find(radii.begin(), radii.end(), best_r);
  double dr = best_r;
  if (it != radii.end()) {
    const std::size_t i = static_cast<std::size_t>(it - radii.begin());
    if (i > 0) dr = best_r - radii[i - 1];
    if (i + 1 < radii.size()) dr = std::max(dr, radii[i + 1] - best_r);
  }
  double dt = kTwoPi / grid.angle_count();
  for (int round = 0; round < 3; ++round) {
    const double r0 = best_r;
    const double t0 = best_t;
    for (int i = -10; i <= 10; ++i) {
      const double r = std::clamp(r0 + dr * i / 10.0, 1e-6, 1.0 - 1e-9);
      for (int j = -10; j <= 10; ++j) probe(r, t0 + dt * j / 10.0);
    }
    dr /= 10.0;
    dt /= 10.0;
  }

  const double half_n = 0.5 * n;
  report.extremal_value = best;
  report.witness = std::polar(best_r, best_t);
  report.passed = best > 1.0 + kCertificateTolerance && std::abs(ratio - half_n) <= 1e-12;
  report.details = {{"root_product_modulus", ratio}, {"expected_root_product", half_n}};
  return report;
}

}  // namespace hshear
