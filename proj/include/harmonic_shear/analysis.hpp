#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic_shear/convolve.hpp"
#include "harmonic_shear/mappings.hpp"
#include "harmonic_shear/series.hpp"

namespace hshear {

/// Slack allowed on non-strict certificate inequalities.
inline constexpr double kCertificateTolerance = 1e-7;

/// Polar sample points: every radius crossed with M equispaced angles in [0, 2π).
class SampleGrid {
 public:
  SampleGrid(std::vector<double> radii, int angle_count);

  /// radii 0.1, 0.2, ..., 0.9, 0.95, 0.99, 0.995 with 720 angles.
  static SampleGrid default_grid();
  /// "r1,r2,...;M"
  static SampleGrid parse(std::string_view spec);

  const std::vector<double>& radii() const noexcept { return radii_; }
  int angle_count() const noexcept { return angles_; }
  double r_max() const noexcept { return radii_.back(); }
  std::size_t size() const noexcept { return radii_.size() * static_cast<std::size_t>(angles_); }

  double angle(int j) const;
  /// Points ordered by radius, then angle.
  std::vector<Complex> points() const;

  /// Keep only radii ≤ cap; if none survive, the single radius `cap`.
  SampleGrid capped(double cap) const;

 private:
  std::vector<double> radii_;
  int angles_;
};

/// Outcome of a grid certificate. `criterion` names the check, or the
/// reason it could not be carried out (e.g. "not-sense-preserving").
struct CheckReport {
  bool passed = false;
  double extremal_value = 0.0;
  Complex witness{};
  long long samples_checked = 0;
  std::string criterion;
  std::map<std::string, double> details;
};

using PointFunction = std::function<Complex(Complex)>;

/// Passes iff max |eval| over the grid is below `bound`.
CheckReport sup_modulus(const PointFunction& eval, const SampleGrid& grid,
                        double bound = 1.0 - kCertificateTolerance);

/// Passes iff min Re(1 + zφ''/φ') > 0. Series input is checked on the grid
/// capped at kSeriesRadiusCap.
CheckReport convexity_check(const TruncatedSeries& phi, const SampleGrid& grid);
CheckReport convexity_check(const PointFunction& dphi, const PointFunction& d2phi,
                            const SampleGrid& grid);

/// Directional (Royster–Zeigler type) criterion for analytic φ:
/// min Re{e^{i(μ-γ)}(1 - 2z e^{-iμ}cos ν + z² e^{-2iμ}) φ'(z)} ≥ -τ.
CheckReport rz_check(const TruncatedSeries& phi, double gamma, double mu, double nu,
                     const SampleGrid& grid);
CheckReport rz_check(const PointFunction& dphi, double gamma, double mu, double nu,
                     const SampleGrid& grid);

struct Lattice {
  int mu_steps = 90;  // over [0, 2π)
  int nu_steps = 45;  // over [0, π)
};

/// Searches the (μ, ν) lattice for a pair under which h - e^{2iγ}g passes
/// rz_check. One-sided: failure is reported as "no-certificate".
CheckReport direction_convexity_certificate(const HarmonicMap& f, double gamma,
                                            const SampleGrid& grid, Lattice lattice = {});

/// Sign changes of the first differences of θ ↦ Im(e^{-iγ} f(re^{iθ})) around
/// the closed circle; 2 means the projection is unimodal.
int boundary_extrema_count(const HarmonicMap& f, double gamma, double r, int samples);

/// Largest |a| covered by the monomial-dilatation theorem for ω = a zⁿ.
double theorem_bound(int n);

/// 1 + |a|² - |a|(|2-n| + n)
double bound_expression(Complex a, int n);

/// Checks the convolution of the right half-plane map with the shear of
/// φ_{μ,ν} at μ with ω = a zⁿ: the bound expression, q ≠ 0 on the grid,
/// |ω₁| < 1 - τ for r ≤ 0.9 and ≤ 1 + τ on the whole grid, and
/// |q|² - |p|² ≥ -τ on |z| = 1.
CheckReport verify_monomial_theorem(Complex a, int n, double mu, double nu,
                                    const SampleGrid& grid, int boundary_samples = 2048);

/// For a = e^{i·phase} and n ≥ 3, looks for |ω₁| > 1 + τ inside the disk
/// (coarse grid, then three rounds of 10× local refinement) and checks that
/// the roots of p have product of modulus n/2.
CheckReport counterexample_search(int n, double phase, double mu, double nu,
                                  const SampleGrid& grid);

}  // namespace hshear
