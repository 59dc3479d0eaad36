#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harmonic_shear/series.hpp"

namespace hshear {

/// Reduce an arbitrary real angle into [0, 2π).
double reduce_angle(double theta);

/// Angles of the kernel φ_{μ,ν}(z) = ∫_0^z dξ / (1 - 2ξe^{iμ}cos ν + ξ²e^{2iμ}).
struct KernelParams {
  double mu = 0.0;  // [0, 2π)
  double nu = 0.0;  // [0, π)

  /// Accepts arbitrary reals. μ is reduced mod 2π; ν is folded into [0, π)
  /// using that only cos ν enters (ν = π becomes μ + π, ν = 0).
  static KernelParams make(double mu, double nu);

  /// 1 - 2z e^{iμ} cos ν + z² e^{2iμ}
  Complex quadratic(Complex z) const;
  /// φ'(z) = 1 / quadratic(z)
  Complex derivative(Complex z) const;
  /// φ''(z)
  Complex second_derivative(Complex z) const;
};

/// How a named family was sheared: h + e^{-2i·angle} g = φ_target and
/// g' = ω h' with ω a polynomial. Enough to evaluate h and g exactly
/// anywhere in the open disk, independently of the truncated series.
struct ShearRecipe {
  KernelParams target;
  double angle = 0.0;
  std::vector<Complex> omega;  // polynomial coefficients, lowest first

  Complex omega_at(Complex z) const;
  Complex analytic_derivative(Complex z) const;  // h'(z)
  /// (h(z), g(z)) by adaptive Gauss–Kronrod along the segment [0, z].
  std::pair<Complex, Complex> parts(Complex z) const;
};

/// f = h + conj(g) with h, g truncated at a common order.
///
/// Constant terms vanish (h(0) = g(0) = 0). Maps built by the named
/// constructors also carry their ShearRecipe; anything derived from series
/// arithmetic (convolutions, custom documents) does not.
class HarmonicMap {
 public:
  HarmonicMap(TruncatedSeries h, TruncatedSeries g,
              std::optional<ShearRecipe> recipe = std::nullopt);

  const TruncatedSeries& h() const noexcept { return h_; }
  const TruncatedSeries& g() const noexcept { return g_; }
  int order() const noexcept { return h_.order(); }
  const std::optional<ShearRecipe>& recipe() const noexcept { return recipe_; }

  /// h'(0) = 1.
  bool is_normalized(double tol = 1e-12) const;
  /// Normalized and g'(0) = 0 (the class S⁰_H condition).
  bool is_s0(double tol = 1e-12) const;

  /// f(z) from the series, or from the recipe when |z| exceeds
  /// kSeriesRadiusCap and one is available.
  Complex value(Complex z) const;

 private:
  TruncatedSeries h_;
  TruncatedSeries g_;
  std::optional<ShearRecipe> recipe_;
};

/// Taylor coefficients of φ_{μ,ν} up to order N, from the Chebyshev-type
/// three-term recurrence for φ'.
TruncatedSeries phi_series(const KernelParams& params, int order = kDefaultOrder);

/// Solve h + e^{-2iμ} g = target together with g' = ω h'.
/// Throws NotSensePreservingAtOrigin when |ω(0)| ≥ 1.
HarmonicMap shear_construct(const TruncatedSeries& target, double mu,
                            const TruncatedSeries& omega);

/// shear_construct of φ_{target} at `angle`, recipe attached.
HarmonicMap shear_kernel(const KernelParams& target, double angle,
                         const std::vector<Complex>& omega, int order = kDefaultOrder);

/// Right half-plane map: h + g = z/(1-z), ω = -z, image Re w > -1/2.
HarmonicMap right_half_plane_map(int order = kDefaultOrder);

/// h + e^{-2iα} g = z/(1 - e^{iα} z).
HarmonicMap slanted_half_plane_map(double alpha, const std::vector<Complex>& omega,
                                   int order = kDefaultOrder);

/// h + e^{-2iα} g = e^{-iα}/(2i sin μ) · log((1 + z e^{i(α+μ)}) / (1 + z e^{i(α-μ)})).
/// Throws DegenerateStrip when sin μ vanishes.
HarmonicMap slanted_strip_map(double mu, double alpha, const std::vector<Complex>& omega,
                              int order = kDefaultOrder);

HarmonicMap vertical_strip_map(double mu, const std::vector<Complex>& omega,
                               int order = kDefaultOrder);

/// h + e^{-2iμ₁} g = z/(1-z) sheared with ω = -e^{2iμ₁} z.
HarmonicMap generalized_half_plane_map(double mu1, int order = kDefaultOrder);

/// h + e^{-2i·angle} g = φ_{μ,ν}; with ω = 0 this is φ itself.
HarmonicMap phi_kernel_map(const KernelParams& params, double angle,
                           const std::vector<Complex>& omega, int order = kDefaultOrder);

/// Strip target series by termwise expansion of the two logarithms.
TruncatedSeries slanted_strip_target(double mu, double alpha, int order = kDefaultOrder);

/// (lower, upper) = ((μ-π)/(2 sin μ), μ/(2 sin μ)), the real-part bounds of Ω_μ.
std::pair<double, double> strip_bounds(double mu);

/// g' / h'.
TruncatedSeries dilatation_series(const HarmonicMap& f);

/// Named families, spelled as on the command line.
enum class Family {
  HalfPlane,
  SlantedHalfPlane,
  Strip,
  SlantedStrip,
  PhiKernel,
  GeneralizedHalfPlane,
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Parameters a family may consume; unused ones are ignored.
struct FamilyParams {
  double mu = 0.0;
  double nu = 0.0;
  double alpha = 0.0;
  std::optional<double> shear_angle;  // phi-kernel only; defaults to mu
  std::vector<Complex> omega;         // empty means ω = 0
};

HarmonicMap build_family(Family family, const FamilyParams& params,
                         int order = kDefaultOrder);

/// The recipe build_family attaches, without building the series.
ShearRecipe family_recipe(Family family, const FamilyParams& params);

}  // namespace hshear
