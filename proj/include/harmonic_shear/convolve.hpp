#pragma once

#include <vector>

#include "harmonic_shear/mappings.hpp"
#include "harmonic_shear/series.hpp"

namespace hshear {

/// f1 * f2 = h1*h2 + conj(g1*g2).
HarmonicMap harmonic_convolve(const HarmonicMap& f1, const HarmonicMap& f2);

/// f ⊛̃ φ = h*φ + conj(g*φ).
HarmonicMap tilde_convolve(const HarmonicMap& f, const TruncatedSeries& phi);

struct SeriesPair {
  TruncatedSeries analytic;
  TruncatedSeries co_analytic;
};

/// Convolution with the right half-plane map: h1*F = (F + zF')/2 and
/// g1*F = (F - zF')/2.
SeriesPair half_plane_convolve_shortcut(const TruncatedSeries& F);

/// Dilatation of f1 * f2 in closed form, where f1 is the right half-plane
/// map and f2 is sheared from φ_{μ,ν} at angle μ with dilatation ω.
///
/// With Q = 1 - 2z e^{iμ}cos ν + z² e^{2iμ} and c = e^{-2iμ}:
///
///   ω₁ = -z [ω'Q - ω(1 + cω) Q'] / [2(1 + cω)(1 - z e^{iμ}cos ν) - c z ω' Q]
///
/// Throws VanishingDenominator (carrying z) when the denominator modulus
/// is at most 1e-12.
Complex omega1_eval(const TruncatedSeries& omega, double mu, double nu, Complex z);

/// The same for f1 = generalized half-plane map at μ₁ and f2 sheared from
/// φ_{μ₁+μ₂,ν} at μ₂: ω is replaced by e^{2iμ₁}ω and μ by μ₁+μ₂.
Complex omega1_eval_generalized(const TruncatedSeries& omega, double mu1, double mu2,
                                double nu, Complex z);

/// ω₁ for a monomial dilatation ω = a zⁿ, as the rational function zⁿ p/q
/// with both polynomials of degree n+2.
class MonomialDilatation {
 public:
  MonomialDilatation(Complex a, int n, double mu, double nu);

  Complex a() const noexcept { return a_; }
  int n() const noexcept { return n_; }
  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }
  const std::vector<Complex>& p() const noexcept { return p_; }
  const std::vector<Complex>& q() const noexcept { return q_; }

  Complex p_at(Complex z) const;
  Complex q_at(Complex z) const;
  /// ω₁(z) = zⁿ p(z)/q(z). Throws VanishingDenominator when |q(z)| ≤ 1e-12.
  Complex operator()(Complex z) const;

 private:
  Complex a_;
  int n_;
  double mu_;
  double nu_;
  std::vector<Complex> p_;
  std::vector<Complex> q_;
};

/// Throws OutOfClass for |a| > 1 and Domain for n < 1.
MonomialDilatation omega1_monomial(Complex a, int n, double mu, double nu);

/// (g1*g2)' / (h1*h2)' as a series quotient.
TruncatedSeries dilatation_of_convolution(const HarmonicMap& f1, const HarmonicMap& f2);

}  // namespace hshear
