#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic_shear/analysis.hpp"

namespace hshear {

struct SuiteCase {
  std::string label;
  CheckReport report;
};

/// Aggregate of named checks; passes iff every case does.
struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;

  bool passed() const;
  void add(std::string label, CheckReport report);
};

inline constexpr std::string_view kSuiteNames[] = {
    "monomial-theorem", "counterexample", "generalized-f1", "phi-convex", "tilde-convex"};

struct MonomialCase {
  Complex a = 1.0;
  int n = 1;
  double mu = 0.0;
  double nu = 0.0;
};

/// The theorem check on its own.
SuiteReport monomial_theorem_suite(const MonomialCase& c, const SampleGrid& grid);

/// Counterexample search at a = e^{i·phase}.
SuiteReport counterexample_suite(int n, double phase, double mu, double nu,
                                 const SampleGrid& grid);

struct GeneralizedCase {
  Complex a = 0.5;
  int n = 1;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double nu = 0.0;
  int order = 1024;
};

/// f₁ = generalized half-plane map at μ₁, f₂ = φ_{μ₁+μ₂,ν} sheared at μ₂
/// with ω = a zⁿ. Checks the closed-form dilatation of f₁ * f₂ against the
/// series quotient, the monomial theorem after the substitution
/// a → e^{2iμ₁}a, μ → μ₁+μ₂, sense preservation, the boundary projection
/// count and the lattice certificate in direction -(μ₁+μ₂).
SuiteReport generalized_f1_suite(const GeneralizedCase& c, const SampleGrid& grid);

/// Convexity of φ_{μ,ν} for `samples` random (μ, ν): series check on the
/// capped grid, closed-form check on the whole grid, and agreement of the
/// series value of Re(1 + zφ''/φ') with Re((1 - z²e^{2iμ})/Q). The series
/// part of φ'' decays like N²·0.9^N at the cap, hence the long default order.
SuiteReport phi_convex_suite(int samples, std::uint64_t seed, const SampleGrid& grid,
                             int order = 1024);

struct TildeCase {
  double mu = 0.0;
  double nu = 0.0;
  Complex a = 0.0;
  int directions = 36;
  int order = kDefaultOrder;
};

/// Two convex constructions, each certified in `directions` equispaced
/// directions kπ/directions:
///  - "sheared-half-plane": f from h + e^{-2iμ}g = z/(1-z) with ω = az,
///    tilde-convolved with φ_{μ,ν};
///  - "sheared-kernel": f from h + e^{-2iμ}g = φ_{μ,ν} with ω = az,
///    tilde-convolved with the identity z/(1-z).
SuiteReport tilde_convex_suite(const TildeCase& c, const SampleGrid& grid);

}  // namespace hshear
