#include "harmonic_shear/mappings.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hshear {

namespace {

constexpr double kNormalizationTol = 1e-12;
constexpr double kDegenerateSine = 1e-8;

// Adaptive Gauss–Kronrod settings for recipe evaluation. The integrands
// peak like (1-r)^{-3} near the circle; tighter relative tolerances hit the
// round-off floor and bisect to full depth without converging.
constexpr unsigned kQuadratureDepth = 15;
constexpr double kQuadratureTol = 1e-10;

Complex unit(double theta) { return std::polar(1.0, theta); }

TruncatedSeries slanted_half_plane_target(double alpha, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = unit((k - 1) * alpha);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries omega_series(const std::vector<Complex>& omega, int order) {
  std::vector<Complex> c(omega);
  c.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedSeries(std::move(c));
}

std::vector<Complex> trimmed(std::span<const Complex> c) {
  std::vector<Complex> out(c.begin(), c.end());
  while (!out.empty() && out.back() == Complex(0.0)) out.pop_back();
  return out;
}

}  // namespace

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

KernelParams KernelParams::make(double mu, double nu) {
  double n = reduce_angle(nu);
  if (n > kPi) n = kTwoPi - n;
  double m = mu;
  if (n == kPi) {
    m += kPi;
    n = 0.0;
  }
  return KernelParams{reduce_angle(m), n};
}

Complex KernelParams::quadratic(Complex z) const {
  const Complex e = unit(mu);
  return 1.0 - 2.0 * z * e * std::cos(nu) + z * z * e * e;
}

Complex KernelParams::derivative(Complex z) const { return 1.0 / quadratic(z); }

Complex KernelParams::second_derivative(Complex z) const {
  const Complex e = unit(mu);
  const Complex q = quadratic(z);
  const Complex dq = -2.0 * e * std::cos(nu) + 2.0 * z * e * e;
  return -dq / (q * q);
}

Complex ShearRecipe::omega_at(Complex z) const {
  Complex acc = 0.0;
  for (auto it = omega.rbegin(); it != omega.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex ShearRecipe::analytic_derivative(Complex z) const {
  return target.derivative(z) / (1.0 + unit(-2.0 * angle) * omega_at(z));
}

std::pair<Complex, Complex> ShearRecipe::parts(Complex z) const {
  using boost::math::quadrature::gauss_kronrod;
  if (z == Complex(0.0)) return {0.0, 0.0};
  auto dh = [&](double t) { return z * analytic_derivative(t * z); };
  auto dg = [&](double t) {
    const Complex w = t * z;
    return z * omega_at(w) * analytic_derivative(w);
  };
  const Complex h = gauss_kronrod<double, 31>::integrate(dh, 0.0, 1.0, kQuadratureDepth,
                                                         kQuadratureTol);
  const Complex g = omega.empty() ? Complex(0.0)
                                  : gauss_kronrod<double, 31>::integrate(
                                        dg, 0.0, 1.0, kQuadratureDepth, kQuadratureTol);
  return {h, g};
}

HarmonicMap::HarmonicMap(TruncatedSeries h, TruncatedSeries g, std::optional<ShearRecipe> recipe)
    : h_(std::move(h)), g_(std::move(g)), recipe_(std::move(recipe)) {
  if (h_.order() != g_.order()) {
    const int n = std::min(h_.order(), g_.order());
    h_ = h_.resized(n);
    g_ = g_.resized(n);
  }
  if (std::abs(h_[0]) > kNormalizationTol || std::abs(g_[0]) > kNormalizationTol) {
    throw Error(ErrorKind::InvalidArgument, "harmonic map needs h(0) = g(0) = 0");
  }
}

bool HarmonicMap::is_normalized(double tol) const {
  return h_.order() >= 1 && std::abs(h_[1] - 1.0) <= tol;
}

bool HarmonicMap::is_s0(double tol) const {
  return is_normalized(tol) && std::abs(g_[1]) <= tol;
}

Complex HarmonicMap::value(Complex z) const {
  if (recipe_ && std::abs(z) > kSeriesRadiusCap) {
    const auto [h, g] = recipe_->parts(z);
    return h + std::conj(g);
  }
  return evaluate(h_, z) + std::conj(evaluate(g_, z));
}

TruncatedSeries phi_series(const KernelParams& params, int order) {
  if (order < 1) throw Error(ErrorKind::DegenerateOrder, "phi_series needs order >= 1");
  const Complex e = unit(params.mu);
  const Complex lin = 2.0 * e * std::cos(params.nu);
  const Complex quad = e * e;
  std::vector<Complex> d(static_cast<std::size_t>(order));
  d[0] = 1.0;
  if (d.size() > 1) d[1] = lin;
  for (std::size_t n = 2; n < d.size(); ++n) d[n] = lin * d[n - 1] - quad * d[n - 2];
  return integrate(TruncatedSeries(std::move(d)));
}

HarmonicMap shear_construct(const TruncatedSeries& target, double mu,
                            const TruncatedSeries& omega) {
  if (target.order() < 1) throw Error(ErrorKind::DegenerateOrder, "shear target needs order >= 1");
  if (std::abs(target[0]) > kNormalizationTol || std::abs(target[1] - 1.0) > kNormalizationTol) {
    throw Error(ErrorKind::InvalidArgument, "shear target must satisfy T(0) = 0, T'(0) = 1");
  }
  if (std::abs(omega[0]) >= 1.0) {
    std::ostringstream msg;
    msg << "dilatation has |omega(0)| = " << std::abs(omega[0]) << " >= 1";
    throw Error(ErrorKind::NotSensePreservingAtOrigin, msg.str(), Complex(0.0));
  }
  const int n = target.order();
  // ω is a polynomial dilatation: pad (or cut) it to the target order.
  const TruncatedSeries w = omega.resized(n - 1);
  const Complex rot = unit(-2.0 * mu);
  const TruncatedSeries denom = linear_combine(1.0, TruncatedSeries::constant(1.0, n - 1), rot, w);
  const TruncatedSeries dh = cauchy_product(differentiate(target), reciprocal(denom));
  const TruncatedSeries dg = cauchy_product(w, dh);
  return HarmonicMap(integrate(dh), integrate(dg));
}

HarmonicMap shear_kernel(const KernelParams& target, double angle,
                         const std::vector<Complex>& omega, int order) {
  const HarmonicMap f =
      shear_construct(phi_series(target, order), angle, omega_series(omega, order));
  return HarmonicMap(f.h(), f.g(), ShearRecipe{target, angle, trimmed(omega)});
}

HarmonicMap right_half_plane_map(int order) {
  return slanted_half_plane_map(0.0, {0.0, -1.0}, order);
}

HarmonicMap slanted_half_plane_map(double alpha, const std::vector<Complex>& omega, int order) {
  const HarmonicMap f = shear_construct(slanted_half_plane_target(alpha, order), alpha,
                                        omega_series(omega, order));
  return HarmonicMap(f.h(), f.g(),
                     ShearRecipe{KernelParams::make(alpha, 0.0), alpha, trimmed(omega)});
}

TruncatedSeries slanted_strip_target(double mu, double alpha, int order) {
  const double s = std::sin(mu);
  if (std::abs(s) < kDegenerateSine) {
    throw Error(ErrorKind::DegenerateStrip, "strip angle mu must not be a multiple of pi");
  }
  if (order < 1) throw Error(ErrorKind::DegenerateOrder, "strip target needs order >= 1");
  // log(1 + wz) = Σ (-1)^{k+1} w^k z^k / k on each factor.
  const Complex pre = unit(-alpha) / (Complex(0.0, 2.0) * s);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const Complex diff = unit(k * (alpha + mu)) - unit(k * (alpha - mu));
    c[static_cast<std::size_t>(k)] = pre * sign * diff / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(c));
}

HarmonicMap slanted_strip_map(double mu, double alpha, const std::vector<Complex>& omega,
                              int order) {
  const HarmonicMap f =
      shear_construct(slanted_strip_target(mu, alpha, order), alpha, omega_series(omega, order));
  // (1 + z e^{i(α+μ)})(1 + z e^{i(α-μ)}) is the kernel quadratic at (α+π, μ).
  return HarmonicMap(f.h(), f.g(),
                     ShearRecipe{KernelParams::make(alpha + kPi, mu), alpha, trimmed(omega)});
}

HarmonicMap vertical_strip_map(double mu, const std::vector<Complex>& omega, int order) {
  return slanted_strip_map(mu, 0.0, omega, order);
}

HarmonicMap generalized_half_plane_map(double mu1, int order) {
  return shear_kernel(KernelParams::make(0.0, 0.0), mu1, {0.0, -unit(2.0 * mu1)}, order);
}

HarmonicMap phi_kernel_map(const KernelParams& params, double angle,
                           const std::vector<Complex>& omega, int order) {
  return shear_kernel(params, angle, omega, order);
}

std::pair<double, double> strip_bounds(double mu) {
  const double s = std::sin(mu);
  if (std::abs(s) < kDegenerateSine) {
    throw Error(ErrorKind::DegenerateStrip, "strip angle mu must not be a multiple of pi");
  }
  const double a = (mu - kPi) / (2.0 * s);
  const double b = mu / (2.0 * s);
  return {std::min(a, b), std::max(a, b)};
}

TruncatedSeries dilatation_series(const HarmonicMap& f) {
  return cauchy_product(differentiate(f.g()), reciprocal(differentiate(f.h())));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::HalfPlane: return "half-plane";
    case Family::SlantedHalfPlane: return "slanted-half-plane";
    case Family::Strip: return "strip";
    case Family::SlantedStrip: return "slanted-strip";
    case Family::PhiKernel: return "phi-kernel";
    case Family::GeneralizedHalfPlane: return "generalized-half-plane";
  }
  return "custom";
}

std::optional<Family> parse_family(std::string_view name) {
  constexpr std::array all = {Family::HalfPlane,  Family::SlantedHalfPlane, Family::Strip,
                              Family::SlantedStrip, Family::PhiKernel,
                              Family::GeneralizedHalfPlane};
  for (Family f : all) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

HarmonicMap build_family(Family family, const FamilyParams& p, int order) {
  switch (family) {
    case Family::HalfPlane: return right_half_plane_map(order);
    case Family::SlantedHalfPlane: return slanted_half_plane_map(p.alpha, p.omega, order);
    case Family::Strip: return vertical_strip_map(p.mu, p.omega, order);
    case Family::SlantedStrip: return slanted_strip_map(p.mu, p.alpha, p.omega, order);
    case Family::PhiKernel:
      return phi_kernel_map(KernelParams::make(p.mu, p.nu), p.shear_angle.value_or(p.mu),
                            p.omega, order);
    case Family::GeneralizedHalfPlane: return generalized_half_plane_map(p.mu, order);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

ShearRecipe family_recipe(Family family, const FamilyParams& p) {
  switch (family) {
    case Family::HalfPlane: return {KernelParams::make(0.0, 0.0), 0.0, {0.0, -1.0}};
    case Family::SlantedHalfPlane:
      return {KernelParams::make(p.alpha, 0.0), p.alpha, trimmed(p.omega)};
    case Family::Strip:
    case Family::SlantedStrip: {
      const double alpha = family == Family::Strip ? 0.0 : p.alpha;
      strip_bounds(p.mu);  // rejects degenerate μ
      return {KernelParams::make(alpha + kPi, p.mu), alpha, trimmed(p.omega)};
    }
    case Family::PhiKernel:
      return {KernelParams::make(p.mu, p.nu), p.shear_angle.value_or(p.mu), trimmed(p.omega)};
    case Family::GeneralizedHalfPlane:
      return {KernelParams::make(0.0, 0.0), p.mu, {0.0, -unit(2.0 * p.mu)}};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

}  // namespace hshear
