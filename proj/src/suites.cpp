#include "harmonic_shear/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "harmonic_shear/convolve.hpp"

namespace hshear {

namespace {

// Closed form and series quotient are compared well inside the disk.
constexpr double kAgreementRadius = 0.8;
constexpr double kAgreementTol = 1e-8;
constexpr double kIdentityTol = 1e-9;
constexpr double kBoundaryRadius = 0.95;
constexpr int kBoundarySamples = 720;

Complex unit(double theta) { return std::polar(1.0, theta); }

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const SuiteCase& c) { return c.report.passed; });
}

void SuiteReport::add(std::string label, CheckReport report) {
  cases.push_back({std::move(label), std::move(report)});
}

SuiteReport monomial_theorem_suite(const MonomialCase& c, const SampleGrid& grid) {
  SuiteReport out{"monomial-theorem", {}};
  out.add("theorem", verify_monomial_theorem(c.a, c.n, c.mu, c.nu, grid));
  return out;
}

SuiteReport counterexample_suite(int n, double phase, double mu, double nu,
                                 const SampleGrid& grid) {
  SuiteReport out{"counterexample", {}};
  out.add("search", counterexample_search(n, phase, mu, nu, grid));
  return out;
}

SuiteReport generalized_f1_suite(const GeneralizedCase& c, const SampleGrid& grid) {
  SuiteReport out{"generalized-f1", {}};
  const double mu = c.mu1 + c.mu2;
  std::vector<Complex> omega(static_cast<std::size_t>(c.n) + 1);
  omega.back() = c.a;

  const HarmonicMap f1 = generalized_half_plane_map(c.mu1, c.order);
  const HarmonicMap f2 = phi_kernel_map(KernelParams::make(mu, c.nu), c.mu2, omega, c.order);
  const HarmonicMap f = harmonic_convolve(f1, f2);
  const TruncatedSeries w1 = dilatation_of_convolution(f1, f2);
  const TruncatedSeries w = TruncatedSeries(omega);

  CheckReport agree;
  agree.criterion = "closed-form-agreement";
  agree.extremal_value = 0.0;
  for (Complex z : grid.capped(kAgreementRadius).points()) {
    ++agree.samples_checked;
    const double err = std::abs(omega1_eval_generalized(w, c.mu1, c.mu2, c.nu, z) - evaluate(w1, z));
    if (err >= agree.extremal_value) {
      agree.extremal_value = err;
      agree.witness = z;
    }
  }
  agree.passed = agree.extremal_value < kAgreementTol;
  out.add("closed-form-dilatation", std::move(agree));

  out.add("monomial-theorem",
          verify_monomial_theorem(unit(2.0 * c.mu1) * c.a, c.n, mu, c.nu, grid));

  out.add("sense-preserving",
          sup_modulus([&](Complex z) { return evaluate(w1, z); }, grid.capped(kSeriesRadiusCap)));

  CheckReport extrema;
  extrema.criterion = "boundary-extrema";
  const int count = boundary_extrema_count(f, -mu, kBoundaryRadius, kBoundarySamples);
  extrema.extremal_value = count;
  extrema.samples_checked = kBoundarySamples;
  extrema.passed = count == 2;
  extrema.details = {{"r", kBoundaryRadius}, {"gamma", -mu}};
  out.add("boundary-extrema", std::move(extrema));

  out.add("direction-convexity", direction_convexity_certificate(f, -mu, grid));
  return out;
}

SuiteReport phi_convex_suite(int samples, std::uint64_t seed, const SampleGrid& grid,
                             int order) {
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "phi-convex needs samples >= 1");
  SuiteReport out{"phi-convex", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mu_dist(0.0, kTwoPi);
  std::uniform_real_distribution<double> nu_dist(0.0, kPi);
  const SampleGrid inner = grid.capped(kSeriesRadiusCap);

  for (int s = 0; s < samples; ++s) {
    const KernelParams k = KernelParams::make(mu_dist(rng), nu_dist(rng));
    const std::string tag = "sample-" + std::to_string(s) + "/";
    const TruncatedSeries phi = phi_series(k, order);

    CheckReport series = convexity_check(phi, grid);
    series.details = {{"mu", k.mu}, {"nu", k.nu}};
    out.add(tag + "series", std::move(series));

    CheckReport closed = convexity_check([&](Complex z) { return k.derivative(z); },
                                         [&](Complex z) { return k.second_derivative(z); }, grid);
    closed.details = {{"mu", k.mu}, {"nu", k.nu}};
    out.add(tag + "closed-form", std::move(closed));

    const TruncatedSeries d1 = differentiate(phi);
    const TruncatedSeries d2 = differentiate(d1);
    const Complex e2 = unit(2.0 * k.mu);
    CheckReport identity;
    identity.criterion = "identity-agreement";
    for (Complex z : inner.points()) {
      ++identity.samples_checked;
      const double series_value = std::real(1.0 + z * evaluate(d2, z) / evaluate(d1, z));
      const double closed_value = std::real((1.0 - z * z * e2) / k.quadratic(z));
      const double err = std::abs(series_value - closed_value);
      if (err >= identity.extremal_value) {
        identity.extremal_value = err;
        identity.witness = z;
      }
    }
    identity.passed = identity.extremal_value < kIdentityTol;
    identity.details = {{"mu", k.mu}, {"nu", k.nu}};
    out.add(tag + "identity", std::move(identity));
  }
  return out;
}

SuiteReport tilde_convex_suite(const TildeCase& c, const SampleGrid& grid) {
  if (c.directions < 1) throw Error(ErrorKind::InvalidArgument, "need at least one direction");
  if (std::abs(c.a) >= 1.0) {
    throw Error(ErrorKind::OutOfClass, "tilde-convex needs |a| < 1");
  }
  SuiteReport out{"tilde-convex", {}};
  const KernelParams k = KernelParams::make(c.mu, c.nu);
  const std::vector<Complex> omega = {0.0, c.a};

  const HarmonicMap sheared_half_plane =
      tilde_convolve(phi_kernel_map(KernelParams::make(0.0, 0.0), c.mu, omega, c.order),
                     phi_series(k, c.order));
  const HarmonicMap sheared_kernel = tilde_convolve(phi_kernel_map(k, c.mu, omega, c.order),
                                                    TruncatedSeries::geometric(c.order));

  for (int j = 0; j < c.directions; ++j) {
    const double gamma = kPi * j / c.directions;
    const std::string suffix = "/gamma-" + std::to_string(j);
    out.add("sheared-half-plane" + suffix,
            direction_convexity_certificate(sheared_half_plane, gamma, grid));
    out.add("sheared-kernel" + suffix, direction_convexity_certificate(sheared_kernel, gamma, grid));
  }
  return out;
}

}  // namespace hshear
