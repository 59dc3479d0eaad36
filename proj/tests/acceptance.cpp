// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "harmonic_shear/analysis.hpp"
#include "harmonic_shear/convolve.hpp"
#include "harmonic_shear/document.hpp"
#include "harmonic_shear/mappings.hpp"
#include "harmonic_shear/suites.hpp"

using namespace hshear;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed;
  std::string summary;
};

std::vector<Complex> monomial(Complex a, int n) {
  std::vector<Complex> w(static_cast<std::size_t>(n) + 1, 0.0);
  w.back() = a;
  return w;
}

double max_coeff_error(const TruncatedSeries& x, const TruncatedSeries& y) {
  const int n = std::min(x.order(), y.order());
  double worst = 0.0;
  for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
  return worst;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// A polynomial dilatation of degree ≤ 3 with |ω(0)| ≤ 0.9 and Σ|ω_k| < 1, so
// 1 + e^{-2iμ}ω stays away from zero on the closed disk.
std::vector<Complex> random_omega(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int degree = static_cast<int>(u(rng) * 4.0);
  std::vector<double> weight(static_cast<std::size_t>(degree) + 1);
  double total = 0.0;
  for (double& w : weight) total += (w = u(rng) + 1e-3);
  const double budget = 0.99 * u(rng);
  std::vector<Complex> omega;
  for (double w : weight) omega.push_back(std::polar(budget * w / total, kTwoPi * u(rng)));
  if (std::abs(omega[0]) > 0.9) omega[0] *= 0.9 / std::abs(omega[0]);
  return omega;
}

Outcome shear_round_trip() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto t0 = Clock::now();
  double worst_target = 0.0, worst_dilatation = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const double mu = kTwoPi * u(rng);
    TruncatedSeries target = TruncatedSeries::geometric(kDefaultOrder);
    switch (draw % 4) {
      case 0:
        break;
      case 1:
        target = phi_series(KernelParams::make(kTwoPi * u(rng), 0.0));
        break;
      case 2:
        target = slanted_strip_target(0.2 + (kPi - 0.4) * u(rng), kTwoPi * u(rng));
        break;
      default:
        target = phi_series(KernelParams::make(kTwoPi * u(rng), kPi * u(rng)));
    }
    const std::vector<Complex> omega = random_omega(rng);
    const HarmonicMap f = shear_construct(target, mu, TruncatedSeries(omega));
    worst_target = std::max(
        worst_target, max_coeff_error(linear_combine(1.0, f.h(), std::polar(1.0, -2.0 * mu), f.g()), target));
    const TruncatedSeries dh = differentiate(f.h());
    const TruncatedSeries w = TruncatedSeries(omega).resized(dh.order());
    worst_dilatation = std::max(worst_dilatation, max_coeff_error(differentiate(f.g()), cauchy_product(w, dh)));
  }
  const double elapsed = seconds_since(t0);
  return {worst_target < 1e-10 && worst_dilatation < 1e-10 && elapsed < 5.0,
          fmt("50 draws at N=256: target error %.2e, g'-omega h' error %.2e (< 1e-10), %.2fs (< 5s)",
              worst_target, worst_dilatation, elapsed)};
}

Outcome hadamard_identities() {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = kDefaultOrder;
  bool exact = true;
  std::vector<Complex> ones(static_cast<std::size_t>(n) + 1, 1.0);
  ones[0] = 0.0;
  const HarmonicMap identity{TruncatedSeries(ones), TruncatedSeries(ones)};
  for (int draw = 0; draw < 10; ++draw) {
    std::vector<Complex> h(ones.size()), g(ones.size());
    for (std::size_t k = 1; k < h.size(); ++k) {
      h[k] = {u(rng), u(rng)};
      g[k] = {u(rng), u(rng)};
    }
    const HarmonicMap f{TruncatedSeries(h), TruncatedSeries(g)};
    const HarmonicMap c = harmonic_convolve(f, identity);
    exact = exact && c.h() == f.h() && c.g() == f.g();
  }

  const HarmonicMap hp = right_half_plane_map(n);
  double worst = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[1] = 1.0;
    for (std::size_t k = 2; k < c.size(); ++k) c[k] = Complex(u(rng), u(rng)) / std::sqrt(double(k));
    const TruncatedSeries F(c);
    const SeriesPair s = half_plane_convolve_shortcut(F);
    worst = std::max({worst, max_coeff_error(s.analytic, hadamard(hp.h(), F)), max_coeff_error(s.co_analytic, hadamard(hp.g(), F))});
  }
  return {exact && worst < 1e-12,
          fmt("f * identity exact: %s; shortcut vs Hadamard over 10 F: %.2e (< 1e-12)", exact ? "yes" : "no",
              worst)};
}

Outcome phi_convexity() {
  const SuiteReport r = phi_convex_suite(20, 303, SampleGrid::default_grid());
  double min_closed = INFINITY, min_series = INFINITY, worst_identity = 0.0;
  for (const SuiteCase& c : r.cases) {
    if (c.label.ends_with("/closed-form")) min_closed = std::min(min_closed, c.report.extremal_value);
    if (c.label.ends_with("/series")) min_series = std::min(min_series, c.report.extremal_value);
    if (c.label.ends_with("/identity")) worst_identity = std::max(worst_identity, c.report.extremal_value);
  }
  return {r.passed() && min_closed > 0.0 && worst_identity < 1e-9,
          fmt("20 draws: min Re(1+z phi''/phi') closed form %.3e, series %.3e (> 0); identity error %.2e (< 1e-9)",
              min_closed, min_series, worst_identity)};
}

Outcome closed_form_dilatation() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const HarmonicMap hp = right_half_plane_map();
  double worst = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const int n = 1 + draw % 5;
    const Complex a = std::polar(theorem_bound(n) * u(rng), kTwoPi * u(rng));
    const KernelParams k = KernelParams::make(kTwoPi * u(rng), kPi * u(rng));
    const HarmonicMap f2 = shear_kernel(k, k.mu, monomial(a, n));
    const TruncatedSeries oracle = dilatation_of_convolution(hp, f2);
    const TruncatedSeries w(monomial(a, n));
    for (int i = 0; i < 200; ++i) {
      const Complex z = std::polar(0.8 * std::sqrt(u(rng)), kTwoPi * u(rng));
      worst = std::max(worst, std::abs(omega1_eval(w, k.mu, k.nu, z) - evaluate(oracle, z)));
    }
  }
  return {worst < 1e-8, fmt("50 draws x 200 points, r <= 0.8: max |closed - series| %.2e (< 1e-8)", worst)};
}

Outcome monomial_theorem() {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SampleGrid grid = SampleGrid::default_grid();
  const auto t0 = Clock::now();
  int cases = 0, failures = 0;
  double min_q = INFINITY, sup = 0.0, margin = INFINITY;
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i < 3; ++i) {
      const Complex a = std::polar(theorem_bound(n), kTwoPi * u(rng));
      for (int j = 0; j < 3; ++j) {
        const double mu = kTwoPi * u(rng), nu = kPi * u(rng);
        const CheckReport r = verify_monomial_theorem(a, n, mu, nu, grid, 2048);
        const double q = r.details.at("min_abs_q");
        const double s = r.details.at("sup_grid");
        const double m = r.details.at("boundary_margin");
        ++cases;
        if (!(q > 1e-10 && s <= 1.0 + 1e-7 && m >= -1e-9)) ++failures;
        min_q = std::min(min_q, q);
        sup = std::max(sup, s);
        margin = std::min(margin, m);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  return {failures == 0 && elapsed < 30.0,
          fmt("%d cases at |a| = bound: min|q| %.3e, max|omega1| %.9f (<= 1+1e-7), min(|q|^2-|p|^2) %.2e "
              "(>= -1e-9), %d failing, %.2fs (< 30s)",
              cases, min_q, sup, margin, failures, elapsed)};
}

Outcome counterexample() {
  const SampleGrid grid = SampleGrid::default_grid();
  bool ok = true;
  std::string parts;
  for (int n : {3, 4}) {
    for (double phase : {0.0, kPi / 2}) {
      const CheckReport r = counterexample_search(n, phase, 0.0, 0.0, grid);
      const double ratio = r.details.at("root_product_modulus");
      const bool pass = r.extremal_value > 1.0 + 1e-6 && std::abs(ratio - n / 2.0) <= 1e-12;
      ok = ok && pass;
      parts += fmt(" [n=%d phase=%.4f: |omega1| %.4f at %.4f%+.4fi, |p0/p_top| %.15g]", n, phase, r.extremal_value,
                   r.witness.real(), r.witness.imag(), ratio);
    }
  }
  return {ok, "|omega1| > 1+1e-6 and root product n/2 (1e-12):" + parts};
}

Outcome directional_convexity() {
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SampleGrid grid = SampleGrid::default_grid();
  constexpr int kOrder = 1024;
  int failures = 0;
  double sup = 0.0;
  std::string counts;
  for (int draw = 0; draw < 10; ++draw) {
    const int n = 1 + draw % 4;
    const Complex a = std::polar(theorem_bound(n) * u(rng), kTwoPi * u(rng));
    const double mu1 = kTwoPi * u(rng), mu2 = kTwoPi * u(rng), nu = kPi * u(rng);
    const HarmonicMap f1 = generalized_half_plane_map(mu1, kOrder);
    const HarmonicMap f2 = phi_kernel_map(KernelParams::make(mu1 + mu2, nu), mu2, monomial(a, n), kOrder);
    const HarmonicMap f = harmonic_convolve(f1, f2);
    const TruncatedSeries w1 = dilatation_of_convolution(f1, f2);
    const CheckReport sense = sup_modulus([&](Complex z) { return evaluate(w1, z); }, grid.capped(kSeriesRadiusCap));
    const int count = boundary_extrema_count(f, -(mu1 + mu2), 0.95, 720);
    if (!sense.passed || count != 2) ++failures;
    sup = std::max(sup, sense.extremal_value);
    counts += std::to_string(count);
  }
  return {failures == 0, fmt("10 draws at N=%d: max|omega1| %.6f (< 1), extrema counts %s (all 2)", kOrder, sup,
                             counts.c_str())};
}

Outcome strip_geometry() {
  bool ok = true;
  std::string parts;
  for (double mu : {1.8, 2.0943951, 2.8}) {
    const auto [lower, upper] = strip_bounds(mu);
    for (const std::vector<Complex>& omega : {std::vector<Complex>{}, std::vector<Complex>{0.0, 0.5}}) {
      const HarmonicMap f = vertical_strip_map(mu, omega);
      double lo = INFINITY, hi = -INFINITY;
      for (const CurveRow& row : sample_boundary(f, 0.999, 720)) {
        lo = std::min(lo, row.re);
        hi = std::max(hi, row.re);
      }
      ok = ok && lo > lower - 1e-2 && hi < upper + 1e-2;
      parts += fmt(" [mu=%.4f omega=%s: Re in [%.4f, %.4f] vs (%.4f, %.4f)]", mu, omega.empty() ? "0" : "z/2", lo,
                   hi, lower, upper);
    }
  }
  return {ok, "r=0.999, 720 samples, bounds widened by 1e-2:" + parts};
}

Outcome tilde_scenario() {
  const SampleGrid grid = SampleGrid::default_grid();
  struct Draw {
    double mu, nu;
    Complex a;
  };
  const Draw draws[] = {{0.0, 0.0, 0.5}, {0.7, 1.2, std::polar(0.9, 2.0)}, {2.5, 0.3, std::polar(0.6, -1.0)},
                        {4.4, 2.6, std::polar(0.9, 0.4)}};
  int passed = 0, total = 0;
  for (const Draw& d : draws) {
    const HarmonicMap f = phi_kernel_map(KernelParams::make(0.0, 0.0), d.mu, {0.0, d.a});
    const HarmonicMap c = tilde_convolve(f, phi_series(KernelParams::make(d.mu, d.nu)));
    for (int j = 0; j < 36; ++j) {
      ++total;
      if (direction_convexity_certificate(c, kPi * j / 36, grid).passed) ++passed;
    }
  }
  return {passed == total, fmt("4 draws x 36 directions: %d/%d certificates found", passed, total)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"shear round-trip", shear_round_trip},
      {"Hadamard identities", hadamard_identities},
      {"phi convexity", phi_convexity},
      {"closed-form dilatation", closed_form_dilatation},
      {"monomial theorem", monomial_theorem},
      {"counterexample", counterexample},
      {"directional convexity end-to-end", directional_convexity},
      {"strip geometry", strip_geometry},
      {"tilde convolution convexity", tilde_scenario},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("AC%zu %s %s: %s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first, o.summary.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
