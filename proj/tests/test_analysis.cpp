#include <doctest.h>

#include <cmath>
#include <random>

#include "harmonic_shear/analysis.hpp"

using namespace hshear;

namespace {

TruncatedSeries S(std::vector<Complex> c) { return TruncatedSeries(std::move(c)); }

const SampleGrid& small_grid() {
  static const SampleGrid g({0.2, 0.5, 0.8, 0.9, 0.95, 0.99}, 180);
  return g;
}

}  // namespace

TEST_CASE("SampleGrid validation and layout") {
  const SampleGrid d = SampleGrid::default_grid();
  CHECK(d.radii().size() == 12);
  CHECK(d.angle_count() == 720);
  CHECK(d.r_max() == 0.995);
  CHECK(d.size() == 12 * 720);

  const SampleGrid p = SampleGrid::parse("0.3,0.6, 0.9;16");
  CHECK(p.radii() == std::vector<double>{0.3, 0.6, 0.9});
  CHECK(p.angle_count() == 16);
  const auto pts = p.points();
  REQUIRE(pts.size() == 48);
  CHECK(std::abs(pts[0] - Complex(0.3, 0.0)) < 1e-15);
  CHECK(std::abs(pts[17] - std::polar(0.6, p.angle(1))) < 1e-15);

  CHECK_THROWS_AS(SampleGrid({0.5}, 7), Error);
  CHECK_THROWS_AS(SampleGrid({0.5, 0.5}, 8), Error);
  CHECK_THROWS_AS(SampleGrid({0.5, 1.0}, 8), Error);
  CHECK_THROWS_AS(SampleGrid({0.0, 0.5}, 8), Error);
  CHECK_THROWS_AS(SampleGrid({}, 8), Error);
  CHECK_THROWS_AS(SampleGrid::parse("0.5"), Error);
  CHECK_THROWS_AS(SampleGrid::parse("0.5;x"), Error);
  CHECK_THROWS_AS(SampleGrid::parse("a,0.5;16"), Error);

  CHECK(d.capped(0.9).r_max() == 0.9);
  CHECK(d.capped(0.9).radii().size() == 9);
  CHECK(SampleGrid({0.95}, 8).capped(0.9).radii() == std::vector<double>{0.9});
}

TEST_CASE("sup_modulus") {
  const SampleGrid grid = SampleGrid::parse("0.5,0.9,0.99;64");
  const CheckReport hp = sup_modulus([](Complex z) { return -z; }, grid);
  CHECK(hp.passed);
  CHECK(hp.extremal_value == doctest::Approx(0.99).epsilon(1e-15));
  CHECK(std::abs(hp.witness) == doctest::Approx(0.99));
  CHECK(hp.samples_checked == 3 * 64);

  const CheckReport zero = sup_modulus([](Complex) { return Complex(0.0); }, grid);
  CHECK(zero.passed);
  CHECK(zero.extremal_value == 0.0);

  const MonomialDilatation w(1.0, 3, 0.0, 0.0);
  const CheckReport bad = sup_modulus([&](Complex z) { return w(z); }, SampleGrid::default_grid());
  CHECK_FALSE(bad.passed);
  CHECK(bad.extremal_value > 1.0);
  CHECK(std::abs(w(bad.witness)) == doctest::Approx(bad.extremal_value));
  CHECK(std::abs(bad.witness) < 1.0);
}

TEST_CASE("sup_modulus attaches the failing point") {
  const SampleGrid grid = SampleGrid::parse("0.5;8");
  try {
    sup_modulus(
        [](Complex z) -> Complex {
          if (z.imag() > 0.1) throw Error(ErrorKind::NonFinite, "boom");
          return z;
        },
        grid);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinite);
    REQUIRE(e.point().has_value());
    CHECK(e.point()->imag() > 0.1);
  }
}

TEST_CASE("convexity_check") {
  const KernelParams k = KernelParams::make(0.0, kPi / 2);
  const CheckReport origin = convexity_check(phi_series(k), SampleGrid({1e-9}, 8));
  CHECK(origin.passed);
  CHECK(origin.extremal_value == doctest::Approx(1.0).epsilon(1e-8));

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> mu(0.0, kTwoPi), nu(0.0, kPi);
  for (int i = 0; i < 20; ++i) {
    const KernelParams p = KernelParams::make(mu(rng), nu(rng));
    CHECK(convexity_check(phi_series(p), SampleGrid::default_grid()).passed);
    const CheckReport closed =
        convexity_check([&](Complex z) { return p.derivative(z); },
                        [&](Complex z) { return p.second_derivative(z); }, SampleGrid::default_grid());
    CHECK(closed.passed);
    CHECK(closed.extremal_value >= 0.0);
  }

  // 1 + zφ''/φ' = (1 + 4z)/(1 + 2z) for z + z²: convex only for |z| < 1/4.
  const TruncatedSeries zz = S({0, 1, 1});
  CHECK(convexity_check(zz, SampleGrid({0.1, 0.2}, 64)).passed);
  const CheckReport bad = convexity_check(zz, SampleGrid({0.3, 0.6}, 64));
  CHECK_FALSE(bad.passed);
  CHECK(bad.extremal_value < 0.0);

  const CheckReport flat = convexity_check(zz, SampleGrid({0.5}, 8));
  CHECK_FALSE(flat.passed);
  CHECK(flat.criterion == "derivative-vanishes");
  CHECK(std::abs(flat.witness - Complex(-0.5, 0.0)) < 1e-12);
}

TEST_CASE("rz_check examples") {
  const SampleGrid grid = SampleGrid::default_grid();
  const CheckReport id = rz_check(TruncatedSeries::geometric(kDefaultOrder), 0.0, 0.0, 0.0, grid);
  CHECK(id.passed);
  // Series tail at r = 0.9: about N·0.9^N ≈ 5e-10 in the derivative.
  CHECK(std::abs(id.extremal_value - 1.0) < 1e-8);
  const CheckReport exact =
      rz_check([](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); }, 0.0, 0.0, 0.0, grid);
  CHECK(exact.passed);
  CHECK(std::abs(exact.extremal_value - 1.0) < 1e-12);

  const TruncatedSeries z = S({0, 1});
  for (double g : {0.0, 0.7, 2.5}) CHECK(rz_check(z, g, g, kPi / 2, grid).passed);
}

TEST_CASE("rz expression on phi_{mu,nu} in direction -mu is identically 1") {
  // The criterion's quadratic at parameter -μ is exactly 1/φ'_{μ,ν}.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> mu(0.0, kTwoPi), nu(0.0, kPi);
  const SampleGrid grid = SampleGrid::default_grid().capped(kSeriesRadiusCap);
  for (int i = 0; i < 10; ++i) {
    const KernelParams p = KernelParams::make(mu(rng), nu(rng));
    const TruncatedSeries phi = phi_series(p);
    const CheckReport r = rz_check(phi, -p.mu, -p.mu, p.nu, grid);
    CHECK(r.passed);
    CHECK(std::abs(r.extremal_value - 1.0) < 1e-10);
    // The minimum alone does not bound the value from above; sample directly.
    const TruncatedSeries dphi = differentiate(phi);
    const Complex e = std::polar(1.0, -p.mu);
    double worst = 0.0;
    for (Complex w : grid.points()) {
      const Complex v = (1.0 - 2.0 * w * std::conj(e) * std::cos(p.nu) + w * w * std::conj(e * e)) *
                        evaluate(dphi, w);
      worst = std::max(worst, std::abs(v.real() - 1.0));
    }
    CHECK(worst < 1e-10);
    const CheckReport cf = rz_check([&](Complex w) { return p.derivative(w); }, -p.mu, -p.mu, p.nu,
                                    SampleGrid::default_grid());
    CHECK(std::abs(cf.extremal_value - 1.0) < 1e-10);
  }
}

TEST_CASE("direction_convexity_certificate") {
  const CheckReport hp = direction_convexity_certificate(right_half_plane_map(), 0.0, small_grid());
  CHECK(hp.passed);
  CHECK(hp.criterion == "direction-convexity");
  CHECK(hp.details.count("mu") == 1);
  CHECK(hp.details.count("nu") == 1);

  const HarmonicMap strip = vertical_strip_map(2.0 * kPi / 3.0, {});
  CHECK(direction_convexity_certificate(strip, 0.0, small_grid()).passed);
  CHECK(direction_convexity_certificate(strip, 1.1, small_grid()).passed);

  // ω = 2z leaves the disk of sense preservation.
  const HarmonicMap wild(S({0, 1, 0}), S({0, 0, 1}));
  const CheckReport bad = direction_convexity_certificate(wild, 0.0, small_grid());
  CHECK_FALSE(bad.passed);
  CHECK(bad.criterion == "not-sense-preserving");
}

TEST_CASE("direction certificate holds for a convolution covered by the theorem") {
  const double mu1 = 0.4, mu2 = 1.1, nu = 0.9;
  const int n = 2;
  const Complex a = std::polar(0.8, 0.3);
  std::vector<Complex> omega(n + 1, 0.0);
  omega[n] = a;
  const HarmonicMap f1 = generalized_half_plane_map(mu1, 1024);
  const HarmonicMap f2 = phi_kernel_map(KernelParams::make(mu1 + mu2, nu), mu2, omega, 1024);
  const HarmonicMap f = harmonic_convolve(f1, f2);
  const CheckReport r = direction_convexity_certificate(f, -(mu1 + mu2), small_grid());
  CHECK(r.passed);
  CHECK(boundary_extrema_count(f, -(mu1 + mu2), 0.95, 720) == 2);
}

TEST_CASE("boundary_extrema_count") {
  CHECK(boundary_extrema_count(right_half_plane_map(), 0.0, 0.95, 720) == 2);
  const HarmonicMap disk(S({0, 1, 0}), S({0, 0, 0}));
  for (double g : {0.0, 0.3, 1.7, 4.0}) CHECK(boundary_extrema_count(disk, g, 0.95, 720) == 2);

  // Im(i·f) for z + 0.5·conj(z²): derivative r sinθ(1 + 2r cosθ) has four zeros.
  const HarmonicMap folded(S({0, 1, 0}), S({0, 0, 0.5}));
  CHECK(boundary_extrema_count(folded, kPi / 2, 0.95, 720) > 2);

  CHECK_THROWS_AS(boundary_extrema_count(disk, 0.0, 0.95, 63), Error);
  CHECK_THROWS_AS(boundary_extrema_count(disk, 0.0, 1.0, 720), Error);
  CHECK_THROWS_AS(boundary_extrema_count(disk, 0.0, 0.0, 720), Error);
}

TEST_CASE("theorem_bound and bound_expression") {
  CHECK(theorem_bound(1) == 1.0);
  CHECK(theorem_bound(2) == 1.0);
  CHECK(theorem_bound(3) == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
  CHECK(theorem_bound(3) == doctest::Approx(0.2679492).epsilon(1e-7));
  CHECK(theorem_bound(4) == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(theorem_bound(4) == doctest::Approx(0.1715729).epsilon(1e-6));
  CHECK_THROWS_AS(theorem_bound(0), Error);
  CHECK_THROWS_AS(theorem_bound(-3), Error);

  CHECK(bound_expression(1.0, 2) == 0.0);
  CHECK(bound_expression(Complex(0.0, 1.0), 2) == 0.0);
  CHECK(bound_expression(0.0, 7) == 1.0);
  CHECK(std::abs(bound_expression(2.0 - std::sqrt(3.0), 3)) < 1e-15);

  for (int n = 2; n < 200; ++n) {
    const double b = theorem_bound(n);
    CHECK(theorem_bound(n + 1) <= b);
    CHECK(b * 2.0 * (n - 1) < 1.0 + b * b + 1e-12);
    CHECK(bound_expression(b, n) >= -1e-12);
  }
  CHECK(theorem_bound(100000) < 1e-5);
}

TEST_CASE("verify_monomial_theorem examples") {
  const SampleGrid grid = SampleGrid::default_grid();
  const CheckReport one = verify_monomial_theorem(1.0, 1, 0.0, 0.0, grid);
  CHECK(one.passed);
  CHECK(std::abs(one.details.at("boundary_margin")) < 1e-12);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> mu(0.0, kTwoPi), nu(0.0, kPi);
  for (int i = 0; i < 3; ++i) {
    CHECK(verify_monomial_theorem(std::polar(0.9, kPi / 5), 2, mu(rng), nu(rng), grid).passed);
  }

  const CheckReport edge = verify_monomial_theorem(2.0 - std::sqrt(3.0), 3, kPi / 4, kPi / 3, grid);
  CHECK(edge.passed);
  CHECK(edge.details.at("boundary_margin") >= -1e-9);
  CHECK(edge.details.at("bound_expression") == doctest::Approx(0.0).epsilon(1e-12));

  const CheckReport out = verify_monomial_theorem(0.5, 3, 0.0, 0.0, grid);
  CHECK_FALSE(out.passed);
  CHECK(out.criterion == "out-of-theorem-range");
}

TEST_CASE("boundary margin is nonnegative inside the bound and touches zero at it") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto margin = [](const MonomialDilatation& w) {
    double m = INFINITY;
    for (int j = 0; j < 1000; ++j) {
      const Complex z = std::polar(1.0, kTwoPi * j / 1000);
      m = std::min(m, std::norm(w.q_at(z)) - std::norm(w.p_at(z)));
    }
    return m;
  };
  for (int n = 1; n <= 6; ++n) {
    const double b = theorem_bound(n);
    for (int i = 0; i < 5; ++i) {
      const Complex a = std::polar(b * u(rng), kTwoPi * u(rng));
      CHECK(margin(MonomialDilatation(a, n, kTwoPi * u(rng), kPi * u(rng))) >= -1e-9);
    }
    // At |a| = bound equality on the circle is reached for every phase when
    // μ = ν = 0, and for every (μ, ν) when |a| = 1.
    for (int i = 0; i < 3; ++i) {
      const Complex a = std::polar(b, kTwoPi * u(rng));
      CHECK(std::abs(margin(MonomialDilatation(a, n, 0.0, 0.0))) < 1e-6);
      if (n <= 2) CHECK(std::abs(margin(MonomialDilatation(a, n, kTwoPi * u(rng), kPi * u(rng)))) < 1e-6);
    }
  }
}

TEST_CASE("counterexample_search") {
  const SampleGrid grid = SampleGrid::default_grid();
  const CheckReport three = counterexample_search(3, 0.0, 0.0, 0.0, grid);
  CHECK(three.passed);
  CHECK(three.extremal_value > 1.0 + 1e-6);
  CHECK(std::abs(three.witness) < 1.0);
  CHECK(std::abs(three.details.at("root_product_modulus") - 1.5) <= 1e-12);

  const CheckReport four = counterexample_search(4, 0.0, 0.0, 0.0, grid);
  CHECK(four.passed);
  CHECK(std::abs(four.details.at("root_product_modulus") - 2.0) <= 1e-12);

  const CheckReport rotated = counterexample_search(3, kPi / 2, kPi / 6, kPi / 4, grid);
  CHECK(rotated.passed);
  const MonomialDilatation w(Complex(0.0, 1.0), 3, kPi / 6, kPi / 4);
  CHECK(std::abs(w(rotated.witness)) == doctest::Approx(rotated.extremal_value));

  CHECK_THROWS_AS(counterexample_search(2, 0.0, 0.0, 0.0, grid), Error);
}
