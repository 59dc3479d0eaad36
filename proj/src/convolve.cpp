#include "harmonic_shear/convolve.hpp"

#include <cmath>
#include <sstream>

namespace hshear {

namespace {

constexpr double kDenominatorFloor = 1e-12;

Complex unit(double theta) { return std::polar(1.0, theta); }

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

[[noreturn]] void vanishing(const char* what, Complex z) {
  std::ostringstream msg;
  msg << what << " vanishes at z = (" << z.real() << ", " << z.imag() << ")";
  throw Error(ErrorKind::VanishingDenominator, msg.str(), z);
}

}  // namespace

HarmonicMap harmonic_convolve(const HarmonicMap& f1, const HarmonicMap& f2) {
  return HarmonicMap(hadamard(f1.h(), f2.h()), hadamard(f1.g(), f2.g()));
}

HarmonicMap tilde_convolve(const HarmonicMap& f, const TruncatedSeries& phi) {
  return HarmonicMap(hadamard(f.h(), phi), hadamard(f.g(), phi));
}

SeriesPair half_plane_convolve_shortcut(const TruncatedSeries& F) {
  if (F.order() < 1) return {F, F};
  const TruncatedSeries zdF = multiply_by_z(differentiate(F).resized(F.order()));
  return {linear_combine(0.5, F, 0.5, zdF), linear_combine(0.5, F, -0.5, zdF)};
}

Complex omega1_eval(const TruncatedSeries& omega, double mu, double nu, Complex z) {
  const auto [w, dw] = evaluate_with_derivative(omega, z);
  const Complex e = unit(mu);
  const Complex c = unit(-2.0 * mu);
  const double cn = std::cos(nu);
  const Complex quad = 1.0 - 2.0 * z * e * cn + z * z * e * e;
  const Complex dquad = -2.0 * e * cn + 2.0 * z * e * e;
  const Complex shifted = 1.0 + c * w;
  const Complex num = dw * quad - w * shifted * dquad;
  const Complex den = 2.0 * shifted * (1.0 - z * e * cn) - c * z * dw * quad;
  if (std::abs(den) <= kDenominatorFloor) vanishing("omega1 denominator", z);
  return -z * num / den;
}

Complex omega1_eval_generalized(const TruncatedSeries& omega, double mu1, double mu2,
                                double nu, Complex z) {
  return omega1_eval(scale(unit(2.0 * mu1), omega), mu1 + mu2, nu, z);
}

MonomialDilatation::MonomialDilatation(Complex a, int n, double mu, double nu)
    : a_(a), n_(n), mu_(mu), nu_(nu) {
  if (n < 1) throw Error(ErrorKind::Domain, "monomial dilatation needs n >= 1");
  if (std::abs(a) > 1.0 + 1e-12) {
    throw Error(ErrorKind::OutOfClass, "monomial dilatation needs |a| <= 1");
  }
  const auto deg = static_cast<std::size_t>(n) + 2;
  const auto un = static_cast<std::size_t>(n);
  const double cn = std::cos(nu);
  const double half_n = 0.5 * n;
  p_.assign(deg + 1, 0.0);
  q_.assign(deg + 1, 0.0);

  p_[deg] += a * a;
  p_[deg - 1] += -a * a * cn * unit(-mu);
  p_[2] += a * (1.0 - half_n) * unit(2.0 * mu);
  p_[1] += -a * (1.0 - n) * cn * unit(mu);
  p_[0] += -a * half_n;

  q_[0] += 1.0;
  q_[1] += -cn * unit(mu);
  q_[un] += a * (1.0 - half_n) * unit(-2.0 * mu);
  q_[un + 1] += -a * (1.0 - n) * cn * unit(-mu);
  q_[deg] += -a * half_n;
}

Complex MonomialDilatation::p_at(Complex z) const { return horner(p_, z); }
Complex MonomialDilatation::q_at(Complex z) const { return horner(q_, z); }

Complex MonomialDilatation::operator()(Complex z) const {
  const Complex q = q_at(z);
  if (std::abs(q) <= kDenominatorFloor) vanishing("q", z);
  return std::pow(z, n_) * p_at(z) / q;
}

MonomialDilatation omega1_monomial(Complex a, int n, double mu, double nu) {
  return MonomialDilatation(a, n, mu, nu);
}

TruncatedSeries dilatation_of_convolution(const HarmonicMap& f1, const HarmonicMap& f2) {
  const TruncatedSeries dh = differentiate(hadamard(f1.h(), f2.h()));
  const TruncatedSeries dg = differentiate(hadamard(f1.g(), f2.g()));
  return cauchy_product(dg, reciprocal(dh));
}

}  // namespace hshear
