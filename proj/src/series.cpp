#include "harmonic_shear/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace hshear {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DegenerateOrder: return "degenerate-order";
    case ErrorKind::NonFinite: return "non-finite";
    case ErrorKind::NearSingularDivision: return "near-singular-division";
    case ErrorKind::NotSensePreservingAtOrigin: return "not-sense-preserving-at-origin";
    case ErrorKind::DegenerateStrip: return "degenerate-strip";
    case ErrorKind::VanishingDenominator: return "vanishing-denominator";
    case ErrorKind::OutOfClass: return "out-of-class";
    case ErrorKind::Domain: return "domain";
  }
  return "unknown";
}

namespace {

int common_order(const TruncatedSeries& f, const TruncatedSeries& g) {
  return std::min(f.order(), g.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "truncated series needs at least one coefficient");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!std::isfinite(coeffs_[k].real()) || !std::isfinite(coeffs_[k].imag())) {
      std::ostringstream msg;
      msg << "non-finite series coefficient at index " << k;
      throw Error(ErrorKind::NonFinite, msg.str());
    }
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex c, int order) {
  return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(Complex a, int power, int order) {
  if (order < 0 || power < 0) throw Error(ErrorKind::InvalidArgument, "negative order or power");
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  if (power <= order) c[static_cast<std::size_t>(power)] = a;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::geometric(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(1.0));
  c[0] = 0.0;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::resized(int order) const {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  std::vector<Complex> c(coeffs_);
  c.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedSeries(std::move(c));
}

int TruncatedSeries::degree() const noexcept {
  for (int k = order(); k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != Complex(0.0)) return k;
  }
  return -1;
}

TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& f, Complex beta,
                               const TruncatedSeries& g) {
  const int n = common_order(f, g);
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = alpha * f[k] + beta * g[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = static_cast<std::size_t>(common_order(f, g));
  std::vector<Complex> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const Complex fi = f[i];
    if (fi == Complex(0.0)) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += fi * g[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = common_order(f, g);
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] * g[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& f) {
  if (f.order() < 1) {
    throw Error(ErrorKind::DegenerateOrder, "cannot differentiate a series of order 0");
  }
  std::vector<Complex> c(static_cast<std::size_t>(f.order()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = static_cast<double>(k + 1) * f[k + 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& f) {
  std::vector<Complex> c(static_cast<std::size_t>(f.order()) + 2);
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = f[k - 1] / static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const Complex c0 = f[0];
  if (std::abs(c0) <= kReciprocalFloor) {
    std::ostringstream msg;
    msg << "series reciprocal needs |c0| > " << kReciprocalFloor << ", got " << std::abs(c0);
    throw Error(ErrorKind::NearSingularDivision, msg.str());
  }
  const std::size_t n = static_cast<std::size_t>(f.order());
  std::vector<Complex> r(n + 1);
  r[0] = 1.0 / c0;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += f[j] * r[k - j];
    r[k] = -acc / c0;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries multiply_by_z(const TruncatedSeries& f) {
  std::vector<Complex> c(static_cast<std::size_t>(f.order()) + 1);
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = f[k - 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(Complex alpha, const TruncatedSeries& f) {
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) x *= alpha;
  return TruncatedSeries(std::move(c));
}

Complex evaluate(const TruncatedSeries& f, Complex z) {
  const auto c = f.coeffs();
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> evaluate_with_derivative(const TruncatedSeries& f, Complex z) {
  const auto c = f.coeffs();
  Complex value = 0.0;
  Complex slope = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
  return {value, slope};
}

}  // namespace hshear
