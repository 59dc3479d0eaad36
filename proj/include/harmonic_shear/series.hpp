#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "harmonic_shear/errors.hpp"

namespace hshear {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default truncation order for every constructor in the library.
inline constexpr int kDefaultOrder = 256;

/// reciprocal() refuses series whose constant term is at most this in modulus.
inline constexpr double kReciprocalFloor = 1e-8;

/// Largest radius at which a truncated series is trusted on its own.
///
/// Every family handled here has its nearest singularity on |z| = 1 and
/// coefficients growing at most polynomially, so the tail past order N is
/// O(N^k 0.9^N); for N = 256 that is below 1e-8 even for second
/// derivatives. Closer to the circle a closed form (or larger N) is required.
inline constexpr double kSeriesRadiusCap = 0.9;

/// Degree-N truncated Taylor expansion c_0 + c_1 z + ... + c_N z^N.
///
/// Immutable after construction; coefficients are always finite.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(Complex c, int order);
  static TruncatedSeries monomial(Complex a, int power, int order);
  /// z/(1-z) = z + z^2 + ..., the Hadamard identity on series with c_0 = 0.
  static TruncatedSeries geometric(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_[k]; }

  /// Coefficients 0..order; pads with zeros when order exceeds the current one.
  TruncatedSeries resized(int order) const;

  /// Index of the last nonzero coefficient, or -1 for the zero series.
  int degree() const noexcept;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

// Binary operations on operands of different order work at the smaller one.

TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& f, Complex beta,
                               const TruncatedSeries& g);
TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g);

/// Order drops by one. Throws DegenerateOrder for a constant (N = 0).
TruncatedSeries differentiate(const TruncatedSeries& f);

/// Antiderivative vanishing at 0; order grows by one.
TruncatedSeries integrate(const TruncatedSeries& f);

/// Multiplicative inverse at the same order; requires |c_0| > kReciprocalFloor.
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// z·f truncated back to the order of f.
TruncatedSeries multiply_by_z(const TruncatedSeries& f);

TruncatedSeries scale(Complex alpha, const TruncatedSeries& f);

/// Horner evaluation.
Complex evaluate(const TruncatedSeries& f, Complex z);

/// (f(z), f'(z)) in one Horner pass.
std::pair<Complex, Complex> evaluate_with_derivative(const TruncatedSeries& f, Complex z);

}  // namespace hshear
