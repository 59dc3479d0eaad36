#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace hshear {

enum class ErrorKind {
  InvalidArgument,
  DegenerateOrder,
  NonFinite,
  NearSingularDivision,
  NotSensePreservingAtOrigin,
  DegenerateStrip,
  VanishingDenominator,
  OutOfClass,
  Domain,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. Evaluation failures carry the
// offending point so that grid checks can report where they broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::complex<double>> point = std::nullopt)
      : std::runtime_error(what), kind_(kind), point_(point) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::complex<double>>& point() const noexcept { return point_; }

 private:
  ErrorKind kind_;
  std::optional<std::complex<double>> point_;
};

}  // namespace hshear
