#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace riccati {

enum class ErrorCode {
  NonHermitianInput,
  NotPSD,
  SpectraOverlap,
  DimensionMismatch,
  LambdaOnSpectrumOfC,
  LambdaOnSpectrum,
  WrongSubspaceDimension,
  NotAGraph,
  SpectraTooClose,
  QuadratureStall,
  IterationDiverged,
  HypothesisViolated,
  DeltaNonpositive,
  NotSubordinated,
  ComplexSpectrum,
  ResidualTooLarge,
  InfeasibleSpec,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the sweep, the CLI) can tag a result without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace riccati
