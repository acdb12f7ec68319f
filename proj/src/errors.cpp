#include "riccati/errors.hpp"

namespace riccati {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::SpectraOverlap: return "SpectraOverlap";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LambdaOnSpectrumOfC: return "LambdaOnSpectrumOfC";
    case ErrorCode::LambdaOnSpectrum: return "LambdaOnSpectrum";
    case ErrorCode::WrongSubspaceDimension: return "WrongSubspaceDimension";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::SpectraTooClose: return "SpectraTooClose";
    case ErrorCode::QuadratureStall: return "QuadratureStall";
    case ErrorCode::IterationDiverged: return "IterationDiverged";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DeltaNonpositive: return "DeltaNonpositive";
    case ErrorCode::NotSubordinated: return "NotSubordinated";
    case ErrorCode::ComplexSpectrum: return "ComplexSpectrum";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace riccati
