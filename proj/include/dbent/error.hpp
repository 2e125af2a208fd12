#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dbent {

enum class ErrorCode {
    InverseOfZero,
    NotADivisor,
    ZeroArgument,
    ZeroBeta,
    NotIrreducible,
    InvalidField,
    SizeGuard,
    MixedPrime,
    BetaZero,
    ZeroComponent,
    MatchFailure,
    NotBent,
    BadExponent,
    NotPermutation,
    ZeroCoefficient,
    UnbalancedLabeling,
    InvalidParameter,
    PreconditionF0,
    FormulaMismatch,
    HypothesisViolation,
    NotBijection,
    NonDivisor,
    NotSemiprimitive,
    NotSymmetric,
    ContainsZero,
    NonSquareDelta,
    NonIntegral,
    Schema,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace dbent
