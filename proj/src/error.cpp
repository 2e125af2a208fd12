#include "dbent/error.hpp"

namespace dbent {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::InverseOfZero: return "InverseOfZero";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::ZeroArgument: return "ZeroArgument";
        case ErrorCode::ZeroBeta: return "ZeroBeta";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::SizeGuard: return "SizeGuard";
        case ErrorCode::MixedPrime: return "MixedPrime";
        case ErrorCode::BetaZero: return "BetaZero";
        case ErrorCode::ZeroComponent: return "ZeroComponent";
        case ErrorCode::MatchFailure: return "MatchFailure";
        case ErrorCode::NotBent: return "NotBent";
        case ErrorCode::BadExponent: return "BadExponent";
        case ErrorCode::NotPermutation: return "NotPermutation";
        case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
        case ErrorCode::UnbalancedLabeling: return "UnbalancedLabeling";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::PreconditionF0: return "PreconditionF0";
        case ErrorCode::FormulaMismatch: return "FormulaMismatch";
        case ErrorCode::HypothesisViolation: return "HypothesisViolation";
        case ErrorCode::NotBijection: return "NotBijection";
        case ErrorCode::NonDivisor: return "NonDivisor";
        case ErrorCode::NotSemiprimitive: return "NotSemiprimitive";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::ContainsZero: return "ContainsZero";
        case ErrorCode::NonSquareDelta: return "NonSquareDelta";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::Schema: return "Schema";
    }
    return "Unknown";
}

}  // namespace dbent
