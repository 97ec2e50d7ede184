#include "nonstatic/error.hpp"

namespace nonstatic {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveFrequency: return "NonPositiveFrequency";
        case ErrorCode::CoefficientConstraintViolated: return "CoefficientConstraintViolated";
        case ErrorCode::PhiOutOfRange: return "PhiOutOfRange";
        case ErrorCode::TimeBeforeReference: return "TimeBeforeReference";
        case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
        case ErrorCode::IndexTooLarge: return "IndexTooLarge";
        case ErrorCode::WeightNormalizationViolated: return "WeightNormalizationViolated";
        case ErrorCode::UndefinedAngle: return "UndefinedAngle";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ModeMismatch: return "ModeMismatch";
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::OutputUnwritable: return "OutputUnwritable";
    }
    return "Unknown";
}

}  // namespace nonstatic
