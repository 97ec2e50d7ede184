#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nonstatic {

enum class ErrorCode {
    NonPositiveFrequency,
    CoefficientConstraintViolated,
    PhiOutOfRange,
    TimeBeforeReference,
    QuadratureNonConvergence,
    IndexTooLarge,
    WeightNormalizationViolated,
    UndefinedAngle,
    InvalidArgument,
    ModeMismatch,
    // configuration / CLI layer
    MalformedDocument,
    MissingField,
    InvariantViolation,
    OutputUnwritable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// True for errors raised while reading or validating a scenario config.
    bool is_config_error() const noexcept {
        return code_ == ErrorCode::MalformedDocument || code_ == ErrorCode::MissingField ||
               code_ == ErrorCode::InvariantViolation;
    }

private:
    ErrorCode code_;
};

}  // namespace nonstatic
