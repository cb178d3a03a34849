#pragma once

#include <stdexcept>
#include <string>

namespace gt {

enum class ErrorCode {
    ZeroVector,
    NotInSpace,
    DegenerateDirection,
    NonIntersecting,
    HPNotSpacelikeDifference,
    TagMismatch,
    BadAxisType,
    NotARotationAboutAxis,
    DegenerateHPPlane,
    DegeneratePlane,
    PlaneTooFar,
    BadTraces,
    NotHyperbolic,
    BadWord,
    EndpointOnLeaf,
    EnumerationBudgetExceeded,
    NoConvergence,
    BadAligner,
    InsufficientGrid,
    BadTangent,
    FacePointOnLeaf,
    CommutationFailure,
    ConfigError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gt
