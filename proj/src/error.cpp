#include "gt/error.hpp"

namespace gt {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotInSpace: return "NotInSpace";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::NonIntersecting: return "NonIntersecting";
    case ErrorCode::HPNotSpacelikeDifference: return "HPNotSpacelikeDifference";
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::BadAxisType: return "BadAxisType";
    case ErrorCode::NotARotationAboutAxis: return "NotARotationAboutAxis";
    case ErrorCode::DegenerateHPPlane: return "DegenerateHPPlane";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::PlaneTooFar: return "PlaneTooFar";
    case ErrorCode::BadTraces: return "BadTraces";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::BadWord: return "BadWord";
    case ErrorCode::EndpointOnLeaf: return "EndpointOnLeaf";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadAligner: return "BadAligner";
    case ErrorCode::InsufficientGrid: return "InsufficientGrid";
    case ErrorCode::BadTangent: return "BadTangent";
    case ErrorCode::FacePointOnLeaf: return "FacePointOnLeaf";
    case ErrorCode::CommutationFailure: return "CommutationFailure";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace gt
