#include "pettylab/error.hpp"

namespace pettylab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NonpositiveRadial: return "NonpositiveRadial";
    case ErrorCode::SingularMoments: return "SingularMoments";
    case ErrorCode::EmptyProjection: return "EmptyProjection";
    case ErrorCode::DegenerateBody: return "DegenerateBody";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::UnboundedDirection: return "UnboundedDirection";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NonConvexStar: return "NonConvexStar";
    case ErrorCode::InvalidPhi: return "InvalidPhi";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

}  // namespace pettylab
