#include "hilbertvd/error.hpp"

namespace hilbertvd {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::DuplicateVertex: return "DuplicateVertex";
        case ErrorKind::PointOnBoundary: return "PointOnBoundary";
        case ErrorKind::OutsideDomain: return "OutsideDomain";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::NegativeRadius: return "NegativeRadius";
        case ErrorKind::BisectorDegenerate: return "BisectorDegenerate";
        case ErrorKind::CoincidentSites: return "CoincidentSites";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::DuplicateSites: return "DuplicateSites";
        case ErrorKind::OnEdge: return "OnEdge";
        case ErrorKind::SelfIntersectingInput: return "SelfIntersectingInput";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::TooManySites: return "TooManySites";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::SchemaMismatch: return "SchemaMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace hilbertvd
