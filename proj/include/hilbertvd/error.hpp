#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbertvd {

enum class ErrorKind {
    TooFewVertices,
    NotConvex,
    DuplicateVertex,
    PointOnBoundary,
    OutsideDomain,
    CoincidentPoints,
    NegativeRadius,
    BisectorDegenerate,
    CoincidentSites,
    OutOfRange,
    DuplicateSites,
    OnEdge,
    SelfIntersectingInput,
    EmptyInput,
    TooManySites,
    InvalidArgument,
    SchemaMismatch,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Scene/file problems as opposed to geometric ones; drives CLI exit codes.
    bool is_io() const noexcept {
        return kind_ == ErrorKind::IoError || kind_ == ErrorKind::ParseError ||
               kind_ == ErrorKind::SchemaMismatch;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace hilbertvd
