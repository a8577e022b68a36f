#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strongcolor {

enum class ErrorKind {
    LoopEdge,
    BadVertexId,
    BadEdgeId,
    NotBipartite,
    NotTwoThree,
    ListTooSmall,
    DegreeTooHigh,
    TooLarge,
    BadSize,
    Infeasible,
    UnknownName,
    Parse,
    InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Checks a property the algorithm relies on; failure means an implementation bug.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::InternalInvariant, what);
}

} // namespace strongcolor
