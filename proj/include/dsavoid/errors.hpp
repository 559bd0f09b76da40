#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsavoid {

enum class ErrorKind {
    InvalidArgument,
    InvalidGraph,
    IncompleteColoring,
    NotTwoColored,
    ResourceLimit,
    InvalidK,
    SpecViolation,
    ColorOutOfRange,
    InvalidBound,
    PreconditionViolated,
    DegenerateTau,
    HypothesisViolated,
    InvalidInstance,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every recoverable failure in the library surfaces as this exception; the
// kind lets callers (and the CLI exit-code mapping) distinguish them.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dsavoid
