#pragma once

#include <stdexcept>
#include <string>

namespace bispec {

// Raised for malformed expressions; `pos` is a 0-based byte offset into the input.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Input documents that violate the problem-file schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Computations that cannot proceed within the requested bounds
// (no stabilization, no witness operator, non-rational antiderivative, ...).
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bispec
