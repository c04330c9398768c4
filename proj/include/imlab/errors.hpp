#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imlab {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid graph construction (loops, out-of-range endpoints, infeasible
// generator parameters, unsupported sizes).
class GraphError : public Error {
public:
    using Error::Error;
};

// Malformed textual input. Carries the byte offset of the offending
// character within the line being parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// An exact solver exhausted its configured budget. Never a silent
// truncation: callers either handle this or let it surface.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg, std::string field = "")
        : Error(field.empty() ? msg : field + ": " + msg),
          field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

// A proven inequality failed or a guaranteed construction could not be
// completed. Always an implementation bug, never a finding.
class DefectError : public Error {
public:
    using Error::Error;
};

}  // namespace imlab
