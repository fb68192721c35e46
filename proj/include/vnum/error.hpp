#pragma once

#include <stdexcept>
#include <string>

namespace vnum {

/// Malformed textual input (ideal/ring/graph grammar). Carries line/column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

/// Violated operation precondition: mixed rings, zero/unit ideal where a
/// proper one is required, prime not associated, overlapping supports, ...
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configurable resource limit was exceeded (oracle divisor budget,
/// saturation iteration cap, candidate enumeration width).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exponent arithmetic left the representable range. Always a hard error,
/// never a silent wrap.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& msg) : std::overflow_error(msg) {}
};

} // namespace vnum
