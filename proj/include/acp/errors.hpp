#pragma once

#include <stdexcept>
#include <string>

namespace acp {

/// Malformed textual input (files, element tokens, flags).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(std::move(msg)), line(line), column(column) {}
    std::size_t line;    // 1-based, 0 = unknown
    std::size_t column;  // 1-based token position, 0 = unknown
};

/// An operation's stated precondition does not hold for the given inputs.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace acp
