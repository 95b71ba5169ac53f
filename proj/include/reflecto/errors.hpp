#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflecto {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid sequence description: bad alphabet, empty period, non-prolongable
// morphism, directive entry below 1, and so on.
struct SpecError : Error {
    using Error::Error;
};

// A computation was asked to exceed its prefix/window budget, or the budget
// is too small for the requested range.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed machine or representation file.  Positions are 1-based; column 0
// means "whole line".
struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) +
                (column ? ":" + std::to_string(column) : "") + ": " + what),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

// An internal cross-check failed (count identities, class-graph structure).
// Seeing this means a bug, not bad input.
struct CorruptionError : Error {
    using Error::Error;
};

}  // namespace reflecto
