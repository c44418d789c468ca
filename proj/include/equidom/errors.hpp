#pragma once

#include <stdexcept>
#include <string>

namespace equidom {

// Malformed input file; message names the offending line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed to hold (would indicate a bug, not bad input).
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

// An oracle was asked to exceed its configured budget. Oracles refuse rather
// than silently truncate.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace equidom
