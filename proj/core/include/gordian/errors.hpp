#pragma once

#include <stdexcept>
#include <string>

namespace gordian {

// Malformed input text (PD/DT/table/matrix files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap was hit (state-sum size, spectrum size).
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An identity that must hold for consistent inputs failed.  This always
// signals a bug or corrupted data upstream, never a mathematical discovery.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace gordian
