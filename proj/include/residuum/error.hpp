#pragma once

#include <stdexcept>
#include <string>

namespace residuum {

/// Malformed textual input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A mathematical precondition was violated (p = q, nonzero residue sum, bad nerve, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure failed its own accuracy check.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace residuum
