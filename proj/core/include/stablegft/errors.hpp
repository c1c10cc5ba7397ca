#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stablegft {

/// Base class for every failure raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violation (bad shapes, out-of-range parameters, ...).
class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

/// A pivoted factorization met a pivot too small to invert through.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, double pivot)
        : Error(what + " (pivot magnitude " + std::to_string(pivot) + ")"),
          pivot_magnitude(pivot) {}

    double pivot_magnitude;
};

/// An iterative process ran out of iterations or produced non-finite values.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::int64_t iteration)
        : Error(what + " (iteration " + std::to_string(iteration) + ")"),
          iteration(iteration) {}

    std::int64_t iteration;
};

/// File-format violation; carries the 1-based line number where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::int64_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}

    std::int64_t line;
};

/// A scale factor left the representable double range; carries the offending
/// exponent (the power of the base that underflowed or overflowed).
class OverflowError : public Error {
public:
    OverflowError(const std::string& what, std::int64_t power)
        : Error(what + " (power " + std::to_string(power) + ")"), power(power) {}

    std::int64_t power;
};

}  // namespace stablegft
