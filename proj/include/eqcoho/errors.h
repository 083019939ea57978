#pragma once

#include <stdexcept>
#include <string>

namespace eqcoho {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes or moduli do not line up.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Operation needs a square matrix.
class ShapeError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Input lies outside the mathematical domain of an operation (e.g. p does not divide n).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A vertex permutation does not preserve the simplicial complex.
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries a 1-based line and column when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// An internal mathematical invariant failed (e.g. a boundary of a boundary is nonzero).
/// Never expected to fire; the CLI maps it to exit code 3.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

inline void ensure(bool condition, const char* what)
{
    if (!condition)
        throw InvariantViolation(what);
}

}  // namespace eqcoho
