#ifndef LPPYR_ERRORS_HPP
#define LPPYR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lppyr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data is unusable: too few points, duplicates, NaN values.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Dimension or length mismatch between related arguments.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A constructed object failed one of its own invariants.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A parameter lies outside the domain an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; message carries file and line number.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Bad command line invocation.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace lppyr

#endif
