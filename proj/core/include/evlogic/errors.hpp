#pragma once

#include <stdexcept>
#include <string>

namespace evlogic {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid construction input: duplicate labels, bad mass sums, empty-set mass, ...
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Two values built over different frames were mixed in one operation.
class FrameMismatchError : public Error {
public:
    using Error::Error;
};

/// Dempster combination with conflict K = 1; the orthogonal sum is undefined.
class TotalConflictError : public Error {
public:
    using Error::Error;
};

/// Conditioning on an event of probability zero.
class UndefinedConditionalError : public Error {
public:
    using Error::Error;
};

/// No probability assignment satisfies the requested constraints.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (numbers, scenario files).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace evlogic
