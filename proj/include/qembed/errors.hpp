#pragma once

#include <stdexcept>
#include <string>

namespace qembed {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible or malformed matrix/vector dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Stability precondition violated (non-Hurwitz drift and the like).
class StabilityError : public Error {
public:
    using Error::Error;
};

/// A synthesis step cannot be completed (failed assumption, bad gain, ...).
class SynthesisError : public Error {
public:
    using Error::Error;
};

/// Invalid caller-supplied parameter value.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Input lacks a required block structure.
class StructureError : public Error {
public:
    using Error::Error;
};

/// Transfer-function evaluation at (or too close to) a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qembed
