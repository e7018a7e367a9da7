#pragma once

#include <stdexcept>
#include <string>

namespace magnus2l {

// Every failure raised by the library derives from Error so callers can
// catch the family once and map subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// Order outside the range a solver implements.
class UnsupportedOrderError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// Time outside the tabulated range of a sampled pulse.
class RangeError : public Error {
public:
    using Error::Error;
};

// Grid too coarse for the carrier or the atomic frequency.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Array length does not match the grid.
class ShapeError : public Error {
public:
    using Error::Error;
};

class DegeneratePulseError : public Error {
public:
    using Error::Error;
};

// NaN/Inf in an integration, or a cascade that should be real is not.
class DivergenceError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class GateError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace magnus2l
