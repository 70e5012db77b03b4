#pragma once

#include <stdexcept>
#include <string>

namespace qclone {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mismatched or invalid dimensions, unknown subsystem labels, bad partitions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Parameters outside the admissible region, e.g. alpha0 <= 0.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Input violates an operation precondition (e.g. a PNO set passed to the chain search).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class LinearDependenceError : public Error {
public:
    using Error::Error;
};

// Malformed input files (JSON or CSV).
class FormatError : public Error {
public:
    using Error::Error;
};

// An analytic witness did not have the expected structure or sign.
class WitnessError : public Error {
public:
    using Error::Error;
};

}  // namespace qclone
