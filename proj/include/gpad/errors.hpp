#pragma once

#include <stdexcept>
#include <string>

namespace gpad {

// Base class for every error thrown by the library.  Subtypes exist so
// callers (and tests) can distinguish contract violations from I/O and
// data problems.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mismatched or invalid tensor/array dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Bad configuration: unknown keys, missing checkpoints, invalid layer setup.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Non-finite values, division guards, diverged training.
class NumericError : public Error {
public:
    using Error::Error;
};

// Malformed container file (bad magic, unknown dtype, bad version).
class FormatError : public Error {
public:
    using Error::Error;
};

// Structurally valid header but payload inconsistent with it.
class CorruptionError : public Error {
public:
    CorruptionError(const std::string& msg, std::uint64_t offset)
        : Error(msg + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::uint64_t offset() const { return offset_; }

private:
    std::uint64_t offset_ = 0;
};

// Metric is mathematically undefined for the given inputs.
class MetricError : public Error {
public:
    using Error::Error;
};

// Anomaly synthesis could not satisfy its area constraints.
class SynthesisError : public Error {
public:
    using Error::Error;
};

// Filesystem and stream failures.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gpad
