#pragma once

#include <stdexcept>
#include <string>

namespace neurodvfs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Synapse word field out of range, or a malformed encoded word.
class EncodingError : public Error {
public:
    using Error::Error;
};

/// A received spike has no synapse row on the receiving core.
class RoutingError : public Error {
public:
    using Error::Error;
};

/// Inconsistent network description (bad target index, wrong core count...).
class NetworkError : public Error {
public:
    using Error::Error;
};

/// A neuron state variable became non-finite.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CalibrationError : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    using Error::Error;
};

} // namespace neurodvfs
