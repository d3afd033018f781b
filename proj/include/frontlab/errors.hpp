#pragma once

#include <stdexcept>
#include <string>

namespace frontlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument: wrong shape, non-finite entries, violated precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Index outside its documented range.
class InvalidIndex : public Error {
public:
    using Error::Error;
};

/// Flag signature inconsistent with the data it is applied to.
class InvalidSignature : public Error {
public:
    using Error::Error;
};

/// Not enough data to build the requested structure.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Iterative state has collapsed (e.g. rank loss) and cannot be queried.
class DegenerateState : public Error {
public:
    using Error::Error;
};

/// Experiment configuration is internally inconsistent.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

} // namespace frontlab
