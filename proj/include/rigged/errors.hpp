#pragma once

#include <stdexcept>
#include <string>

namespace rigged {

// Input that violates a precondition: bad shapes, orders, parameters, files.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation that could not produce a trustworthy answer.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OrderOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotHermitian : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadInterval : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadParams : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NoConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotTotal : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotAFrame : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class CertificateUnstable : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace rigged
