#pragma once

#include <stdexcept>
#include <string>

namespace dengue {

/// Root of the toolkit's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an input value was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A symmetry generator was applied outside its admitted parameter set.
class AdmissibilityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed or incomplete configuration (file, preset name, CLI flag).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The requested combination is outside what the toolkit analyzes.
class NotImplementedError : public Error {
public:
    using Error::Error;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NoFrontError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoSolutionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StiffnessError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class TruncationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace dengue
