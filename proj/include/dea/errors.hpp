#pragma once

#include <stdexcept>
#include <string>

namespace dea {

/// Bad input data or a broken call contract. Detected before any LP is
/// built; maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Internal solver trouble or an ambiguity the method cannot resolve.
/// Maps to CLI exit code 2.
class DiagnosticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested intensity-sum side constraint contradicts the optimum
/// face (e.g. asking for the sum-below-one bound when every optimal
/// intensity vector sums above one).
class WrongDirectionError : public DiagnosticError {
public:
    using DiagnosticError::DiagnosticError;
};

/// A point with radial score below one whose intensity sum sits exactly on
/// one. Theoretically excluded for points on the variable-returns frontier;
/// reported instead of guessed at.
class AmbiguousClassificationError : public DiagnosticError {
public:
    using DiagnosticError::DiagnosticError;
};

} // namespace dea
