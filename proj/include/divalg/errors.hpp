#pragma once

#include <stdexcept>
#include <string>

namespace divalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or dimension problems: a tensor of the wrong size, an index out of
// range, a vector of the wrong length.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Malformed input text (JSON syntax, wrong field types, unknown labels).
class ParseError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

// The zero object/algebra was passed where a non-zero one is required.
class ZeroObjectError : public Error {
 public:
  using Error::Error;
};

// Input data is well-formed but violates the axioms it claims to satisfy.
class AxiomError : public Error {
 public:
  using Error::Error;
};

// A module category that splits into independent blocks.
class DecomposableModuleError : public AxiomError {
 public:
  using AxiomError::AxiomError;
};

// The structure does not meet the hypotheses a decision procedure relies on.
class HypothesisError : public AxiomError {
 public:
  using AxiomError::AxiomError;
};

class MissingStrengthError : public Error {
 public:
  using Error::Error;
};

class UnknownNameError : public Error {
 public:
  using Error::Error;
};

// Search space or table size exceeds the configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace divalg
