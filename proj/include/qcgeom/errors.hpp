#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcgeom {

// Operand sizes disagree (e.g. Paulis on different qubit counts).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad user input: out-of-range indices, malformed files, bad parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Generators do not define a valid stabilizer group.
class InvalidCode : public std::invalid_argument {
 public:
  InvalidCode(const std::string& what, std::size_t first, std::size_t second)
      : std::invalid_argument(what), first_(first), second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

// Distance is undefined for codes with k = 0.
class NoLogicalQubits : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A lemma or theorem hypothesis does not hold for the given input.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcgeom
