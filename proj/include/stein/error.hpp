#pragma once

#include <stdexcept>
#include <string>

namespace stein {

// Bad input or a violated precondition. CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scheme relation matrices that fail one of the four axioms.
class AxiomError : public ValidationError {
 public:
  AxiomError(int axiom, std::string witness, const std::string& what)
      : ValidationError(what), axiom_(axiom), witness_(std::move(witness)) {}
  int axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  int axiom_;
  std::string witness_;
};

// Input is well formed but outside what the exact pipeline handles
// (for example a scheme with irrational eigenvalues).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size above an enumeration bound. CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A kernel/statistic pair that does not satisfy E(W'|W) = (1-a)W, or a
// degenerate statistic.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stein
