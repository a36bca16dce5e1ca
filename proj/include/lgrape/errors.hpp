#pragma once

#include <stdexcept>
#include <string>

namespace lgrape {

// Bad caller input: out-of-range index, mismatched sizes, invalid config.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition on a numerical object did not hold
// (e.g. a Hamiltonian that is not Hermitian).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed or mismatched pulse / config file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An outcome with vanishing probability but non-vanishing derivative.
class SingularStatistics : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UndefinedBound : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lgrape
