#ifndef IWAHORI_ERRORS_HPP_
#define IWAHORI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace iwahori {

// Malformed or inconsistent user input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCartanType : public InputError {
 public:
  using InputError::InputError;
};

enum class DatumErrorKind {
  Malformed,
  LatticeTooSmall,     // Q^vee is not contained in the lattice
  LatticeTooLarge,     // the lattice is not contained in P^vee
  NotInjective,        // basis vectors are linearly dependent
  ActionNotCompatible  // torsion action breaks the group structure
};

const char* to_string(DatumErrorKind kind);

class DatumError : public InputError {
 public:
  DatumError(DatumErrorKind kind, const std::string& what)
      : InputError(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  DatumErrorKind kind() const { return kind_; }

 private:
  DatumErrorKind kind_;
};

class SigmaIncompatible : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration would exceed its configured element cap (exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parabolic subset generates an infinite group (exit code 4).
class NotFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem that the code relies on was observed to fail.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline const char* to_string(DatumErrorKind kind) {
  switch (kind) {
    case DatumErrorKind::Malformed: return "MalformedDatum";
    case DatumErrorKind::LatticeTooSmall: return "LatticeTooSmall";
    case DatumErrorKind::LatticeTooLarge: return "LatticeTooLarge";
    case DatumErrorKind::NotInjective: return "NotInjective";
    case DatumErrorKind::ActionNotCompatible: return "ActionNotCompatible";
  }
  return "DatumError";
}

}  // namespace iwahori

#endif  // IWAHORI_ERRORS_HPP_
