#ifndef GORFAM_ERRORS_HPP
#define GORFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gorfam {

/// Requested Hilbert data of an algebra whose Hilbert polynomial is nonzero.
class NotArtinianError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Operation invoked with a number of generators it does not support.
class WrongMuError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class InputErrorKind {
  schema,           // malformed document, missing/ill-typed fields
  hilbert_burch,    // sum of relation degrees != sum of generator degrees
  minimality,       // degree lists not realizable as a minimal presentation
  construction_mu,  // construction incompatible with the number of generators
};

inline const char* to_string(InputErrorKind k)
{
  switch (k) {
    case InputErrorKind::schema: return "SchemaError";
    case InputErrorKind::hilbert_burch: return "HilbertBurchViolation";
    case InputErrorKind::minimality: return "MinimalityViolation";
    case InputErrorKind::construction_mu: return "ConstructionMuMismatch";
  }
  return "InputError";
}

class InputError : public std::runtime_error {
public:
  InputError(InputErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
  {
  }
  InputErrorKind kind() const { return kind_; }

private:
  InputErrorKind kind_;
};

}  // namespace gorfam

#endif  // GORFAM_ERRORS_HPP
