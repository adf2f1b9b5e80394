#include "nsg/error.hpp"

namespace nsg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotNumerical: return "not numerical";
    case ErrorKind::RegularSemigroup: return "regular semigroup";
    case ErrorKind::NotAMember: return "not a member";
    case ErrorKind::FrobeniusCapExceeded: return "frobenius cap exceeded";
    case ErrorKind::AmbientMismatch: return "ambient mismatch";
    case ErrorKind::ReductionCapExceeded: return "reduction cap exceeded";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::TheoremViolation: return "theorem violation";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

}  // namespace nsg
