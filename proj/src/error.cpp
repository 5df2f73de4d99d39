#include "motdt/error.hpp"

namespace motdt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::euler_undefined: return "euler-undefined";
    case ErrorKind::not_in_f1: return "not-in-F1";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::division_error: return "division-error";
    case ErrorKind::datum_incomplete: return "datum-incomplete";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::denominator_not_cleared: return "denominator-not-cleared";
    case ErrorKind::theorem_violation: return "theorem-violation";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::unsupported_potential: return "unsupported-potential";
    case ErrorKind::schema_violation: return "schema-violation";
  }
  return "unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::internal_inconsistency:
    case ErrorKind::denominator_not_cleared:
    case ErrorKind::theorem_violation:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace motdt
