#pragma once

#include <stdexcept>
#include <string>

namespace motdt {

enum class ErrorKind {
  invalid_argument,
  euler_undefined,
  not_in_f1,
  not_invertible,
  division_error,
  datum_incomplete,
  internal_inconsistency,
  denominator_not_cleared,
  theorem_violation,
  syntax_error,
  unsupported_potential,
  schema_violation,
};

const char* to_string(ErrorKind kind);

// Input errors map to exit code 2, mathematical inconsistencies to 3.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace motdt
