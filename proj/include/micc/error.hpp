#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace micc {

enum class ErrorCode {
  empty_input,
  parse_error,
  length_mismatch,
  bad_multiplicity,
  multi_curve,
  parity,
  genus_too_small,
  ambient_too_small,
  disjoint_curves,
  side_conflict,
  circuit_limit_exceeded,
  no_circuits,
  infeasible,
  unbalanced,
  negative_weight,
  empty_configuration,
  bad_template,
  bad_catalog,
  cancelled,
};

// Upper-case identifier, e.g. "LENGTH_MISMATCH".
std::string_view code_name(ErrorCode code) noexcept;

// Codes that indicate a broken invariant rather than bad user input.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace micc
