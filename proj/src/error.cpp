#include "micc/error.hpp"

namespace micc {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::empty_input: return "EMPTY_INPUT";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::length_mismatch: return "LENGTH_MISMATCH";
    case ErrorCode::bad_multiplicity: return "BAD_MULTIPLICITY";
    case ErrorCode::multi_curve: return "MULTI_CURVE";
    case ErrorCode::parity: return "PARITY";
    case ErrorCode::genus_too_small: return "GENUS_TOO_SMALL";
    case ErrorCode::ambient_too_small: return "AMBIENT_TOO_SMALL";
    case ErrorCode::disjoint_curves: return "DISJOINT_CURVES";
    case ErrorCode::side_conflict: return "SIDE_CONFLICT";
    case ErrorCode::circuit_limit_exceeded: return "CIRCUIT_LIMIT_EXCEEDED";
    case ErrorCode::no_circuits: return "NO_CIRCUITS";
    case ErrorCode::infeasible: return "INFEASIBLE";
    case ErrorCode::unbalanced: return "UNBALANCED";
    case ErrorCode::negative_weight: return "NEGATIVE_WEIGHT";
    case ErrorCode::empty_configuration: return "EMPTY";
    case ErrorCode::bad_template: return "BAD_TEMPLATE";
    case ErrorCode::bad_catalog: return "BAD_CATALOG";
    case ErrorCode::cancelled: return "CANCELLED";
  }
  return "UNKNOWN";
}

bool is_internal(ErrorCode code) noexcept {
  return code == ErrorCode::parity || code == ErrorCode::side_conflict;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

}  // namespace micc
