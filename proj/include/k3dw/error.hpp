#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace k3dw {

enum class ErrorCode {
  invalid_argument,
  not_primitive,
  not_a_root,
  zero_class,
  series_cap_exceeded,
  omega_square_nonzero,
  omega_norm_nonpositive,
  omega_not_orthogonal_to_boundary,
  boundary_mismatch,
  zero_central_charge,
  normalization_violation,
  zero_twistor_parameter,
  invalid_kahler_class,
  on_wall,
  consistency_failure,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::not_primitive: return "NOT_PRIMITIVE";
    case ErrorCode::not_a_root: return "NOT_A_ROOT";
    case ErrorCode::zero_class: return "ZERO_CLASS";
    case ErrorCode::series_cap_exceeded: return "SERIES_CAP_EXCEEDED";
    case ErrorCode::omega_square_nonzero: return "OMEGA_SQUARE_NONZERO";
    case ErrorCode::omega_norm_nonpositive: return "OMEGA_NORM_NONPOSITIVE";
    case ErrorCode::omega_not_orthogonal_to_boundary: return "OMEGA_NOT_ORTHOGONAL_TO_L";
    case ErrorCode::boundary_mismatch: return "BOUNDARY_MISMATCH";
    case ErrorCode::zero_central_charge: return "ZERO_CENTRAL_CHARGE";
    case ErrorCode::normalization_violation: return "NORMALIZATION_VIOLATION";
    case ErrorCode::zero_twistor_parameter: return "ZERO_TWISTOR_PARAMETER";
    case ErrorCode::invalid_kahler_class: return "INVALID_KAHLER_CLASS";
    case ErrorCode::on_wall: return "ON_WALL";
    case ErrorCode::consistency_failure: return "CONSISTENCY_FAILURE";
  }
  return "UNKNOWN";
}

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a Kähler class lies on one or more walls; `offsets` lists the
/// lifting offsets k of every offending wall.
class OnWallError : public Error {
 public:
  OnWallError(std::vector<mpz_class> offsets, const std::string& what)
      : Error(ErrorCode::on_wall, what), offsets_(std::move(offsets)) {}

  const std::vector<mpz_class>& offsets() const noexcept { return offsets_; }

 private:
  std::vector<mpz_class> offsets_;
};

}  // namespace k3dw
