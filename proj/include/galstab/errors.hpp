#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galstab {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  FieldMismatch,
  NotAUnit,
  NotIntegral,
  NotInvertible,
  CapExceeded,
  NotDiagonal,
  NotNormalizing,
  NotUnimodular,
  NotAbelian,
  DimensionTooLarge,
  NotABasis,
  NotSubfield,
  NotPermutation,
  ConductorTooSmall,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/* Every failure raised by the library carries a kind so the CLI can map it
 * onto an exit code without string matching. */
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotNormalizing: return "NotNormalizing";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::NotSubfield: return "NotSubfield";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::ConductorTooSmall: return "ConductorTooSmall";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace galstab
