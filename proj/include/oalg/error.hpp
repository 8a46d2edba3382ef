#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oalg {

enum class Errc {
  DuplicateElement,
  InvalidName,
  UnknownName,
  CycleDetected,
  InvalidOrder,
  SyntaxError,
  UnboundVariable,
  MissingOperation,
  TooManyVariables,
  NotALattice,
  InducedOrderMismatch,
  KindMismatch,
  SchemeKindMismatch,
  NotOrthomodular,
  NotAPseudoring,
  SizeOutOfRange,
  UnboundedAlgebra,
  NoBounds,
  UnknownConjecture,
  BoundTooLarge,
  UnknownFixture,
  UnknownCondition,
  ValidationError,
  IoError,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  /// `witness` names the elements at which a validation failed.
  Error(Errc code, const std::string& what, std::vector<std::string> witness)
      : Error(code, what + " at (" + join(witness) + ")") {
    witness_ = std::move(witness);
  }

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  static std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
    return s;
  }

  Errc code_;
  std::vector<std::string> witness_;
};

/// Parse failure in a term, a law, or an algebra file. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(Errc::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::InvalidName: return "InvalidName";
    case Errc::UnknownName: return "UnknownName";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::MissingOperation: return "MissingOperation";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::NotALattice: return "NotALattice";
    case Errc::InducedOrderMismatch: return "InducedOrderMismatch";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::SchemeKindMismatch: return "SchemeKindMismatch";
    case Errc::NotOrthomodular: return "NotOrthomodular";
    case Errc::NotAPseudoring: return "NotAPseudoring";
    case Errc::SizeOutOfRange: return "SizeOutOfRange";
    case Errc::UnboundedAlgebra: return "UnboundedAlgebra";
    case Errc::NoBounds: return "NoBounds";
    case Errc::UnknownConjecture: return "UnknownConjecture";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::UnknownCondition: return "UnknownCondition";
    case Errc::ValidationError: return "ValidationError";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace oalg
