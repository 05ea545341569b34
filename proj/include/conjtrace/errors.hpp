#pragma once

#include <stdexcept>
#include <string>

namespace conjtrace {

// Failure kinds surfaced by the library. CLI maps these to messages and
// exit codes; tests match on the kind.
enum class ErrorKind {
  ParseError,
  InvalidLetter,
  RankMismatch,
  TrivialElement,
  NotACover,
  MissingAssignment,
  ZeroInverse,
  ArithmeticDomainError,
  BadPrime,
  NotSeparated,
  ConjugatePair,
  UnluckySpecialization,
  BadDimension,
  TooLarge,
  BadGroup,
  LiftNotFound,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::TrivialElement: return "TrivialElement";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ArithmeticDomainError: return "ArithmeticDomainError";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::ConjugatePair: return "ConjugatePair";
    case ErrorKind::UnluckySpecialization: return "UnluckySpecialization";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadGroup: return "BadGroup";
    case ErrorKind::LiftNotFound: return "LiftNotFound";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "?";
}

}  // namespace conjtrace
