#ifndef GROUPOIDAL_ERRORS_HPP
#define GROUPOIDAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace groupoidal {

// CLI exit discipline: parse errors -> 1, validation errors -> 2,
// bug traps (a theorem-guaranteed check failed) -> 3.
enum class ErrorKind {
  Parse,
  NotAssociative,
  NotInverse,
  ClosureTooLarge,
  NotIdempotent,
  TooLarge,
  NoZero,
  NotBelowE,
  OutOfDomain,
  NotInvariant,
  NotABisection,
  NotAnIdeal,
  NotSemisimple,
  NotAcyclic,
  UnknownName,
  BadParams,
  BadField,
  InternalInconsistency,
  VerificationFailed,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotInverse: return "NotInverse";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoZero: return "NoZero";
    case ErrorKind::NotBelowE: return "NotBelowE";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotABisection: return "NotABisection";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadField: return "BadField";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // True for failures of checks that a theorem guarantees must pass.
  bool is_bug_trap() const {
    return kind_ == ErrorKind::InternalInconsistency || kind_ == ErrorKind::VerificationFailed;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void check(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace groupoidal

#endif  // GROUPOIDAL_ERRORS_HPP
