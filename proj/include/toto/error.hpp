#pragma once

#include <stdexcept>
#include <string>

namespace toto {

enum class ErrorKind {
  Parse,
  Schema,
  DuplicateEntry,
  Argument,
  FeatureConflict,
  WordClassMismatch,
  DerivationUnsupported,
  DirectionUnsupported,
  StrategyInapplicable,
  Validation,
  Io,
};

const char* kind_name(ErrorKind k);

// Domain error. CLI maps these to exit code 1 with a one-line
// "error: <kind>: <message>" on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::DuplicateEntry: return "duplicate-entry";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::FeatureConflict: return "feature-conflict";
    case ErrorKind::WordClassMismatch: return "word-class";
    case ErrorKind::DerivationUnsupported: return "derivation-unsupported";
    case ErrorKind::DirectionUnsupported: return "direction-unsupported";
    case ErrorKind::StrategyInapplicable: return "strategy-inapplicable";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Io: return "io";
  }
  return "error";
}

}  // namespace toto
