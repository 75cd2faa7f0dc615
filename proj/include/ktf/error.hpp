#pragma once

#include <stdexcept>
#include <string>

namespace ktf {

enum class ErrorKind {
  Parse,
  ZeroPolynomial,
  LengthMismatch,
  DegenerateGamma,
  NotPolynomial,
  UndefinedC,
  ParityMismatch,
  DegreeTooHigh,
  NotInvariant,
  NotApplicable,
  Usage,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ktf
