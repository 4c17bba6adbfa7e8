#pragma once

#include <stdexcept>
#include <string>

namespace birat {

enum class ErrKind {
  DivisionByZero,
  FieldMismatch,
  SyntaxError,
  UnknownVariable,
  ContextMismatch,
  NotHomogeneous,
  NotBihomogeneous,
  ResourceLimit,
  UnitIdeal,
  NotMinimal,
  EmptyLinearPart,
  NoRankNSubmatrix,
  LengthMismatch,
  GradeTooSmall,
  NoFullRankSubmatrix,
  NotSaturated,
  WrongCodimension,
  NotMonomial,
  NoReductionFound,
  UnsupportedSource,
  Internal,
};

const char* err_kind_name(ErrKind k);

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& what)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool ok, ErrKind k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

} // namespace birat
