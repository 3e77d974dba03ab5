#pragma once

#include <stdexcept>
#include <string>

namespace mcatt {

enum class ErrorCode {
  UnboundVariable,
  DuplicateVar,
  ScopeError,
  TheoryViolation,
  TypeError,
  TypeMismatch,
  NotPs,
  BoundaryUndefined,
  SideConditionViolation,
  SubstMismatch,
  ArityMismatch,
  NameMismatch,
  NotNormalized,
  ParseError,
  ElaborationAmbiguous,
  ElaborationMismatch,
};

const char* error_code_name(ErrorCode code);

// Source location of the offending item; line/col are 1-based, 0 = unknown.
struct Span {
  std::string item;
  int line = 0;
  int col = 0;

  bool known() const { return line > 0 || !item.empty(); }
  std::string to_string() const;
};

// Thrown by the checking internals; the public entry points catch it and
// turn it into a CheckReport. `rule` names the inference rule that failed
// (ec, ce, var, pss, pse, psd, ps, op, coh, es, se, ...).
class CheckError : public std::runtime_error {
public:
  CheckError(ErrorCode code, std::string rule, std::string detail, Span span = {})
      : std::runtime_error(std::string(error_code_name(code)) + " [" + rule + "] " + detail),
        code(code), rule(std::move(rule)), detail(std::move(detail)), span(std::move(span)) {}

  ErrorCode code;
  std::string rule;
  std::string detail;
  Span span;
};

}  // namespace mcatt
