#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reopt {

enum class ErrorKind {
  AlphabetTooLarge,
  GraphTooLarge,
  InvalidChangeSet,
  UnknownNode,
  SelfLoop,
  InvalidHint,
  ClauseSize,
  TautologyRejected,
  UnknownVariable,
  UnitAlreadyPresent,
  UnitNotPresent,
  UnitHistoryExhausted,
  ClauseOutsideUniverse,
  NotApplicable,
  UnknownOperator,
  UnknownCondition,
  NegativePostconditions,
  NameCollision,
  BudgetExceeded,
  InvalidInstance,
  Parse,
  InvalidConfig,
  Counterexample,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reopt
