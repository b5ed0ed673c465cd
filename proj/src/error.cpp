#include "reopt/error.hpp"

namespace reopt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AlphabetTooLarge: return "alphabet-too-large";
    case ErrorKind::GraphTooLarge: return "graph-too-large";
    case ErrorKind::InvalidChangeSet: return "invalid-change-set";
    case ErrorKind::UnknownNode: return "unknown-node";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::InvalidHint: return "invalid-hint";
    case ErrorKind::ClauseSize: return "clause-too-large";
    case ErrorKind::TautologyRejected: return "tautology-rejected";
    case ErrorKind::UnknownVariable: return "unknown-variable";
    case ErrorKind::UnitAlreadyPresent: return "unit-already-present";
    case ErrorKind::UnitNotPresent: return "unit-not-present";
    case ErrorKind::UnitHistoryExhausted: return "unit-history-exhausted";
    case ErrorKind::ClauseOutsideUniverse: return "clause-outside-universe";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::UnknownOperator: return "unknown-operator";
    case ErrorKind::UnknownCondition: return "condition-outside-P";
    case ErrorKind::NegativePostconditions: return "negative-postconditions-present";
    case ErrorKind::NameCollision: return "name-collision";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::InvalidInstance: return "invalid-instance";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::InvalidConfig: return "invalid-config";
    case ErrorKind::Counterexample: return "counterexample";
  }
  return "unknown";
}

}  // namespace reopt
