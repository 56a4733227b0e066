#include "malcev/error.hpp"

#include <cstdlib>
#include <mutex>

namespace malcev {

char const* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadZero: return "BadZero";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::NotSimpleFactor: return "NotSimpleFactor";
    case ErrorKind::IdealNotInverseForm: return "IdealNotInverseForm";
    case ErrorKind::NotPartialInjective: return "NotPartialInjective";
    case ErrorKind::DeltaNotHomomorphism: return "DeltaNotHomomorphism";
    case ErrorKind::DeltaNotPartialInjective: return "DeltaNotPartialInjective";
    case ErrorKind::ThetaPreimageWrong: return "ThetaPreimageWrong";
    case ErrorKind::NoPairFound: return "NoPairFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

NotAssociativeError::NotAssociativeError(std::array<ElementId, 3> triple)
    : Error(ErrorKind::NotAssociative,
            "(" + std::to_string(triple[0]) + "*" + std::to_string(triple[1]) +
                ")*" + std::to_string(triple[2]) + " != " +
                std::to_string(triple[0]) + "*(" + std::to_string(triple[1]) +
                "*" + std::to_string(triple[2]) + ")"),
      triple_(triple) {}

ParseError::ParseError(std::size_t line, std::string const& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {
std::mutex budget_mutex;
Budgets budgets;
}  // namespace

Budgets default_budgets() {
  std::lock_guard<std::mutex> lock(budget_mutex);
  return budgets;
}

void set_default_budgets(Budgets const& b) {
  std::lock_guard<std::mutex> lock(budget_mutex);
  budgets = b;
}

void load_budgets_from_env() {
  char const* value = std::getenv("MALCEV_BUDGET");
  if (value == nullptr || *value == '\0') {
    return;
  }
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == value || *end != '\0' || parsed == 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("MALCEV_BUDGET is not a positive integer: ") + value);
  }
  std::lock_guard<std::mutex> lock(budget_mutex);
  budgets.closure = static_cast<std::size_t>(parsed);
}

}  // namespace malcev
