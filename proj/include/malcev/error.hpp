#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace malcev {

using ElementId = std::uint32_t;

enum class ErrorKind {
  NotAssociative,
  BadZero,
  BadIdentity,
  BadTable,
  DegreeMismatch,
  NotAGroup,
  NotRegular,
  SizeBudgetExceeded,
  NotSimpleFactor,
  IdealNotInverseForm,
  NotPartialInjective,
  DeltaNotHomomorphism,
  DeltaNotPartialInjective,
  ThetaPreimageWrong,
  NoPairFound,
  ParseError,
  InvalidArgument,
  Unsupported,
};

char const* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown by the associativity check; carries the first failing triple.
class NotAssociativeError : public Error {
 public:
  explicit NotAssociativeError(std::array<ElementId, 3> triple);

  std::array<ElementId, 3> const& triple() const noexcept { return triple_; }

 private:
  std::array<ElementId, 3> triple_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string const& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Budgets {
  std::size_t closure = 100000;
  std::size_t product = 10000;
  // Number of generator-tuple assignments a division search may explore.
  std::size_t search = 20000000;
};

Budgets default_budgets();
void set_default_budgets(Budgets const& budgets);

// Reads MALCEV_BUDGET (closure budget) from the environment, if set.
void load_budgets_from_env();

}  // namespace malcev
