#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "malcev/semigroup.hpp"

namespace malcev {

// Quick keeps every criterion at desk-scale; full adds N_{2^2}, the order-4
// corpus in the division trials and the larger family member in the
// equivalence checks.
enum class Profile { Quick, Full };

char const* to_string(Profile p);
// Throws InvalidArgument.
Profile parse_profile(std::string_view text);

struct VerifyOptions {
  Profile profile = Profile::Quick;
  unsigned threads = 1;
  // Replaces the F12 builder, so that a broken construction can be shown to
  // fail the checks.
  std::optional<FiniteSemigroup> f12;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  // Stable, line-oriented detail; no timings.
  std::vector<std::string> details;
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;

  bool passed() const;
  // Identical for identical verdicts, whatever the thread count.
  std::string text() const;
};

inline constexpr int kCriteria = 9;

// 1 zoo integrity, 2 membership matrix, 3 rank witnesses, 4 oracle
// equivalences, 5 inclusion chain, 6 choose_pair, 7 iota property,
// 8 product trials, 9 determinism across thread counts.
CriterionResult run_criterion(int id, VerifyOptions const& options);

// Criteria run concurrently on options.threads workers; the report is in
// criterion order.
VerifyReport run_verification(VerifyOptions const& options);

}  // namespace malcev
