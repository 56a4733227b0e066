#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "malcev/semigroup.hpp"

namespace malcev {

enum class Tri { False, True, Unknown };

char const* to_string(Tri t);

// Smallest generating set, found by adding elements to the indecomposable
// ones (F minus F^2) in lexicographic order. Throws SizeBudgetExceeded when
// more than `budget` candidate sets would be tried.
std::vector<ElementId> minimal_generating_set(FiniteSemigroup const& f,
                                              std::size_t budget = 1000000);
std::size_t minimal_generating_size(FiniteSemigroup const& f);

struct DivisionWitness {
  // t_generators[i] maps to f_generators[i]; map lists every element of the
  // subsemigroup they generate with its image in F.
  std::vector<ElementId> t_generators;
  std::vector<ElementId> f_generators;
  std::vector<std::pair<ElementId, ElementId>> map;
};

struct DivisionResult {
  Tri verdict = Tri::Unknown;
  std::optional<DivisionWitness> witness;
  std::size_t explored = 0;
};

struct DivisionOptions {
  std::optional<std::size_t> budget;  // search nodes; default_budgets().search
  std::optional<std::size_t> max_generators;
};

// Whether F is a homomorphic image of a subsemigroup of T.
DivisionResult divides(FiniteSemigroup const& f, FiniteSemigroup const& t,
                       DivisionOptions const& options = {});

// Checks that a witness really is a surjective homomorphism onto F.
bool validate_division(FiniteSemigroup const& f, FiniteSemigroup const& t,
                       DivisionWitness const& w);

std::optional<std::vector<ElementId>> find_isomorphism(FiniteSemigroup const& s,
                                                       FiniteSemigroup const& t);
bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t);

enum class TrialOutcome { Confirmed, Vacuous, Violation, Unknown };

char const* to_string(TrialOutcome t);

struct TrialResult {
  TrialOutcome outcome = TrialOutcome::Unknown;
  std::string detail;
};

// F divides T x V implies F divides T or F divides V.
TrialResult times_prime_trial(FiniteSemigroup const& f, FiniteSemigroup const& t,
                              FiniteSemigroup const& v, DivisionOptions const& options = {});

// F divides T x V implies one of the excluded semigroups divides T or V.
TrialResult exclusion_trial(FiniteSemigroup const& f,
                            std::vector<FiniteSemigroup> const& excluded,
                            FiniteSemigroup const& t, FiniteSemigroup const& v,
                            DivisionOptions const& options = {});

}  // namespace malcev
