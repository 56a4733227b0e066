#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "malcev/division.hpp"
#include "malcev/semigroup.hpp"

namespace malcev {

// Stands for the identity adjoined to S when a multiplier ranges over S¹.
inline constexpr ElementId kUnit = 0xFFFFFFFEu;

struct PairState {
  ElementId left;
  ElementId right;

  bool diagonal() const noexcept { return left == right; }
  bool operator==(PairState const&) const = default;
};

inline ElementId times(FiniteSemigroup const& s, ElementId a, ElementId z) {
  return z == kUnit ? a : s.product(a, z);
}

// (x, y) -> (x z y, y z x)
inline PairState pair_step(FiniteSemigroup const& s, PairState p, ElementId z) {
  return {s.product(times(s, p.left, z), p.right), s.product(times(s, p.right, z), p.left)};
}

// (λ_n, ρ_n) for the multipliers z_1 .. z_n.
PairState lambda_rho(FiniteSemigroup const& s, PairState start,
                     std::span<ElementId const> multipliers);

// The graph on S x S with an edge (x, y) -> (xzy, yzx) for every z in S¹.
// Node (x, y) has id x * |S| + y.
class PairGraph {
 public:
  explicit PairGraph(FiniteSemigroup const& s);

  std::size_t num_nodes() const noexcept { return n_ * n_; }
  std::uint32_t node(PairState p) const noexcept {
    return static_cast<std::uint32_t>(p.left * n_ + p.right);
  }
  PairState state(std::uint32_t v) const noexcept {
    return {static_cast<ElementId>(v / n_), static_cast<ElementId>(v % n_)};
  }
  // Multiplier k < |S| is element k, k = |S| is the adjoined identity.
  ElementId multiplier(std::size_t k) const noexcept {
    return k < n_ ? static_cast<ElementId>(k) : kUnit;
  }
  std::uint32_t successor(std::uint32_t v, ElementId z) const noexcept {
    return node(pair_step(*s_, state(v), z));
  }

  struct Components {
    // Per node; kNoElement for nodes not reached.
    std::vector<std::uint32_t> component;
    std::vector<bool> cyclic;
    // Numbered so that every edge leads to an equal or smaller component.
    std::size_t count = 0;
  };

  // SCCs of the non-diagonal part reachable from the given non-diagonal
  // starts. Diagonal nodes are absorbing, so every cycle through one stays
  // diagonal and they are left out.
  Components components(std::span<std::uint32_t const> starts) const;

  // A nonempty multiplier word leading from v back to v inside its SCC.
  std::vector<ElementId> cycle_through(Components const& c, std::uint32_t v) const;

  // Shortest multiplier word from `from` to a node in a cyclic SCC; the
  // node is written to `to`.
  std::vector<ElementId> path_to_cycle(Components const& c, std::uint32_t from,
                                       std::uint32_t& to) const;

 private:
  FiniteSemigroup const* s_;
  std::size_t n_;
};

enum class Property {
  MN,
  WMN,
  NT,
  PE,
  TM,
  EUNNG,
  BG,
  BGNil,
  NDF12,
  Aperiodic,
  Inverse,
  IdempotentsCommute,
};

char const* to_string(Property p);
// Accepts the CLI spellings mn, wmn, nt, pe, tm, eunng, bg, bgnil, ndf12,
// aperiodic, inverse, idem-commute.
Property parse_property(std::string const& name);
std::vector<Property> all_properties();

// A certificate for a false verdict. The meaning of the fields depends on
// the property:
//   MN          elements = {x, y}, cycle: the word maps (x, y) back to itself
//   NT          elements = {a, b}, prefix from (a, b) starting with 1, then cycle
//   WMN         elements = {a, b, c1, c2}
//   PE          elements = {a, b, c}
//   TM          elements = {a, b}
//   EUNNG       elements = {x, y, p, q}, cycle: MN certificate (p, q) inside <x, y>
//   NDF12       elements = {a, w1, w2}, or a block-group / subgroup certificate
//   BG          elements = {x, y1, y2}: two inverses of x
//   BGNil       as BG, or elements = {e} whose H-class is not nilpotent
//   Aperiodic   elements = {x} with period > 1
//   Inverse     elements = {x} without exactly one inverse
//   IdemCommute elements = {e, f}
// Multiplier words may contain kUnit.
struct Witness {
  Property property = Property::MN;
  std::string kind;
  std::vector<ElementId> elements;
  std::vector<ElementId> prefix;
  std::vector<ElementId> cycle;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
};

Verdict check_mn(FiniteSemigroup const& s);
Verdict check_wmn(FiniteSemigroup const& s);
Verdict check_nt(FiniteSemigroup const& s);
Verdict check_pe(FiniteSemigroup const& s);
Verdict check_tm(FiniteSemigroup const& s);
Verdict check_eunng(FiniteSemigroup const& s);
Verdict check_bg(FiniteSemigroup const& s);
Verdict check_bg_nil(FiniteSemigroup const& s);
// With units_allowed the multipliers w1, w2 range over S¹ instead of S.
Verdict check_ndf12(FiniteSemigroup const& s, bool units_allowed = false);
Verdict check_aperiodic(FiniteSemigroup const& s);
Verdict check_inverse(FiniteSemigroup const& s);
Verdict check_idempotents_commute(FiniteSemigroup const& s);

Verdict decide(FiniteSemigroup const& s, Property p);

bool is_mn(FiniteSemigroup const& s);
bool is_wmn(FiniteSemigroup const& s);
bool is_nt(FiniteSemigroup const& s);
bool is_pe(FiniteSemigroup const& s);
bool is_tm(FiniteSemigroup const& s);
bool is_eunng(FiniteSemigroup const& s);
bool is_ndf12(FiniteSemigroup const& s);

// Least n such that λ_n = ρ_n for all starts and multipliers, or nullopt
// when S is not MN.
std::optional<std::size_t> nilpotency_class(FiniteSemigroup const& s);

// Edges {x, y}, x < y, such that <x, y> is not MN.
std::vector<std::pair<ElementId, ElementId>> upper_nonnilpotent_graph(
    FiniteSemigroup const& s);

// Re-checks a certificate against its definition.
bool validate_witness(FiniteSemigroup const& s, Witness const& w);

std::string format_witness(FiniteSemigroup const& s, Witness const& w);

enum class Schedule {
  // w1, w2, w1, w2, ...
  Alternating,
  // 1, 1, then c, c^2, c^3, ... with c = w1
  PowersWithUnitPrefix,
};

struct LimitPair {
  ElementId lambda;
  ElementId rho;
  // Of the state sequence after any unit prefix.
  std::uint64_t transient;
  std::uint64_t period;
};

// The common value of (λ_{n!}, ρ_{n!}) for all large n, indices counted
// after the unit prefix.
LimitPair limit_pair(FiniteSemigroup const& s, ElementId x, ElementId y, ElementId w1,
                     ElementId w2, Schedule schedule);

struct RankResult {
  bool holds = true;
  // Distinct subsemigroups examined.
  std::size_t subsemigroups = 0;
  // Generators of a subsemigroup outside the class.
  std::vector<ElementId> counterexample;
};

// Whether every subsemigroup generated by at most k elements has the
// property. Generator sets are extended one element at a time and a set
// whose closure was already seen is skipped. Throws SizeBudgetExceeded when
// more than `budget` distinct subsemigroups arise (default: the closure
// budget).
RankResult rank_witness(FiniteSemigroup const& s, Property p, std::size_t k,
                        std::optional<std::size_t> budget = {});

}  // namespace malcev
