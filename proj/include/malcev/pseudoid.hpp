#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "malcev/deciders.hpp"
#include "malcev/semigroup.hpp"

namespace malcev {

// Variables are single lowercase letters.
struct OmegaTerm {
  enum class Kind { Var, Product, Omega, OmegaMinusOne, OmegaPlusOne };

  Kind kind = Kind::Var;
  char var = 'x';
  // Factors of a product, or the single base of a power.
  std::vector<OmegaTerm> children;

  static OmegaTerm variable(char v);
  static OmegaTerm product(std::vector<OmegaTerm> factors);
  static OmegaTerm omega(OmegaTerm base);
  static OmegaTerm omega_minus_one(OmegaTerm base);
  static OmegaTerm omega_plus_one(OmegaTerm base);

  std::set<char> variables() const;
  // ASCII form accepted by parse_term: xy, (xy)^w, x^w-1, x^w+1.
  std::string to_string() const;

  bool operator==(OmegaTerm const&) const = default;
};

// Juxtaposition for products, parentheses, and postfix ^w, ^w-1, ^w+1
// (ω may be written for w). Throws ParseError.
OmegaTerm parse_term(std::string_view text);

using Assignment = std::map<char, ElementId>;

// Throws InvalidArgument when a variable is unassigned.
ElementId eval_omega_term(FiniteSemigroup const& s, OmegaTerm const& term,
                          Assignment const& assignment);

// Images of the variables that move; every other variable is fixed.
struct Endomorphism {
  std::map<char, OmegaTerm> images;
};

struct IdentitySide {
  OmegaTerm term;
  // Read at the ω-point of the endomorphism orbit rather than at the
  // assignment itself.
  bool iterated = false;
};

// lhs = rhs, where iterated sides substitute φ^ω of the moving variables.
// An identity without moving variables is an ordinary ω-identity.
struct IteratedIdentity {
  Endomorphism endo;
  IdentitySide lhs;
  IdentitySide rhs;

  std::set<char> variables() const;
  std::string to_string() const;
};

IteratedIdentity plain_identity(OmegaTerm lhs, OmegaTerm rhs);

// Values of the two sides under one assignment.
std::pair<ElementId, ElementId> iterate_endo_to_omega(FiniteSemigroup const& s,
                                                      IteratedIdentity const& id,
                                                      Assignment const& assignment);

struct IdentityViolation {
  Assignment assignment;
  ElementId lhs;
  ElementId rhs;
};

// Over all assignments of the variables to S. At most two variables may
// move.
std::optional<IdentityViolation> find_violation(FiniteSemigroup const& s,
                                                IteratedIdentity const& id);
bool check_identity(FiniteSemigroup const& s, IteratedIdentity const& id);

// φ(x) = xzytyzx, φ(y) = yzxtxzy; φ^ω(x) = φ^ω(y).
IteratedIdentity mn_identity();
// φ(x) = xy, φ(y) = yx; φ^ω(x) = φ^ω(y).
IteratedIdentity tm_identity();
// φ(x) = x^{ω-1} y^{ω-1} x y, φ(y) = y; φ^ω(x) = x^ω, x^ω y = y, y x^ω = y.
std::vector<IteratedIdentity> nilpotent_group_basis();
// (x^ω y^ω)^ω = (y^ω x^ω)^ω
IteratedIdentity block_group_identity();
// x^ω = x^{ω+1}
IteratedIdentity aperiodic_identity();
// x^ω y^ω = y^ω x^ω
IteratedIdentity idempotents_commute_identity();

// Whether the identities of S¹-free bases are satisfied:
//   mn, wmn    the MN identity
//   tm         the TM identity
//   eunng      the MN identity on every <a, b>
//   bg, aperiodic, idem-commute   their identity
//   bgnil      the block group identity, and the nilpotent group basis on
//              every maximal subgroup
//   pe         bgnil, and the limits of (x, z) under 1, 1, z, z^2, ...
//              agree for all x, z
// Throws Unsupported for properties without a basis (nt, ndf12, inverse).
bool satisfies_basis(FiniteSemigroup const& s, Property p);
bool has_basis(Property p);

}  // namespace malcev
