#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "malcev/semigroup.hpp"

namespace malcev {

// Green's relations. Classes of each relation are numbered by their least
// element.
struct GreenData {
  std::vector<std::uint32_t> r_class;
  std::vector<std::uint32_t> l_class;
  std::vector<std::uint32_t> h_class;
  std::vector<std::uint32_t> j_class;
  std::vector<std::vector<ElementId>> r_classes;
  std::vector<std::vector<ElementId>> l_classes;
  std::vector<std::vector<ElementId>> h_classes;
  std::vector<std::vector<ElementId>> j_classes;
  // Row-major bit matrix over J-classes: j_leq[a][b] iff J_a <= J_b.
  std::vector<std::uint64_t> j_leq_bits;
  std::size_t j_words = 0;

  bool j_leq(std::uint32_t a, std::uint32_t b) const {
    return (j_leq_bits[a * j_words + b / 64] >> (b % 64)) & 1u;
  }
};

GreenData const& green(FiniteSemigroup const& s);

std::vector<ElementId> idempotents(FiniteSemigroup const& s);

enum class FactorKind { CompletelySimple, CompletelyZeroSimple, Null };

char const* to_string(FactorKind kind);

struct ReesCoordinates {
  ReesMatrixSpec spec;
  // The maximal subgroup used for coordinates, as elements of S.
  std::vector<ElementId> group_elements;
  // element[id] is the element of S for each non-θ element id of
  // from_rees(spec).
  std::vector<ElementId> element;
};

struct FactorInfo {
  std::uint32_t j_class = 0;
  std::vector<ElementId> elements;
  FactorKind kind = FactorKind::Null;
  std::optional<ReesCoordinates> rees;
};

struct PrincipalSeries {
  // ideals[0] is S; ideals[k + 1] is ideals[k] minus factors[k].elements. The
  // last ideal is the kernel, so ideals and factors have the same length.
  std::vector<std::vector<ElementId>> ideals;
  std::vector<FactorInfo> factors;
};

PrincipalSeries principal_series(FiniteSemigroup const& s);

// Throws NotSimpleFactor when the J-class is not regular.
ReesCoordinates rees_coordinates(FiniteSemigroup const& s, std::uint32_t j_class);

// The factor J^0 (or J alone when J is a subsemigroup), elements in
// increasing order followed by the zero when present.
FiniteSemigroup principal_factor(FiniteSemigroup const& s, std::uint32_t j_class);

bool is_regular(FiniteSemigroup const& s);
bool is_inverse(FiniteSemigroup const& s);
bool is_block_group(FiniteSemigroup const& s);
bool idempotents_commute(FiniteSemigroup const& s);
bool is_aperiodic(FiniteSemigroup const& s);
bool is_group(FiniteSemigroup const& s);

// H-classes of idempotents, one per isomorphism type, by increasing order.
std::vector<FiniteSemigroup> maximal_subgroups(FiniteSemigroup const& s);
FiniteSemigroup maximal_subgroup(FiniteSemigroup const& s, ElementId e);

// Throws NotAGroup.
bool is_nilpotent_group(FiniteSemigroup const& g);

bool is_bg_nil(FiniteSemigroup const& s);

}  // namespace malcev
