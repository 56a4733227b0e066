#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "malcev/semigroup.hpp"
#include "malcev/transformation.hpp"

namespace malcev {

struct OrbitDecomposition {
  // Each cycle starts at its smallest point.
  std::vector<std::vector<Point>> cycles;
  // Points of each tail in order; the trailing θ is implicit.
  std::vector<std::vector<Point>> tails;
  bool is_theta_bar = false;
};

// Throws NotPartialInjective.
OrbitDecomposition orbits(Transformation const& t);

// Orbits ordered by their last point before θ (tails) or smallest point
// (cycles). Tails of length one are omitted.
std::string format_orbits(Transformation const& t, bool ascii = false);

// Accepts θ or 0 for θ, and θ̄ or O for the all-to-θ map. Points not
// mentioned map to θ.
Transformation parse_orbits(std::string_view text, std::size_t degree);

struct GammaRepresentation {
  FiniteSemigroup host;
  std::size_t n = 0;
  // idempotents[j - 1] is the idempotent whose L-class is point j.
  std::vector<ElementId> idempotents;
  // ideal[i] is true for elements of the designated J-class.
  std::vector<bool> ideal;
  std::vector<Transformation> map;
};

// The right action of S on the L-classes of the J-class of the given
// idempotents, which must together with the zero form an ideal of the form
// M0(G, n, n; I_n). Point j is the L-class of idempotents[j - 1].
// Throws IdealNotInverseForm.
GammaRepresentation gamma(FiniteSemigroup const& s, std::vector<ElementId> idempotents);
// Idempotents taken in increasing id order from the J-class of e.
GammaRepresentation gamma_of_class(FiniteSemigroup const& s, ElementId e);

struct EpsilonIota {
  std::set<Point> epsilon1;
  std::set<Point> epsilon2;
  std::size_t iota1 = 0;
  std::size_t iota2 = 0;
};

EpsilonIota epsilon_iota(Transformation const& t);
EpsilonIota epsilon_iota(GammaRepresentation const& rep, ElementId w);

// The θ-disjoint union of M = M0({1}, n, n; I_n) and T, with T acting on M
// through delta (one transformation of degree n per element of T).
// Elements of M keep their from_rees ids; T minus its zero follows.
// Throws DeltaNotHomomorphism, DeltaNotPartialInjective, ThetaPreimageWrong.
FiniteSemigroup glue(ReesMatrixSpec const& m, FiniteSemigroup const& t,
                     std::vector<Transformation> const& delta);

}  // namespace malcev
