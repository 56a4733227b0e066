#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "malcev/corpus.hpp"
#include "malcev/semigroup.hpp"
#include "malcev/transformation.hpp"
#include "malcev/zoo.hpp"

namespace malcev::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

// A transformation of degree n; each point maps to θ with the given weight
// out of 10.
inline Transformation random_transformation(std::size_t degree, int theta_weight = 2,
                                            bool injective = false) {
  Transformation t(degree);
  std::vector<bool> used(degree + 1, false);
  for (std::size_t j = 1; j <= degree; ++j) {
    if (static_cast<int>(uniform(0, 9)) < theta_weight) {
      continue;
    }
    Point p = static_cast<Point>(uniform(1, degree));
    if (injective) {
      if (used[p]) {
        continue;
      }
      used[p] = true;
    }
    t.set(j, p);
  }
  return t;
}

// Random transformation semigroup with a small number of generators.
inline FiniteSemigroup random_semigroup(std::size_t degree, std::size_t generators,
                                        bool injective = false, int theta_weight = 2) {
  std::vector<Transformation> gens;
  for (std::size_t i = 0; i < generators; ++i) {
    gens.push_back(random_transformation(degree, theta_weight, injective));
  }
  return from_transformations(gens, 5000);
}

// Every semigroup of order at most 4 up to isomorphism.
inline std::vector<FiniteSemigroup> const& corpus() {
  static std::vector<FiniteSemigroup> const all = small_semigroups(4);
  return all;
}

struct Named {
  std::string name;
  FiniteSemigroup const* semigroup;
};

// The named semigroups of moderate order.
inline std::vector<Named> const& zoo_members() {
  static std::vector<Named> const all = [] {
    std::vector<Named> out;
    for (auto const* e : {&zoo::f7(), &zoo::f12(), &zoo::n1(), &zoo::n2(), &zoo::n3(),
                          &zoo::n4(), &zoo::sprime(), &zoo::lz2(), &zoo::rz2(), &zoo::c2(),
                          &zoo::s3(), &zoo::c7c3()}) {
      out.push_back({e->name, &e->semigroup});
    }
    return out;
  }();
  return all;
}

}  // namespace malcev::testing
