#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "malcev/action.hpp"
#include "malcev/deciders.hpp"
#include "malcev/division.hpp"
#include "malcev/structure.hpp"
#include "malcev/zoo.hpp"
#include "support.hpp"

using namespace malcev;
using malcev::testing::corpus;

namespace {

// Every subsemigroup of T, as sorted element lists.
std::vector<std::vector<ElementId>> all_subsemigroups(FiniteSemigroup const& t) {
  std::set<std::vector<ElementId>> found;
  std::size_t n = t.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<ElementId> gens;
    for (ElementId x = 0; x < n; ++x) {
      if (mask >> x & 1u) {
        gens.push_back(x);
      }
    }
    found.insert(closure_within(t, gens));
  }
  return {found.begin(), found.end()};
}

// F is the image of some subsemigroup of T under some surjective
// homomorphism; all maps are tried.
bool divides_oracle(FiniteSemigroup const& f, FiniteSemigroup const& t) {
  for (auto const& sub : all_subsemigroups(t)) {
    if (sub.size() < f.order()) {
      continue;
    }
    std::vector<ElementId> image(sub.size(), 0);
    auto index = [&](ElementId x) {
      return static_cast<std::size_t>(std::lower_bound(sub.begin(), sub.end(), x) - sub.begin());
    };
    while (true) {
      bool hom = true;
      for (std::size_t i = 0; i < sub.size() && hom; ++i) {
        for (std::size_t j = 0; j < sub.size() && hom; ++j) {
          hom = image[index(t(sub[i], sub[j]))] == f(image[i], image[j]);
        }
      }
      if (hom && std::set<ElementId>(image.begin(), image.end()).size() == f.order()) {
        return true;
      }
      std::size_t k = 0;
      while (k < image.size() && ++image[k] == f.order()) {
        image[k++] = 0;
      }
      if (k == image.size()) {
        break;
      }
    }
  }
  return false;
}

std::size_t generating_size_oracle(FiniteSemigroup const& f) {
  std::size_t n = f.order();
  for (std::size_t g = 1; g <= n; ++g) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + g, true);
    do {
      std::vector<ElementId> gens;
      for (ElementId x = 0; x < n; ++x) {
        if (pick[x]) {
          gens.push_back(x);
        }
      }
      if (closure_within(f, gens).size() == n) {
        return g;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

}  // namespace

TEST_CASE("minimal generating sets", "[division]") {
  auto const& f7 = zoo::f7();
  auto gens = minimal_generating_set(f7.semigroup);
  std::sort(gens.begin(), gens.end());
  std::vector<ElementId> expected{f7["u"], f7["(1;1,1)"]};
  std::sort(expected.begin(), expected.end());
  REQUIRE(gens == expected);

  REQUIRE(minimal_generating_size(zoo::c2().semigroup) == 1);
  REQUIRE(minimal_generating_size(zoo::c7c3().semigroup) == 2);

  auto const& f12 = zoo::f12().semigroup;
  REQUIRE(minimal_generating_size(f12) == generating_size_oracle(f12));
  REQUIRE(minimal_generating_size(f12) == 3);

  for (auto const& s : corpus()) {
    auto g = minimal_generating_set(s);
    REQUIRE(closure_within(s, g).size() == s.order());
    REQUIRE(g.size() == generating_size_oracle(s));
  }
}

TEST_CASE("division agrees with unrestricted subsemigroup search", "[division]") {
  std::vector<FiniteSemigroup const*> small;
  for (auto const& s : corpus()) {
    if (s.order() <= 3) {
      small.push_back(&s);
    }
  }
  for (auto const* f : small) {
    for (auto const& t : corpus()) {
      auto r = divides(*f, t);
      REQUIRE(r.verdict != Tri::Unknown);
      REQUIRE((r.verdict == Tri::True) == divides_oracle(*f, t));
      if (r.witness) {
        REQUIRE(validate_division(*f, t, *r.witness));
      }
    }
  }
}

TEST_CASE("division is reflexive and transitive", "[division]") {
  for (auto const& s : corpus()) {
    REQUIRE(divides(s, s).verdict == Tri::True);
  }
  std::vector<FiniteSemigroup const*> small;
  for (auto const& s : corpus()) {
    if (s.order() <= 3) {
      small.push_back(&s);
    }
  }
  std::size_t n = small.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      rel[a][b] = divides(*small[a], *small[b]).verdict == Tri::True;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[a][b] && rel[b][c]) {
          REQUIRE(rel[a][c]);
        }
      }
    }
  }
}

TEST_CASE("division examples", "[division]") {
  auto const& f7 = zoo::f7().semigroup;
  REQUIRE(divides(f7, f7).verdict == Tri::True);
  auto r = divides(f7, zoo::n2().semigroup);
  REQUIRE(r.verdict == Tri::False);
  auto prod = direct_product(f7, zoo::c2().semigroup);
  auto rp = divides(f7, prod);
  REQUIRE(rp.verdict == Tri::True);
  REQUIRE(validate_division(f7, prod, *rp.witness));

  // Smaller targets cannot be divided into.
  REQUIRE(divides(f7, zoo::c2().semigroup).verdict == Tri::False);
  // A tiny budget gives up instead of guessing.
  DivisionOptions tight;
  tight.budget = 1;
  REQUIRE(divides(zoo::f12().semigroup, zoo::n2().semigroup, tight).verdict == Tri::Unknown);
}

TEST_CASE("isomorphism", "[division]") {
  for (auto const& s : corpus()) {
    REQUIRE(are_isomorphic(s, s));
  }
  REQUIRE_FALSE(are_isomorphic(zoo::lz2().semigroup, zoo::rz2().semigroup));

  // F7 as the transformation semigroup generated by (1,2) and (1).
  std::vector<Transformation> gens{parse_orbits("(1,2)", 2), parse_orbits("(1)", 2)};
  auto explicit_f7 = from_transformations(gens);
  REQUIRE(explicit_f7.order() == 7);
  REQUIRE(are_isomorphic(explicit_f7, zoo::f7().semigroup));

  auto const& c = corpus();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (c[a].order() == c[b].order()) {
        REQUIRE_FALSE(are_isomorphic(c[a], c[b]));
      }
    }
  }
}

TEST_CASE("isomorphism witnesses are bijective homomorphisms", "[division]") {
  auto const& f12 = zoo::f12().semigroup;
  auto shuffled_names = f12.names();
  std::vector<ElementId> perm(f12.order());
  for (ElementId x = 0; x < f12.order(); ++x) {
    perm[x] = static_cast<ElementId>((x * 5 + 3) % f12.order());
  }
  std::vector<ElementId> table(f12.order() * f12.order());
  for (ElementId x = 0; x < f12.order(); ++x) {
    for (ElementId y = 0; y < f12.order(); ++y) {
      table[perm[x] * f12.order() + perm[y]] = perm[f12(x, y)];
    }
  }
  auto relabelled = FiniteSemigroup::from_table(f12.order(), table);
  auto iso = find_isomorphism(f12, relabelled);
  REQUIRE(iso.has_value());
  for (ElementId x = 0; x < f12.order(); ++x) {
    for (ElementId y = 0; y < f12.order(); ++y) {
      REQUIRE((*iso)[f12(x, y)] == relabelled((*iso)[x], (*iso)[y]));
    }
  }
  REQUIRE(std::set<ElementId>(iso->begin(), iso->end()).size() == f12.order());
}

TEST_CASE("PE and NDF12 agree with their division characterizations", "[division]") {
  auto const& f7 = zoo::f7().semigroup;
  auto const& f12 = zoo::f12().semigroup;
  std::vector<FiniteSemigroup const*> all;
  for (auto const& s : corpus()) {
    all.push_back(&s);
  }
  for (auto const& z : testing::zoo_members()) {
    all.push_back(z.semigroup);
  }
  for (auto const* s : all) {
    auto d7 = divides(f7, *s);
    auto d12 = divides(f12, *s);
    REQUIRE(d7.verdict != Tri::Unknown);
    REQUIRE(d12.verdict != Tri::Unknown);
    bool nil = is_bg_nil(*s);
    REQUIRE(is_pe(*s) == (nil && d7.verdict == Tri::False));
    REQUIRE(is_ndf12(*s) ==
            (nil && d7.verdict == Tri::False && d12.verdict == Tri::False));
  }
}

TEST_CASE("times-prime trials", "[division]") {
  auto const& f7 = zoo::f7().semigroup;
  auto const& c2 = zoo::c2().semigroup;
  auto const& n3 = zoo::n3().semigroup;

  REQUIRE(times_prime_trial(f7, f7, c2).outcome == TrialOutcome::Confirmed);
  REQUIRE(times_prime_trial(f7, n3, n3).outcome == TrialOutcome::Vacuous);
  auto one = FiniteSemigroup::from_rows({{0}});
  REQUIRE(times_prime_trial(f7, direct_product(f7, c2), one).outcome ==
          TrialOutcome::Confirmed);
}

TEST_CASE("F12 in a product forces an excluded divisor in a factor", "[division]") {
  auto const& f7 = zoo::f7().semigroup;
  auto const& f12 = zoo::f12().semigroup;
  std::vector<FiniteSemigroup> excluded{f7, f12};
  std::vector<std::pair<FiniteSemigroup const*, FiniteSemigroup const*>> pairs{
      {&f12, &zoo::c2().semigroup},
      {&zoo::n3().semigroup, &zoo::c2().semigroup},
      {&zoo::n1().semigroup, &zoo::c2().semigroup},
      {&f7, &zoo::c2().semigroup},
  };
  for (auto const& s : corpus()) {
    if (s.order() == 4 && is_block_group(s)) {
      pairs.emplace_back(&zoo::n3().semigroup, &s);
    }
  }
  for (auto [t, v] : pairs) {
    REQUIRE(is_block_group(*t));
    REQUIRE(is_block_group(*v));
    auto r = exclusion_trial(f12, excluded, *t, *v);
    INFO(r.detail);
    REQUIRE(r.outcome != TrialOutcome::Violation);
    REQUIRE(r.outcome != TrialOutcome::Unknown);
  }
  REQUIRE(exclusion_trial(f12, excluded, f12, zoo::c2().semigroup).outcome ==
          TrialOutcome::Confirmed);
}
