#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "malcev/action.hpp"
#include "malcev/division.hpp"
#include "malcev/zoo.hpp"
#include "support.hpp"

using namespace malcev;
using malcev::testing::random_transformation;
using malcev::testing::uniform;

namespace {

std::vector<zoo::ZooEntry const*> zoo_with_ideal() {
  std::vector<zoo::ZooEntry const*> out;
  for (auto const* e : {&zoo::f7(), &zoo::f12(), &zoo::n1(), &zoo::n2(), &zoo::n3(),
                        &zoo::n2n(1)}) {
    REQUIRE_FALSE(e->ideal_idempotents.empty());
    out.push_back(e);
  }
  return out;
}

ErrorKind kind_of(auto const& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("orbit printing", "[action]") {
  REQUIRE(format_orbits(Transformation::from_images({0, 3, 0, 0})) == "(2,3,θ)");
  REQUIRE(format_orbits(Transformation::from_images({4, 3, 0, 0})) == "(2,3,θ)(1,4,θ)");
  REQUIRE(format_orbits(Transformation::identity(2)) == "(1)(2)");
  REQUIRE(format_orbits(Transformation::from_images({2, 1})) == "(1,2)");
  REQUIRE(format_orbits(Transformation(3)) == "θ̄");
  REQUIRE(format_orbits(Transformation(3), true) == "O");
  REQUIRE(format_orbits(Transformation::from_images({4, 3, 0, 0}), true) == "(2,3,0)(1,4,0)");
  // A point sent to θ with nothing mapping to it is left out.
  REQUIRE(format_orbits(Transformation::from_images({1, 0})) == "(1)");
  REQUIRE(format_orbits(Transformation::from_images({0, 0, 2})) == "(3,2,θ)");
  REQUIRE(format_orbits(Transformation::from_images({2, 3, 0})) == "(1,2,3,θ)");

  auto d = orbits(Transformation::from_images({4, 3, 0, 0}));
  REQUIRE(d.cycles.empty());
  REQUIRE(d.tails.size() == 2);
  REQUIRE(!d.is_theta_bar);

  REQUIRE(kind_of([] { orbits(Transformation::from_images({2, 2})); }) ==
          ErrorKind::NotPartialInjective);
}

TEST_CASE("orbit parsing", "[action]") {
  REQUIRE(parse_orbits("(2,3,θ)(1,4,θ)", 4) == Transformation::from_images({4, 3, 0, 0}));
  REQUIRE(parse_orbits("(2,3,0) (1,4,0)", 4) == Transformation::from_images({4, 3, 0, 0}));
  REQUIRE(parse_orbits("(1)(2)", 2) == Transformation::identity(2));
  REQUIRE(parse_orbits("θ̄", 3) == Transformation(3));
  REQUIRE(parse_orbits("O", 3) == Transformation(3));
  REQUIRE(parse_orbits("(1,2)", 3) == Transformation::from_images({2, 1, 0}));
  for (auto const* bad : {"(1,2", "(1,5,θ)", "(1,2)(2,3,θ)", "(3,10,θ) (10,2,θ)", "(1,θ,2)",
                          "x"}) {
    INFO(bad);
    REQUIRE(kind_of([&] { parse_orbits(bad, bad[1] == '3' ? 10 : 4); }) ==
            ErrorKind::ParseError);
  }
}

TEST_CASE("orbit printing and parsing are inverse", "[action]") {
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t degree = uniform(1, 12);
    auto t = random_transformation(degree, static_cast<int>(uniform(0, 6)), true);
    auto text = format_orbits(t);
    REQUIRE(parse_orbits(text, degree) == t);
    REQUIRE(parse_orbits(format_orbits(t, true), degree) == t);
    REQUIRE(format_orbits(parse_orbits(text, degree)) == text);
  }
}

TEST_CASE("gamma representation of F7", "[action]") {
  auto const& f7 = zoo::f7();
  auto rep = gamma(f7.semigroup, f7.ideal_idempotents);
  REQUIRE(rep.n == 2);
  REQUIRE(format_orbits(rep.map[f7["u"]]) == "(1,2)");
  REQUIRE(format_orbits(rep.map[f7["1"]]) == "(1)(2)");
  REQUIRE(format_orbits(rep.map[f7.semigroup.find("(1;1,2)")]) == "(1,2,θ)");
  REQUIRE(format_orbits(rep.map[f7.semigroup.find("(1;2,2)")]) == "(2)");
  REQUIRE(format_orbits(rep.map[*f7.semigroup.zero()]) == "θ̄");
}

TEST_CASE("gamma is a homomorphism into partial injections", "[action]") {
  for (auto const* e : zoo_with_ideal()) {
    auto const& s = e->semigroup;
    auto rep = gamma(s, e->ideal_idempotents);
    for (ElementId x = 0; x < s.order(); ++x) {
      REQUIRE(rep.map[x].is_partial_injective());
      for (ElementId y = 0; y < s.order(); ++y) {
        REQUIRE(rep.map[s(x, y)] == rep.map[x].then(rep.map[y]));
      }
    }
    // The idempotent of point j fixes j and nothing else.
    for (std::size_t j = 1; j <= rep.n; ++j) {
      REQUIRE(format_orbits(rep.map[e->ideal_idempotents[j - 1]]) ==
              "(" + std::to_string(j) + ")");
    }
  }
}

TEST_CASE("gamma recovers the gluing map", "[action]") {
  auto const& f7 = zoo::f7();
  auto rep = gamma(f7.semigroup, f7.ideal_idempotents);
  REQUIRE(rep.map[f7["u"]] == parse_orbits("(1,2)", 2));
  REQUIRE(rep.map[f7["1"]] == parse_orbits("(1)(2)", 2));

  auto const& n1 = zoo::n1();
  auto r1 = gamma(n1.semigroup, n1.ideal_idempotents);
  REQUIRE(r1.map[n1["w"]] == parse_orbits("(2,3,θ)(1,4,θ)", 4));
  REQUIRE(format_orbits(r1.map[n1["w"]]) == "(2,3,θ)(1,4,θ)");
  REQUIRE(r1.map[n1["v"]] == parse_orbits("(1,3,θ)(2,4,θ)", 4));
}

TEST_CASE("epsilon and iota", "[action]") {
  auto const& n1 = zoo::n1();
  auto rep = gamma(n1.semigroup, n1.ideal_idempotents);
  auto ei = epsilon_iota(rep, n1["w"]);
  REQUIRE(ei.epsilon1 == std::set<Point>{1, 2});
  REQUIRE(ei.epsilon2 == std::set<Point>{3, 4});
  REQUIRE(ei.iota1 == 2);
  REQUIRE(ei.iota2 == 2);

  auto full = epsilon_iota(Transformation::from_images({2, 3, 1}));
  REQUIRE(full.epsilon1 == std::set<Point>{1, 2, 3});
  REQUIRE(full.epsilon2 == std::set<Point>{1, 2, 3});

  auto none = epsilon_iota(Transformation(3));
  REQUIRE(none.epsilon1.empty());
  REQUIRE(none.epsilon2.empty());
  REQUIRE(none.iota1 == 0);
}

TEST_CASE("powers of elements with long tails lower iota", "[action]") {
  for (auto const* e : zoo_with_ideal()) {
    auto const& s = e->semigroup;
    auto rep = gamma(s, e->ideal_idempotents);
    auto iota = [&](Transformation const& t) { return epsilon_iota(t); };
    for (ElementId w = 0; w < s.order(); ++w) {
      auto d = orbits(rep.map[w]);
      bool long_tail = std::any_of(d.tails.begin(), d.tails.end(),
                                   [](auto const& tail) { return tail.size() > 1; });
      if (!long_tail) {
        continue;
      }
      auto base = iota(rep.map[w]);
      std::size_t bound = std::min(base.iota1, base.iota2);
      for (std::uint64_t p : {2, 3}) {
        Transformation wp = rep.map[power(s, w, p)];
        std::vector<Transformation> ys{Transformation::identity(rep.n)};
        for (ElementId y = 0; y < s.order(); ++y) {
          ys.push_back(rep.map[y]);
        }
        for (auto const& y : ys) {
          auto a = iota(wp.then(y));
          auto b = iota(y.then(wp));
          std::size_t top = std::max({a.iota1, a.iota2, b.iota1, b.iota2});
          REQUIRE(top < bound);
        }
      }
    }
  }
}

TEST_CASE("glue reproduces the named constructions", "[action]") {
  auto spec = identity_rees_spec(2);
  auto top = FiniteSemigroup::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}, 2u, 0u,
                                        {"1", "u", "θ"});
  auto glued = glue(spec, top,
                    {Transformation::identity(2), parse_orbits("(1,2)", 2), Transformation(2)});
  REQUIRE(glued.order() == 7);
  REQUIRE(are_isomorphic(glued, zoo::f7().semigroup));

  auto zero_only = FiniteSemigroup::from_rows({{0}});
  auto bare = glue(identity_rees_spec(3), zero_only, {Transformation(3)});
  REQUIRE(are_isomorphic(bare, from_rees(identity_rees_spec(3))));
}

TEST_CASE("glue rejects bad gluing maps", "[action]") {
  auto spec = identity_rees_spec(2);
  auto top = FiniteSemigroup::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}, 2u, 0u);
  REQUIRE(kind_of([&] {
            glue(spec, top,
                 {Transformation::identity(2), parse_orbits("(1)", 2), Transformation(2)});
          }) == ErrorKind::DeltaNotHomomorphism);
  REQUIRE(kind_of([&] {
            glue(spec, top,
                 {Transformation::identity(2), Transformation(2), Transformation(2)});
          }) == ErrorKind::ThetaPreimageWrong);
  REQUIRE(kind_of([&] {
            glue(spec, top,
                 {Transformation::identity(2), parse_orbits("(1,2)", 2),
                  Transformation::identity(2)});
          }) == ErrorKind::ThetaPreimageWrong);
  // Constant map onto point 1 is not injective.
  auto null = FiniteSemigroup::from_rows({{1, 1}, {1, 1}}, 1u);
  REQUIRE(kind_of([&] {
            glue(spec, null, {Transformation::from_images({1, 1}), Transformation(2)});
          }) == ErrorKind::DeltaNotPartialInjective);
}

TEST_CASE("gamma rejects ideals of the wrong form", "[action]") {
  auto const& lz = zoo::lz2().semigroup;
  REQUIRE(kind_of([&] { gamma(lz, {0, 1}); }) == ErrorKind::IdealNotInverseForm);
}
