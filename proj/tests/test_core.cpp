#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "malcev/semigroup.hpp"
#include "support.hpp"

using namespace malcev;

TEST_CASE("from_table accepts valid tables and detects zero and identity", "[core]") {
  auto one = FiniteSemigroup::from_rows({{0}});
  REQUIRE(one.order() == 1);
  REQUIRE(one.identity() == 0u);
  REQUIRE(one.zero() == 0u);

  // Left zero semigroup: xy = x.
  auto lz = FiniteSemigroup::from_rows({{0, 0}, {1, 1}});
  REQUIRE(!lz.identity());
  REQUIRE(!lz.zero());

  auto c2 = FiniteSemigroup::from_rows({{0, 1}, {1, 0}}, std::nullopt, 0u);
  REQUIRE(c2.identity() == 0u);
}

TEST_CASE("from_table rejects bad input", "[core]") {
  REQUIRE_THROWS_AS(FiniteSemigroup::from_rows({{0, 1}, {1, 1}, {0, 0}}), Error);
  REQUIRE_THROWS_AS(FiniteSemigroup::from_table(2, {0, 2, 1, 1}), Error);
  try {
    // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1.
    FiniteSemigroup::from_rows({{1, 0}, {1, 0}});
    FAIL("expected NotAssociative");
  } catch (NotAssociativeError const& e) {
    REQUIRE(e.kind() == ErrorKind::NotAssociative);
    auto t = e.triple();
    auto lhs = std::vector<ElementId>{1, 0, 1, 0};
    REQUIRE(lhs[lhs[t[0] * 2 + t[1]] * 2 + t[2]] != lhs[t[0] * 2 + lhs[t[1] * 2 + t[2]]]);
  }
  try {
    FiniteSemigroup::from_rows({{0, 0}, {0, 1}}, 1u);
    FAIL("expected BadZero");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::BadZero);
  }
  try {
    FiniteSemigroup::from_rows({{0, 0}, {0, 1}}, std::nullopt, 0u);
    FAIL("expected BadIdentity");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::BadIdentity);
  }
}

TEST_CASE("adjoin_identity always adds a fresh element", "[core]") {
  auto c2 = FiniteSemigroup::from_rows({{0, 1}, {1, 0}});
  auto c2one = adjoin_identity(c2);
  REQUIRE(c2one.order() == 3);
  REQUIRE(c2one.identity() == 2u);
  REQUIRE(c2one.product(1, 1) == 0);
  REQUIRE(!find_non_associative(c2one.table(), c2one.order()));

  auto z = adjoin_zero(c2);
  REQUIRE(z.zero() == 2u);
  REQUIRE(!find_non_associative(z.table(), z.order()));
}

TEST_CASE("omega powers follow their definition", "[core][property]") {
  for (int trial = 0; trial < 40; ++trial) {
    auto s = testing::random_semigroup(testing::uniform(2, 5), testing::uniform(1, 3));
    for (ElementId x = 0; x < s.order(); ++x) {
      // Oracle: scan powers directly.
      std::vector<ElementId> pw{x};
      while (true) {
        ElementId next = s.product(pw.back(), x);
        auto it = std::find(pw.begin(), pw.end(), next);
        if (it != pw.end()) {
          std::size_t index = static_cast<std::size_t>(it - pw.begin()) + 1;
          std::size_t period = pw.size() + 1 - index;
          REQUIRE(s.index_of(x) == index);
          REQUIRE(s.period_of(x) == period);
          break;
        }
        pw.push_back(next);
      }
      ElementId e = s.omega(x);
      REQUIRE(s.is_idempotent(e));
      bool is_power = std::find(pw.begin(), pw.end(), e) != pw.end();
      REQUIRE(is_power);
      REQUIRE(s.product(s.omega_plus_one(x), e) == s.omega_plus_one(x));
      REQUIRE(s.product(s.omega_minus_one(x), x) == e);
      REQUIRE(s.product(x, s.omega_minus_one(x)) == e);
      REQUIRE(s.omega_plus_one(x) == s.product(e, x));
      REQUIRE(power(s, x, 1000003) == pw[(s.index_of(x) - 1) +
                                         (1000003 - s.index_of(x)) % s.period_of(x)]);
    }
  }
}

TEST_CASE("transformation closure matches a naive fixpoint", "[core][property]") {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t degree = testing::uniform(1, 5);
    std::vector<Transformation> gens;
    std::size_t k = testing::uniform(1, 3);
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(testing::random_transformation(degree));
    }
    auto s = from_transformations(gens);

    std::set<Transformation> naive(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Transformation> cur(naive.begin(), naive.end());
      for (auto const& a : cur) {
        for (auto const& b : cur) {
          grew = naive.insert(a.then(b)).second || grew;
        }
      }
    }
    REQUIRE(s.order() == naive.size());
    auto const& ts = s.transformations();
    for (ElementId a = 0; a < s.order(); ++a) {
      for (ElementId b = 0; b < s.order(); ++b) {
        REQUIRE(ts[s.product(a, b)] == ts[a].then(ts[b]));
      }
    }
    REQUIRE(!find_non_associative(s.table(), s.order()));
  }
}

TEST_CASE("transformation closure respects the budget", "[core]") {
  // The full transformation monoid on 4 points plus θ has 625 elements.
  auto cycle = Transformation::from_images({2, 3, 4, 1});
  auto swap = Transformation::from_images({2, 1, 3, 4});
  auto merge = Transformation::from_images({1, 1, 3, 4});
  auto kill = Transformation::from_images({0, 2, 3, 4});
  std::vector<Transformation> gens{cycle, swap, merge, kill};
  REQUIRE(from_transformations(gens).order() == 625);
  try {
    from_transformations(gens, 100);
    FAIL("expected SizeBudgetExceeded");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::SizeBudgetExceeded);
  }
}

TEST_CASE("Rees matrix semigroups", "[core]") {
  auto m = from_rees(identity_rees_spec(3));
  REQUIRE(m.order() == 10);
  REQUIRE(m.zero() == 9u);
  REQUIRE(!find_non_associative(m.table(), m.order()));
  REQUIRE(m.name(0) == "(1;1,1)");

  auto c2 = FiniteSemigroup::from_rows({{0, 1}, {1, 0}}, std::nullopt, 0u,
                                       {"e", "g"});
  ReesMatrixSpec spec{c2, 2, 2, {0u, 1u, 0u, std::nullopt}, true};
  auto r = from_rees(spec);
  REQUIRE(r.order() == 9);
  REQUIRE(!find_non_associative(r.table(), r.order()));

  ReesMatrixSpec plain{c2, 2, 1, {0u, 1u}, false};
  auto rs = from_rees(plain);
  REQUIRE(rs.order() == 4);
  REQUIRE(!rs.zero());
  REQUIRE(!find_non_associative(rs.table(), rs.order()));

  ReesMatrixSpec singular{c2, 2, 2, {0u, std::nullopt, 0u, std::nullopt}, true};
  try {
    from_rees(singular);
    FAIL("expected NotRegular");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::NotRegular);
  }
}

TEST_CASE("direct products and subsemigroups", "[core][property]") {
  for (int trial = 0; trial < 20; ++trial) {
    auto s = testing::random_semigroup(3, 2);
    auto t = testing::random_semigroup(3, 2);
    if (s.order() * t.order() > 400) {
      continue;
    }
    auto p = direct_product(s, t);
    REQUIRE(p.order() == s.order() * t.order());
    REQUIRE(!find_non_associative(p.table(), p.order()));
    for (ElementId x = 0; x < p.order(); ++x) {
      for (ElementId y = 0; y < p.order(); ++y) {
        ElementId xy = p.product(x, y);
        REQUIRE(xy / t.order() == s.product(x / t.order(), y / t.order()));
        REQUIRE(xy % t.order() == t.product(x % t.order(), y % t.order()));
      }
    }
    ElementId g = static_cast<ElementId>(testing::uniform(0, p.order() - 1));
    std::vector<ElementId> gens{g};
    auto sub = generated_subsemigroup(p, gens);
    for (ElementId a = 0; a < sub.semigroup.order(); ++a) {
      for (ElementId b = 0; b < sub.semigroup.order(); ++b) {
        REQUIRE(sub.embedding[sub.semigroup.product(a, b)] ==
                p.product(sub.embedding[a], sub.embedding[b]));
      }
    }
  }
  auto big = FiniteSemigroup::from_table(101, std::vector<ElementId>(101 * 101, 0));
  try {
    direct_product(big, big);
    FAIL("expected SizeBudgetExceeded");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::SizeBudgetExceeded);
  }
}
