#include <catch2/catch_amalgamated.hpp>

#include <chrono>

#include "malcev/action.hpp"
#include "malcev/deciders.hpp"
#include "malcev/structure.hpp"
#include "malcev/zoo.hpp"
#include "support.hpp"

using namespace malcev;

namespace {

bool in_square(FiniteSemigroup const& s, ElementId x) {
  for (ElementId a = 0; a < s.order(); ++a) {
    for (ElementId b = 0; b < s.order(); ++b) {
      if (s(a, b) == x) {
        return true;
      }
    }
  }
  return false;
}

zoo::Color box_color(int box, std::vector<zoo::Color> const& coloring) {
  if (box == 1) {
    return zoo::Color::Black;
  }
  if (box % 2 == 0) {
    return zoo::Color::White;
  }
  return coloring[(box - 3) / 2];
}

bool alternates(int n, int p, int q, std::vector<zoo::Color> const& coloring) {
  if (p < 1 || n % p != 0 || q < 1 || q > 2 * n) {
    return false;
  }
  int len = 2 * n / p;
  for (int k = 0; k < len; ++k) {
    int a = (q - 1 + k * p) % (2 * n) + 1;
    int b = (q - 1 + (k + 1) * p) % (2 * n) + 1;
    if (box_color(a, coloring) == box_color(b, coloring)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("orders of the named semigroups", "[zoo]") {
  REQUIRE(zoo::f7().semigroup.order() == 7);
  REQUIRE(zoo::f12().semigroup.order() == 12);
  REQUIRE(zoo::n1().semigroup.order() == 19);
  REQUIRE(zoo::n2().semigroup.order() == 127);
  REQUIRE(zoo::n3().semigroup.order() == 20);
  REQUIRE(zoo::n4().semigroup.order() == 13);
  REQUIRE(zoo::n2n(1).semigroup.order() == 152);
  REQUIRE(zoo::n2n(2).semigroup.order() == 601);
  REQUIRE(zoo::c7c3().semigroup.order() == 21);
  REQUIRE(zoo::s3().semigroup.order() == 6);
  for (auto const& name : zoo::names()) {
    auto const& e = zoo::by_name(name);
    REQUIRE(!find_non_associative(e.semigroup.table(), e.semigroup.order()));
  }
  REQUIRE_THROWS_AS(zoo::by_name("f8"), Error);
}

TEST_CASE("F7", "[zoo]") {
  auto const& f7 = zoo::f7();
  auto const& s = f7.semigroup;
  REQUIRE(s(f7["u"], f7["u"]) == f7["1"]);
  REQUIRE(closure_within(s, std::vector<ElementId>{f7["u"], f7["(1;1,1)"]}).size() == 7);
}

TEST_CASE("F12", "[zoo]") {
  auto const& f12 = zoo::f12();
  auto sub = generated_subsemigroup(f12.semigroup, std::vector<ElementId>{f12["w1"], f12["w2"]});
  REQUIRE(is_mn(sub.semigroup));
  REQUIRE_FALSE(is_mn(f12.semigroup));
  REQUIRE(f12.semigroup.name(f12["w1"]) == "(1)(3,2,θ)");
  REQUIRE(f12.semigroup.name(f12["w2"]) == "(3,1,2,θ)");

  // A different w2 gives a different semigroup.
  auto tampered = zoo::f12_from("(1)(3,2,θ)", "(3,1,θ)");
  REQUIRE(tampered.order() != 12);
}

TEST_CASE("N1", "[zoo]") {
  auto const& n1 = zoo::n1();
  auto const& s = n1.semigroup;
  REQUIRE(s(n1["w"], n1["v"]) == *s.zero());
  REQUIRE(s(n1["v"], n1["w"]) == *s.zero());
  REQUIRE(idempotents_commute(s));
  REQUIRE(is_aperiodic(s));
}

TEST_CASE("N2", "[zoo]") {
  auto const& n2 = zoo::n2();
  auto const& s = n2.semigroup;
  REQUIRE(closure_within(s, std::vector<ElementId>{n2["g1"], n2["g2"]}).size() == 127);
  REQUIRE(zoo::n2_top_listing().size() == 26);
  for (auto const& text : zoo::n2_top_listing()) {
    REQUIRE(s.find(parse_orbits(text, 10)) != kNoElement);
  }
  // The literal form names point 10 twice; it is read as the chain.
  REQUIRE_THROWS_MATCHES(parse_orbits("(3,10,θ) (10,2,θ)", 10), Error,
                         Catch::Matchers::Predicate<Error const&>(
                             [](Error const& e) { return e.kind() == ErrorKind::ParseError; }));
  REQUIRE(s.find(parse_orbits("(3,10,2,θ)", 10)) != kNoElement);

  // The non-nilpotence certificate: alternating w1, w2 never equalizes.
  PairState p{n2["x"], n2["y"]};
  for (int k = 0; k < 1000; ++k) {
    REQUIRE_FALSE(p.diagonal());
    p = pair_step(s, p, k % 2 ? n2["w2"] : n2["w1"]);
  }
}

TEST_CASE("N3", "[zoo]") {
  auto const& s = zoo::n3().semigroup;
  REQUIRE(is_eunng(s));
  REQUIRE_FALSE(is_nt(s));
  REQUIRE(is_ndf12(s));
}

TEST_CASE("N4", "[zoo]") {
  auto const& s = zoo::n4().semigroup;
  REQUIRE(!find_non_associative(s.table(), s.order()));
  REQUIRE(is_mn(s));
  REQUIRE(is_aperiodic(s));
  REQUIRE_FALSE(idempotents_commute(s));
  REQUIRE(s(s.find("(1,1)"), s.find("(2,1)")) == s.find("a5"));
}

TEST_CASE("N_{2^n} family", "[zoo]") {
  for (int n : {1, 2}) {
    auto const& e = zoo::n2n(n);
    auto const& s = e.semigroup;
    std::vector<std::string> gens{"x", "y"};
    for (int i = 1; i <= n + 2; ++i) {
      gens.push_back("w" + std::to_string(i));
    }
    for (auto const& g : gens) {
      REQUIRE_FALSE(in_square(s, e[g]));
    }
    // (λ, ρ) after 1, w1, ..., w_{n+1} returns after w_{n+2}, w_{n+1}.
    std::vector<ElementId> word{kUnit};
    for (int i = 1; i <= n + 1; ++i) {
      word.push_back(e["w" + std::to_string(i)]);
    }
    PairState p = lambda_rho(s, {e["x"], e["y"]}, word);
    REQUIRE_FALSE(p.diagonal());
    std::vector<ElementId> loop{e["w" + std::to_string(n + 2)], e["w" + std::to_string(n + 1)]};
    REQUIRE(lambda_rho(s, p, loop) == p);
  }
  REQUIRE_FALSE(is_nt(zoo::n2n(1).semigroup));
  REQUIRE_THROWS_AS(zoo::n2n(3), Error);
  REQUIRE_THROWS_AS(zoo::n2n(0), Error);

  auto const& sp = zoo::sprime();
  for (char const* g : {"X", "Y", "W1", "W2"}) {
    REQUIRE_FALSE(in_square(sp.semigroup, sp[g]));
  }
}

TEST_CASE("choose_pair examples", "[zoo]") {
  using zoo::Color;
  REQUIRE(zoo::choose_pair(1, {}) == std::pair{1, 1});
  for (Color c : {Color::Black, Color::White}) {
    REQUIRE(zoo::choose_pair(3, {c, Color::Black}) == std::pair{3, 1});
    REQUIRE(zoo::choose_pair(3, {c, Color::White}) == std::pair{3, 1});
  }
  auto [p, q] = zoo::choose_pair(2, {Color::Black});
  REQUIRE((p == 1 || p == 2));
  REQUIRE(alternates(2, p, q, {Color::Black}));
  REQUIRE_THROWS_AS(zoo::choose_pair(3, {Color::Black}), Error);
}

TEST_CASE("choose_pair succeeds on every colouring up to n = 8", "[zoo]") {
  auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<zoo::Color> coloring;
      for (int k = 0; k < n - 1; ++k) {
        coloring.push_back(mask >> k & 1u ? zoo::Color::Black : zoo::Color::White);
      }
      auto [p, q] = zoo::choose_pair(n, coloring);
      REQUIRE(alternates(n, p, q, coloring));
    }
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  REQUIRE(elapsed < std::chrono::seconds(1));
}
