#include "malcev/zoo.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "malcev/action.hpp"
#include "malcev/structure.hpp"

namespace malcev::zoo {

ElementId ZooEntry::operator[](std::string const& label) const {
  auto it = labels.find(label);
  if (it == labels.end()) {
    throw Error(ErrorKind::InvalidArgument, name + " has no element labelled " + label);
  }
  return it->second;
}

namespace {

void require(bool condition, std::string const& name, std::string const& fact) {
  if (!condition) {
    throw Error(ErrorKind::InvalidArgument, name + ": construction check failed: " + fact);
  }
}

std::vector<Transformation> matrix_units(std::size_t degree) {
  std::vector<Transformation> units;
  for (std::size_t i = 1; i <= degree; ++i) {
    for (std::size_t j = 1; j <= degree; ++j) {
      Transformation t(degree);
      t.set(i, static_cast<Point>(j));
      units.push_back(t);
    }
  }
  return units;
}

// Names elements by their orbit notation.
FiniteSemigroup named_by_orbits(FiniteSemigroup const& s) {
  std::vector<std::string> names;
  names.reserve(s.order());
  for (auto const& t : s.transformations()) {
    names.push_back(format_orbits(t));
  }
  return s.with_names(std::move(names));
}

// Transformation semigroup generated by the matrix units of the given degree
// (when asked) together with the named generators.
ZooEntry transformation_entry(std::string name, std::size_t degree,
                              std::vector<std::pair<std::string, std::string>> const& gens,
                              bool with_units, std::string construction,
                              std::optional<std::size_t> budget = {}) {
  std::vector<Transformation> all;
  if (with_units) {
    all = matrix_units(degree);
  }
  std::vector<Transformation> named;
  for (auto const& [label, orbit] : gens) {
    named.push_back(parse_orbits(orbit, degree));
    all.push_back(named.back());
  }
  FiniteSemigroup s = named_by_orbits(from_transformations(all, budget));
  ZooEntry e{std::move(name), 0, s, {}, {}, std::move(construction)};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    e.labels[gens[k].first] = s.find(named[k]);
  }
  // Idempotent matrix units (j), if all are present.
  std::vector<ElementId> idem;
  for (std::size_t j = 1; j <= degree; ++j) {
    Transformation t(degree);
    t.set(j, static_cast<Point>(j));
    ElementId id = s.find(t);
    if (id == kNoElement) {
      idem.clear();
      break;
    }
    idem.push_back(id);
  }
  e.ideal_idempotents = std::move(idem);
  return e;
}

bool in_square(FiniteSemigroup const& s, ElementId x) {
  auto table = s.table();
  return std::find(table.begin(), table.end(), x) != table.end();
}

FiniteSemigroup cyclic_group(std::size_t n) {
  std::vector<ElementId> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : "g" + (a == 1 ? std::string() : "^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<ElementId>((a + b) % n);
    }
  }
  return FiniteSemigroup::from_table(n, std::move(table), std::nullopt, 0u,
                                     std::move(names));
}

ZooEntry build_f7() {
  // T = {1, u, θ}: the cyclic group of order 2 with a zero.
  FiniteSemigroup t = FiniteSemigroup::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}, 2u, 0u,
                                                 {"1", "u", "θ"});
  std::vector<Transformation> delta{parse_orbits("(1)(2)", 2), parse_orbits("(1,2)", 2),
                                    Transformation(2)};
  ReesMatrixSpec m = identity_rees_spec(2);
  FiniteSemigroup s = glue(m, t, delta);
  ZooEntry e{"f7", 0, s, {}, {}, "θ-disjoint union of M0({1},2,2;I2) and {1,u,θ}, Γ(u)=(1,2), Γ(1)=(1)(2)"};
  e.labels = {{"1", s.find("1")}, {"u", s.find("u")}, {"(1;1,1)", s.find("(1;1,1)")}};
  e.ideal_idempotents = {s.find("(1;1,1)"), s.find("(1;2,2)")};
  require(s.order() == 7, "f7", "order 7");
  ElementId u = e["u"];
  require(s.product(u, u) == e["1"], "f7", "u^2 = 1");
  std::vector<ElementId> gens{u, e["(1;1,1)"]};
  require(closure_within(s, gens).size() == 7, "f7", "generated by u and (1;1,1)");
  return e;
}

ZooEntry build_f12_checked(std::string const& w1, std::string const& w2) {
  ZooEntry e = transformation_entry("f12", 3, {{"w1", w1}, {"w2", w2}}, true,
                                    "closure of the 3x3 matrix units with w1=" + w1 +
                                        ", w2=" + w2);
  return e;
}

ZooEntry build_f12() {
  ZooEntry e = build_f12_checked("(1)(3,2,θ)", "(3,1,2,θ)");
  require(e.semigroup.order() == 12, "f12", "order 12");
  return e;
}

ZooEntry build_n1() {
  FiniteSemigroup t = FiniteSemigroup::from_rows({{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}, 2u,
                                                 std::nullopt, {"w", "v", "θ"});
  std::vector<Transformation> delta{parse_orbits("(2,3,θ)(1,4,θ)", 4),
                                    parse_orbits("(1,3,θ)(2,4,θ)", 4), Transformation(4)};
  FiniteSemigroup s = glue(identity_rees_spec(4), t, delta);
  ZooEntry e{"n1", 0, s, {}, {}, "θ-disjoint union of M0({1},4,4;I4) and the null semigroup {w,v,θ}, Γ(w)=(2,3,θ)(1,4,θ), Γ(v)=(1,3,θ)(2,4,θ)"};
  e.labels = {{"w", s.find("w")}, {"v", s.find("v")}};
  for (int j = 1; j <= 4; ++j) {
    e.ideal_idempotents.push_back(
        s.find("(1;" + std::to_string(j) + "," + std::to_string(j) + ")"));
  }
  require(s.order() == 19, "n1", "order 19");
  require(idempotents_commute(s), "n1", "idempotents commute");
  return e;
}

std::vector<std::string> const kN2Listing = {
    "(1)(7,5,θ)", "(1,2,θ)(3,4,θ)(10,7,6,θ)", "(1,2,θ)(9,10,θ)", "(1,3,θ)(9)",
    "(1,4,θ)(3,2,θ)(6,8,θ)(9,10,θ)", "(1,7,θ)(9,4,θ)",
    "(1,8,θ)(7,2,θ)(5,4,10,3,9,θ)", "(1,8,θ)(7,4,θ)", "(1,10,θ)(9,3,θ)",
    "(2,1,θ)(8,6,5,θ)", "(2,4,θ)(8)", "(2,5,θ)(8,1,θ)", "(2,8,θ)(6,4,θ)",
    "(3,1,θ)(6)", "(3,4,θ)(6,8,θ)", "(3,5,θ)(6,1,θ)", "(3,6,2,θ)",
    // Listed as "(3,10,θ) (10,2,θ)", which names point 10 twice; the chain
    // is the element of the closure.
    "(3,10,2,θ)", "(4,2,θ)(10)", "(4,3,θ)(5,10,9,θ)", "(4)(5,7,θ)",
    "(4,9,θ)(5,3,θ)", "(4,10,θ)(5,2,θ)", "(7,1,6,θ)",
    "(8,2,6,1,5,θ)(3,7,θ)(9,4,θ)", "(10,4,7,θ)"};

ZooEntry build_n2() {
  ZooEntry e = transformation_entry(
      "n2", 10,
      {{"g1", "(8,2,6,1,5,θ)(3,7,θ)(9,4,θ)"}, {"g2", "(1,8,θ)(7,2,θ)(5,4,10,3,9,θ)"}},
      false, "closure of g1=(8,2,6,1,5,θ)(3,7,θ)(9,4,θ) and g2=(1,8,θ)(7,2,θ)(5,4,10,3,9,θ)");
  FiniteSemigroup const& s = e.semigroup;
  require(s.order() == 127, "n2", "order 127");
  require(e.ideal_idempotents.size() == 10, "n2", "contains the 10x10 matrix units");
  for (auto const& [label, orbit] :
       std::vector<std::pair<std::string, std::string>>{
           {"x", "(4,1,θ)"},
           {"y", "(2,3,θ)"},
           {"w1", "(1,2,θ)(3,4,θ)(10,7,6,θ)"},
           {"w2", "(1,4,θ)(3,2,θ)(6,8,θ)(9,10,θ)"}}) {
    ElementId id = s.find(parse_orbits(orbit, 10));
    require(id != kNoElement, "n2", orbit + " is an element");
    e.labels[label] = id;
  }
  // Outside the ideal of rank <= 1 maps are exactly the listed elements.
  std::set<ElementId> top;
  for (ElementId x = 0; x < s.order(); ++x) {
    if (s.transformations()[x].rank() > 1) {
      top.insert(x);
    }
  }
  std::set<ElementId> listed;
  for (auto const& text : kN2Listing) {
    ElementId id = s.find(parse_orbits(text, 10));
    require(id != kNoElement, "n2", text + " is an element");
    listed.insert(id);
  }
  require(listed == top && top.size() == 26, "n2", "non-ideal part is the 26 listed elements");
  // Every principal factor other than that of the matrix units and the
  // kernel {θ̄} is null.
  auto ps = principal_series(s);
  std::size_t regular = 0;
  for (auto const& f : ps.factors) {
    if (f.kind != FactorKind::Null) {
      ++regular;
    }
  }
  require(regular == 2, "n2", "all other principal factors are null");
  return e;
}

ZooEntry build_n3() {
  ZooEntry e = transformation_entry(
      "n3", 4, {{"w", "(2,3,θ)(1,4,θ)"}, {"v", "(1,3,θ)(2,4,θ)"}, {"q", "(2,1,θ)(4,3,θ)"}},
      true, "closure of the 4x4 matrix units with w=(2,3,θ)(1,4,θ), v=(1,3,θ)(2,4,θ), q=(2,1,θ)(4,3,θ)");
  require(e.semigroup.order() == 20, "n3", "order 20");
  return e;
}

ZooEntry build_n4() {
  // Top elements (a,b) for a,b in {1,2}: ids 0..3. Mismatched products
  // (a,b)(c,d) with b != c are the null elements a5..a12 (ids 4..11), in
  // the order (1,1)(2,1), (1,1)(2,2), (1,2)(1,1), (1,2)(1,2), (2,1)(2,1),
  // (2,1)(2,2), (2,2)(1,1), (2,2)(1,2). θ is 12.
  using Pair = std::pair<int, int>;
  std::vector<Pair> top{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::vector<std::pair<Pair, Pair>> mismatched;
  for (Pair a : top) {
    for (Pair b : top) {
      if (a.second != b.first) {
        mismatched.emplace_back(a, b);
      }
    }
  }
  ElementId const theta = 12;
  auto top_id = [&](Pair p) {
    return static_cast<ElementId>((p.first - 1) * 2 + (p.second - 1));
  };
  auto word_of = [&](ElementId x) -> std::vector<Pair> {
    if (x < 4) {
      return {top[x]};
    }
    return {mismatched[x - 4].first, mismatched[x - 4].second};
  };
  // Merge adjacent matched pairs, leftmost first, then read off the element.
  auto reduce = [&](std::vector<Pair> w) -> ElementId {
    bool merged = true;
    while (merged) {
      merged = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].second == w[i + 1].first) {
          w[i] = {w[i].first, w[i + 1].second};
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          merged = true;
          break;
        }
      }
    }
    if (w.size() == 1) {
      return top_id(w[0]);
    }
    if (w.size() == 2) {
      for (std::size_t k = 0; k < mismatched.size(); ++k) {
        if (mismatched[k].first == w[0] && mismatched[k].second == w[1]) {
          return static_cast<ElementId>(4 + k);
        }
      }
    }
    return theta;
  };
  std::vector<ElementId> table(13 * 13, theta);
  for (ElementId x = 0; x < 12; ++x) {
    for (ElementId y = 0; y < 12; ++y) {
      auto w = word_of(x);
      auto v = word_of(y);
      w.insert(w.end(), v.begin(), v.end());
      table[x * 13 + y] = reduce(w);
    }
  }
  std::vector<std::string> names;
  for (Pair p : top) {
    names.push_back("(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")");
  }
  for (int k = 5; k <= 12; ++k) {
    names.push_back("a" + std::to_string(k));
  }
  names.push_back("θ");
  FiniteSemigroup s = FiniteSemigroup::from_table(13, std::move(table), theta,
                                                  std::nullopt, std::move(names));
  ZooEntry e{"n4", 0, s, {}, {}, "{a1..a12, θ}: matrix units over {1,2} on top, mismatched products a5..a12 null, completed by merging matched pairs"};
  for (int k = 1; k <= 12; ++k) {
    e.labels["a" + std::to_string(k)] = static_cast<ElementId>(k - 1);
  }
  // The eight displayed relations.
  for (std::size_t k = 0; k < mismatched.size(); ++k) {
    require(s.product(top_id(mismatched[k].first), top_id(mismatched[k].second)) == 4 + k,
            "n4", "displayed product " + std::to_string(k + 5));
  }
  for (ElementId x = 4; x <= theta; ++x) {
    for (ElementId y = 4; y <= theta; ++y) {
      require(s.product(x, y) == theta, "n4", "N is null");
    }
  }
  return e;
}

std::vector<Transformation> n2n_generators(int n, std::vector<std::string>& labels) {
  std::size_t big_n = std::size_t{1} << n;
  std::size_t degree = 6 * big_n;
  // Letter blocks a, a', b, b', c, d.
  enum Letter { A = 0, Ap, B, Bp, C, D };
  auto pt = [&](Letter l, std::size_t i) {
    return static_cast<Point>(static_cast<std::size_t>(l) * big_n + i);
  };
  auto make = [&](std::vector<std::pair<Point, Point>> const& arrows) {
    Transformation t(degree);
    for (auto [from, to] : arrows) {
      if (t[from] != Transformation::kTheta) {
        throw Error(ErrorKind::InvalidArgument, "n2n: point mapped twice");
      }
      t.set(from, to);
    }
    return t;
  };
  std::vector<Transformation> gens;
  std::vector<std::pair<Point, Point>> xs;
  std::vector<std::pair<Point, Point>> ys;
  for (std::size_t i = 1; i <= big_n; ++i) {
    xs.emplace_back(pt(C, i), pt(A, i));
    xs.emplace_back(pt(Bp, i), pt(D, i));
    ys.emplace_back(pt(Ap, i), pt(C, i));
    ys.emplace_back(pt(D, i), pt(B, i));
  }
  gens.push_back(make(xs));
  gens.push_back(make(ys));
  labels = {"x", "y"};
  std::size_t half = big_n / 2;
  std::vector<std::pair<Point, Point>> w1;
  for (std::size_t k = 1; k <= half; ++k) {
    w1.emplace_back(pt(B, half + k), pt(Ap, k));
    w1.emplace_back(pt(A, half + k), pt(Bp, k));
  }
  gens.push_back(make(w1));
  labels.push_back("w1");
  for (int i = 2; i <= n; ++i) {
    std::size_t lo = (std::size_t{1} << (n - i)) + 1;
    std::size_t hi = std::size_t{1} << (n - (i - 1));
    std::size_t offset = 0;
    for (int k = 1; k <= i - 1; ++k) {
      offset += std::size_t{1} << (n - k);
    }
    std::vector<std::pair<Point, Point>> w;
    for (std::size_t k = 0; lo + k <= hi; ++k) {
      if (i % 2 == 1) {
        w.emplace_back(pt(B, lo + k), pt(Ap, offset + 1 + k));
        w.emplace_back(pt(A, lo + k), pt(Bp, offset + 1 + k));
      } else {
        w.emplace_back(pt(B, lo + k), pt(Bp, offset + 1 + k));
        w.emplace_back(pt(A, lo + k), pt(Ap, offset + 1 + k));
      }
    }
    gens.push_back(make(w));
    labels.push_back("w" + std::to_string(i));
  }
  if (n % 2 == 1) {
    gens.push_back(make({{pt(A, 1), pt(Ap, big_n)}, {pt(B, 1), pt(Bp, big_n)}}));
    gens.push_back(make({{pt(A, 1), pt(Bp, big_n)}, {pt(B, 1), pt(Ap, big_n)}}));
  } else {
    gens.push_back(make({{pt(A, 1), pt(Bp, big_n)}, {pt(B, 1), pt(Ap, big_n)}}));
    gens.push_back(make({{pt(B, 1), pt(Bp, big_n)}, {pt(A, 1), pt(Ap, big_n)}}));
  }
  labels.push_back("w" + std::to_string(n + 1));
  labels.push_back("w" + std::to_string(n + 2));
  return gens;
}

ZooEntry build_n2n(int n) {
  std::vector<std::string> labels;
  std::vector<Transformation> gens = n2n_generators(n, labels);
  std::size_t degree = gens.front().degree();
  std::vector<std::pair<std::string, std::string>> named;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    named.emplace_back(labels[k], format_orbits(gens[k]));
  }
  ZooEntry e = transformation_entry(
      "n2n", degree, named, true,
      "closure of the matrix units on H_n (6*2^n points a,a',b,b',c,d) with x, y, w1..w(n+2)");
  e.parameter = n;
  for (auto const& [label, orbit] : named) {
    require(!in_square(e.semigroup, e[label]), "n2n", label + " is not a product");
  }
  return e;
}

ZooEntry build_sprime() {
  // a=1, a'=2, b=3, b'=4, c=5, d=6
  ZooEntry e = transformation_entry(
      "sprime", 6,
      {{"X", "(5,1,θ)(4,6,θ)"}, {"Y", "(2,5,θ)(6,3,θ)"}, {"W1", "(3,2,θ)(1,4,θ)"},
       {"W2", "(1,2,θ)(3,4,θ)"}},
      true,
      "closure of the matrix units on {a,a',b,b',c,d} = 1..6 with X=(c,a,θ)(b',d,θ), "
      "Y=(a',c,θ)(d,b,θ), W1=(b,a',θ)(a,b',θ), W2=(a,a',θ)(b,b',θ)");
  for (char const* label : {"X", "Y", "W1", "W2"}) {
    require(!in_square(e.semigroup, e[label]), "sprime", std::string(label) + " is not a product");
  }
  return e;
}

ZooEntry build_lz2() {
  FiniteSemigroup s = FiniteSemigroup::from_rows({{0, 0}, {1, 1}}, std::nullopt,
                                                 std::nullopt, {"a", "b"});
  return ZooEntry{"lz2", 0, s, {{"a", 0}, {"b", 1}}, {}, "left zero semigroup of order 2"};
}

ZooEntry build_rz2() {
  FiniteSemigroup s = FiniteSemigroup::from_rows({{0, 1}, {0, 1}}, std::nullopt,
                                                 std::nullopt, {"a", "b"});
  return ZooEntry{"rz2", 0, s, {{"a", 0}, {"b", 1}}, {}, "right zero semigroup of order 2"};
}

ZooEntry build_c2() {
  FiniteSemigroup s = cyclic_group(2);
  return ZooEntry{"c2", 0, s, {{"e", 0}, {"g", 1}}, {}, "cyclic group of order 2"};
}

ZooEntry build_s3() {
  ZooEntry e = transformation_entry("s3", 3, {{"r", "(1,2,3)"}, {"s", "(1,2)(3)"}}, false,
                                    "permutations of three points");
  require(e.semigroup.order() == 6, "s3", "order 6");
  return e;
}

ZooEntry build_c7c3() {
  // i -> i + 1 and i -> 2i on Z/7, points 1..7 standing for 0..6.
  ZooEntry e = transformation_entry("c7c3", 7,
                                    {{"a", "(1,2,3,4,5,6,7)"}, {"b", "(1)(2,3,5)(4,7,6)"}},
                                    false, "affine maps i -> i+1 and i -> 2i of Z/7");
  require(e.semigroup.order() == 21, "c7c3", "order 21");
  return e;
}

}  // namespace

#define MALCEV_CACHED(fn, build)       \
  ZooEntry const& fn() {               \
    static ZooEntry const entry = build(); \
    return entry;                      \
  }

MALCEV_CACHED(f7, build_f7)
MALCEV_CACHED(f12, build_f12)
MALCEV_CACHED(n1, build_n1)
MALCEV_CACHED(n2, build_n2)
MALCEV_CACHED(n3, build_n3)
MALCEV_CACHED(n4, build_n4)
MALCEV_CACHED(sprime, build_sprime)
MALCEV_CACHED(lz2, build_lz2)
MALCEV_CACHED(rz2, build_rz2)
MALCEV_CACHED(c2, build_c2)
MALCEV_CACHED(s3, build_s3)
MALCEV_CACHED(c7c3, build_c7c3)

#undef MALCEV_CACHED

ZooEntry const& n2n(int n, bool allow_large) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "n2n needs n >= 1");
  }
  if (n > 2 && !allow_large) {
    throw Error(ErrorKind::SizeBudgetExceeded,
                "n2n is capped at n = 2; raise the budget explicitly for larger n");
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ZooEntry>> entries;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = entries[n];
  if (!slot) {
    slot = std::make_unique<ZooEntry>(build_n2n(n));
  }
  return *slot;
}

FiniteSemigroup f12_from(std::string const& w1, std::string const& w2) {
  return build_f12_checked(w1, w2).semigroup;
}

std::vector<std::string> const& n2_top_listing() { return kN2Listing; }

std::vector<std::string> names() {
  return {"f7", "f12", "n1", "n2", "n3", "n4", "n2n", "sprime", "lz2", "rz2", "c2", "s3", "c7c3"};
}

ZooEntry const& by_name(std::string const& name, int parameter, bool allow_large) {
  if (name == "f7") return f7();
  if (name == "f12") return f12();
  if (name == "n1") return n1();
  if (name == "n2") return n2();
  if (name == "n3") return n3();
  if (name == "n4") return n4();
  if (name == "n2n") return n2n(parameter, allow_large);
  if (name == "sprime") return sprime();
  if (name == "lz2") return lz2();
  if (name == "rz2") return rz2();
  if (name == "c2") return c2();
  if (name == "s3") return s3();
  if (name == "c7c3") return c7c3();
  throw Error(ErrorKind::InvalidArgument, "unknown zoo member " + name);
}

std::pair<int, int> choose_pair(int n, std::vector<Color> const& coloring) {
  if (n < 1 || coloring.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorKind::InvalidArgument, "choose_pair needs n - 1 colours for n >= 1");
  }
  int boxes = 2 * n;
  auto color = [&](int box) {
    if (box == 1) return Color::Black;
    if (box % 2 == 0) return Color::White;
    return coloring[static_cast<std::size_t>((box - 3) / 2)];
  };
  for (int p = n; p >= 1; --p) {
    if (n % p != 0) {
      continue;
    }
    int length = boxes / p;
    for (int q = 1; q <= boxes; ++q) {
      bool alternates = true;
      for (int k = 0; k < length && alternates; ++k) {
        int here = (q - 1 + k * p) % boxes + 1;
        int next = (q - 1 + (k + 1) * p) % boxes + 1;
        alternates = color(here) != color(next);
      }
      if (alternates) {
        return {p, q};
      }
    }
  }
  throw Error(ErrorKind::NoPairFound, "no alternating progression for n = " + std::to_string(n));
}

}  // namespace malcev::zoo
