#include "malcev/action.hpp"

#include <algorithm>
#include <cctype>

#include "malcev/structure.hpp"

namespace malcev {

namespace {

constexpr char const* kThetaUtf8 = "θ";
constexpr char const* kThetaBarUtf8 = "θ̄";

}  // namespace

OrbitDecomposition orbits(Transformation const& t) {
  if (!t.is_partial_injective()) {
    throw Error(ErrorKind::NotPartialInjective, "transformation is not injective off θ");
  }
  std::size_t n = t.degree();
  OrbitDecomposition d;
  std::vector<char> has_preimage(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    has_preimage[t[j]] = 1;
  }
  std::vector<char> done(n + 1, 0);
  bool any = false;
  for (std::size_t j = 1; j <= n; ++j) {
    if (has_preimage[j]) {
      continue;
    }
    std::vector<Point> tail;
    for (Point p = static_cast<Point>(j); p != Transformation::kTheta; p = t[p]) {
      tail.push_back(p);
      done[p] = 1;
    }
    if (tail.size() > 1) {
      d.tails.push_back(std::move(tail));
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    if (done[j]) {
      continue;
    }
    // j lies on a cycle, and j is its smallest unvisited point.
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(j); !done[p]; p = t[p]) {
      cycle.push_back(p);
      done[p] = 1;
    }
    d.cycles.push_back(std::move(cycle));
    any = true;
  }
  d.is_theta_bar = d.tails.empty() && !any;
  return d;
}

std::string format_orbits(Transformation const& t, bool ascii) {
  OrbitDecomposition d = orbits(t);
  if (d.is_theta_bar) {
    return ascii ? "O" : kThetaBarUtf8;
  }
  struct Item {
    Point key;
    std::string text;
  };
  std::vector<Item> items;
  for (auto const& c : d.cycles) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      s += (i ? "," : "") + std::to_string(c[i]);
    }
    items.push_back({c.front(), s + ")"});
  }
  for (auto const& tail : d.tails) {
    std::string s = "(";
    for (Point p : tail) {
      s += std::to_string(p) + ",";
    }
    items.push_back({tail.back(), s + (ascii ? "0" : kThetaUtf8) + ")"});
  }
  std::sort(items.begin(), items.end(),
            [](Item const& a, Item const& b) { return a.key < b.key; });
  std::string out;
  for (auto const& item : items) {
    out += item.text;
  }
  return out;
}

Transformation parse_orbits(std::string_view text, std::size_t degree) {
  auto fail = [&](std::string const& why) {
    throw Error(ErrorKind::ParseError, "orbit \"" + std::string(text) + "\": " + why);
  };
  Transformation t(degree);
  std::vector<char> seen(degree + 1, 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  auto starts = [&](std::string_view token) {
    return text.substr(i, token.size()) == token;
  };
  skip_space();
  if (starts(kThetaBarUtf8) || starts("O")) {
    i += starts("O") ? 1 : std::string_view(kThetaBarUtf8).size();
    skip_space();
    if (i != text.size()) {
      fail("θ̄ must stand alone");
    }
    return t;
  }
  bool any = false;
  while (true) {
    skip_space();
    if (i == text.size()) {
      break;
    }
    if (text[i] != '(') {
      fail("expected '('");
    }
    ++i;
    std::vector<Point> points;
    bool tail = false;
    while (true) {
      skip_space();
      if (starts(kThetaUtf8) || starts("0")) {
        i += starts("0") ? 1 : std::string_view(kThetaUtf8).size();
        tail = true;
        skip_space();
        if (i >= text.size() || text[i] != ')') {
          fail("θ must end an orbit");
        }
        ++i;
        break;
      }
      std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) {
          fail("point exceeds degree " + std::to_string(degree));
        }
        ++i;
      }
      if (i == start) {
        fail("expected a point");
      }
      if (seen[value]) {
        fail("point " + std::to_string(value) + " appears twice");
      }
      seen[value] = 1;
      points.push_back(static_cast<Point>(value));
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (points.empty()) {
      fail("empty orbit");
    }
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
      t.set(points[k], points[k + 1]);
    }
    if (!tail) {
      t.set(points.back(), points.front());
    }
    any = true;
  }
  if (!any) {
    fail("no orbits");
  }
  return t;
}

GammaRepresentation gamma(FiniteSemigroup const& s, std::vector<ElementId> idem) {
  auto fail = [](std::string const& why) {
    throw Error(ErrorKind::IdealNotInverseForm, why);
  };
  if (idem.empty()) {
    fail("no idempotents given");
  }
  if (idem.size() > Transformation::kMaxDegree) {
    fail("too many L-classes");
  }
  GreenData const& g = green(s);
  std::uint32_t jc = g.j_class[idem.front()];
  auto zero = s.zero();
  if (!zero) {
    fail("semigroup has no zero");
  }
  for (ElementId e : idem) {
    if (!s.is_idempotent(e) || g.j_class[e] != jc) {
      fail("designated elements are not idempotents of one J-class");
    }
  }
  auto const& J = g.j_classes[jc];
  std::vector<bool> in_ideal(s.order(), false);
  for (ElementId x : J) {
    in_ideal[x] = true;
  }
  // J together with the zero must be an ideal.
  for (ElementId x : J) {
    for (ElementId y = 0; y < s.order(); ++y) {
      ElementId a = s.product(x, y);
      ElementId b = s.product(y, x);
      if ((!in_ideal[a] && a != *zero) || (!in_ideal[b] && b != *zero)) {
        fail("J-class of " + s.name(idem.front()) + " with zero is not an ideal");
      }
    }
  }
  std::size_t n = idem.size();
  std::vector<std::uint32_t> point_of_l(g.l_classes.size(), 0);
  std::vector<std::uint32_t> seen_r;
  for (std::size_t j = 0; j < n; ++j) {
    if (point_of_l[g.l_class[idem[j]]] != 0 ||
        std::find(seen_r.begin(), seen_r.end(), g.r_class[idem[j]]) != seen_r.end()) {
      fail("two designated idempotents share an R- or L-class");
    }
    point_of_l[g.l_class[idem[j]]] = static_cast<std::uint32_t>(j + 1);
    seen_r.push_back(g.r_class[idem[j]]);
  }
  std::size_t idem_in_j = 0;
  for (ElementId x : J) {
    idem_in_j += s.is_idempotent(x);
    if (point_of_l[g.l_class[x]] == 0 ||
        std::find(seen_r.begin(), seen_r.end(), g.r_class[x]) == seen_r.end()) {
      fail("designated idempotents do not cover every R- and L-class");
    }
  }
  if (idem_in_j != n) {
    fail("an R-class of the ideal holds more than one idempotent");
  }

  GammaRepresentation rep{s, n, idem, in_ideal, {}};
  // Representatives: the designated idempotents themselves lie in L_j.
  rep.map.reserve(s.order());
  for (ElementId x = 0; x < s.order(); ++x) {
    Transformation t(n);
    for (std::size_t j = 1; j <= n; ++j) {
      ElementId y = s.product(idem[j - 1], x);
      if (in_ideal[y]) {
        t.set(j, static_cast<Point>(point_of_l[g.l_class[y]]));
      }
    }
    if (!t.is_partial_injective()) {
      fail("action of " + s.name(x) + " is not injective off θ");
    }
    rep.map.push_back(std::move(t));
  }
  return rep;
}

GammaRepresentation gamma_of_class(FiniteSemigroup const& s, ElementId e) {
  GreenData const& g = green(s);
  std::vector<ElementId> idem;
  for (ElementId x : g.j_classes[g.j_class[e]]) {
    if (s.is_idempotent(x)) {
      idem.push_back(x);
    }
  }
  return gamma(s, std::move(idem));
}

EpsilonIota epsilon_iota(Transformation const& t) {
  EpsilonIota out;
  for (std::size_t j = 1; j <= t.degree(); ++j) {
    if (t[j] != Transformation::kTheta) {
      out.epsilon1.insert(static_cast<Point>(j));
      out.epsilon2.insert(t[j]);
    }
  }
  out.iota1 = out.epsilon1.size();
  out.iota2 = out.epsilon2.size();
  return out;
}

EpsilonIota epsilon_iota(GammaRepresentation const& rep, ElementId w) {
  return epsilon_iota(rep.map.at(w));
}

FiniteSemigroup glue(ReesMatrixSpec const& m, FiniteSemigroup const& t,
                     std::vector<Transformation> const& delta) {
  std::size_t n = m.n;
  if (m.group.order() != 1 || m.m != n || !m.with_zero) {
    throw Error(ErrorKind::InvalidArgument, "ideal must be M0({1}, n, n; I_n)");
  }
  for (std::size_t lam = 0; lam < n; ++lam) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m.sandwich[lam * n + i].has_value() != (lam == i)) {
        throw Error(ErrorKind::InvalidArgument, "sandwich matrix must be the identity");
      }
    }
  }
  auto tz = t.zero();
  if (!tz) {
    throw Error(ErrorKind::InvalidArgument, "T must have a zero");
  }
  if (delta.size() != t.order()) {
    throw Error(ErrorKind::InvalidArgument, "one transformation per element of T");
  }
  for (ElementId x = 0; x < t.order(); ++x) {
    if (delta[x].degree() != n) {
      throw Error(ErrorKind::DegreeMismatch, "Δ must act on n points");
    }
    if (!delta[x].is_partial_injective()) {
      throw Error(ErrorKind::DeltaNotPartialInjective,
                  "Δ(" + t.name(x) + ") is not injective off θ");
    }
    bool theta_bar = delta[x] == Transformation(n);
    if (theta_bar != (x == *tz)) {
      throw Error(ErrorKind::ThetaPreimageWrong,
                  "Δ(" + t.name(x) + ") must be θ̄ exactly when it is the zero");
    }
  }
  for (ElementId x = 0; x < t.order(); ++x) {
    for (ElementId y = 0; y < t.order(); ++y) {
      if (delta[t.product(x, y)] != delta[x].then(delta[y])) {
        throw Error(ErrorKind::DeltaNotHomomorphism,
                    "Δ(" + t.name(x) + t.name(y) + ") differs from Δ(" + t.name(x) +
                        ")Δ(" + t.name(y) + ")");
      }
    }
  }

  FiniteSemigroup mm = from_rees(m);
  ElementId theta = static_cast<ElementId>(n * n);
  std::vector<ElementId> t_id(t.order(), theta);
  std::vector<ElementId> t_of;
  ElementId next = theta + 1;
  for (ElementId x = 0; x < t.order(); ++x) {
    if (x != *tz) {
      t_id[x] = next++;
      t_of.push_back(x);
    }
  }
  std::size_t size = next;
  auto unit = [&](std::size_t i, std::size_t j) {
    return static_cast<ElementId>(i * n + j);
  };
  std::vector<ElementId> table(size * size, theta);
  for (ElementId a = 0; a < size; ++a) {
    for (ElementId b = 0; b < size; ++b) {
      ElementId& out = table[a * size + b];
      bool am = a <= theta;
      bool bm = b <= theta;
      if (a == theta || b == theta) {
        out = theta;
      } else if (am && bm) {
        out = mm.product(a, b);
      } else if (am) {
        // (1;i,j) t = (1;i,Δ(t)(j))
        Point img = delta[t_of[b - theta - 1]][a % n + 1];
        out = img == Transformation::kTheta ? theta : unit(a / n, img - 1);
      } else if (bm) {
        // t (1;i,j) = (1;i',j) where Δ(t)(i') = i
        Transformation const& d = delta[t_of[a - theta - 1]];
        out = theta;
        for (std::size_t k = 1; k <= n; ++k) {
          if (d[k] == b / n + 1) {
            out = unit(k - 1, b % n);
          }
        }
      } else {
        out = t_id[t.product(t_of[a - theta - 1], t_of[b - theta - 1])];
      }
    }
  }
  std::vector<std::string> names = mm.names();
  for (ElementId x : t_of) {
    names.push_back(t.name(x));
  }
  return FiniteSemigroup::from_table(size, std::move(table), theta, std::nullopt,
                                     std::move(names));
}

}  // namespace malcev
