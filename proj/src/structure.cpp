#include "malcev/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "graph.hpp"
#include "malcev/division.hpp"

namespace malcev {

namespace {

struct RightGraph {
  FiniteSemigroup const& s;
  std::size_t degree(std::uint32_t) const { return s.order(); }
  std::uint32_t successor(std::uint32_t v, std::size_t k) const {
    return s.product(v, static_cast<ElementId>(k));
  }
};

struct LeftGraph {
  FiniteSemigroup const& s;
  std::size_t degree(std::uint32_t) const { return s.order(); }
  std::uint32_t successor(std::uint32_t v, std::size_t k) const {
    return s.product(static_cast<ElementId>(k), v);
  }
};

struct TwoSidedGraph {
  FiniteSemigroup const& s;
  std::size_t degree(std::uint32_t) const { return 2 * s.order(); }
  std::uint32_t successor(std::uint32_t v, std::size_t k) const {
    std::size_t n = s.order();
    return k < n ? s.product(v, static_cast<ElementId>(k))
                 : s.product(static_cast<ElementId>(k - n), v);
  }
};

std::vector<std::uint32_t> all_nodes(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

// Renumbers components by least element; returns old -> new.
std::vector<std::uint32_t> renumber(detail::SccResult const& scc, std::size_t n,
                                    std::vector<std::uint32_t>& cls,
                                    std::vector<std::vector<ElementId>>& classes) {
  std::vector<std::uint32_t> remap(scc.count, detail::kUnvisited);
  std::uint32_t next = 0;
  classes.clear();
  cls.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t c = scc.component[x];
    if (remap[c] == detail::kUnvisited) {
      remap[c] = next++;
      classes.emplace_back();
    }
    cls[x] = remap[c];
    classes[remap[c]].push_back(static_cast<ElementId>(x));
  }
  return remap;
}

std::shared_ptr<GreenData const> compute_green(FiniteSemigroup const& s) {
  auto g = std::make_shared<GreenData>();
  std::size_t n = s.order();
  auto nodes = all_nodes(n);

  auto r = detail::tarjan(RightGraph{s}, n, nodes);
  renumber(r, n, g->r_class, g->r_classes);
  auto l = detail::tarjan(LeftGraph{s}, n, nodes);
  renumber(l, n, g->l_class, g->l_classes);
  auto j = detail::tarjan(TwoSidedGraph{s}, n, nodes);
  auto remap = renumber(j, n, g->j_class, g->j_classes);

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> h_index;
  g->h_class.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    auto key = std::make_pair(g->r_class[x], g->l_class[x]);
    auto [it, inserted] =
        h_index.emplace(key, static_cast<std::uint32_t>(g->h_classes.size()));
    if (inserted) {
      g->h_classes.emplace_back();
    }
    g->h_class[x] = it->second;
    g->h_classes[it->second].push_back(static_cast<ElementId>(x));
  }

  // Reachability over the condensation, in Tarjan completion order so that
  // successors are finished first.
  std::size_t k = j.count;
  std::size_t words = (k + 63) / 64;
  std::vector<std::uint64_t> reach(k * words, 0);
  std::vector<std::vector<ElementId>> members(k);
  for (std::size_t x = 0; x < n; ++x) {
    members[j.component[x]].push_back(static_cast<ElementId>(x));
  }
  std::vector<std::uint32_t> mark(k, detail::kUnvisited);
  for (std::uint32_t c = 0; c < k; ++c) {
    reach[c * words + c / 64] |= std::uint64_t{1} << (c % 64);
    for (ElementId x : members[c]) {
      for (std::size_t t = 0; t < 2 * n; ++t) {
        std::uint32_t d = j.component[TwoSidedGraph{s}.successor(x, t)];
        if (d == c || mark[d] == c) {
          continue;
        }
        mark[d] = c;
        for (std::size_t w = 0; w < words; ++w) {
          reach[c * words + w] |= reach[d * words + w];
        }
      }
    }
  }
  g->j_words = words;
  g->j_leq_bits.assign(k * words, 0);
  // reach[c] holds the classes below c; j_leq[a][b] iff a is below b.
  for (std::uint32_t c = 0; c < k; ++c) {
    for (std::uint32_t d = 0; d < k; ++d) {
      if ((reach[c * words + d / 64] >> (d % 64)) & 1u) {
        std::uint32_t a = remap[d];
        std::uint32_t b = remap[c];
        g->j_leq_bits[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }
  return g;
}

}  // namespace

GreenData const& green(FiniteSemigroup const& s) { return s.green(compute_green); }

std::vector<ElementId> idempotents(FiniteSemigroup const& s) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < s.order(); ++x) {
    if (s.is_idempotent(x)) {
      out.push_back(x);
    }
  }
  return out;
}

char const* to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::CompletelySimple: return "completely-simple";
    case FactorKind::CompletelyZeroSimple: return "completely-0-simple";
    case FactorKind::Null: return "null";
  }
  return "?";
}

ReesCoordinates rees_coordinates(FiniteSemigroup const& s, std::uint32_t jc) {
  GreenData const& g = green(s);
  auto const& J = g.j_classes.at(jc);
  std::vector<ElementId> idem;
  for (ElementId x : J) {
    if (s.is_idempotent(x)) {
      idem.push_back(x);
    }
  }
  if (idem.empty()) {
    throw Error(ErrorKind::NotSimpleFactor,
                "J-class of " + s.name(J.front()) + " contains no idempotent");
  }
  ElementId e = idem.front();

  std::vector<std::uint32_t> rs;
  std::vector<std::uint32_t> ls;
  for (ElementId x : J) {
    rs.push_back(g.r_class[x]);
    ls.push_back(g.l_class[x]);
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::stable_partition(rs.begin(), rs.end(),
                        [&](std::uint32_t r) { return r == g.r_class[e]; });
  std::stable_partition(ls.begin(), ls.end(),
                        [&](std::uint32_t l) { return l == g.l_class[e]; });

  // When each R- and L-class holds exactly one idempotent, L_i is taken to
  // be the L-class of the idempotent of R_i so the sandwich matrix is the
  // identity.
  std::map<std::uint32_t, std::vector<ElementId>> idem_of_r;
  std::map<std::uint32_t, std::vector<ElementId>> idem_of_l;
  for (ElementId f : idem) {
    idem_of_r[g.r_class[f]].push_back(f);
    idem_of_l[g.l_class[f]].push_back(f);
  }
  bool inverse_form = rs.size() == ls.size() && idem_of_r.size() == rs.size() &&
                      idem_of_l.size() == ls.size();
  for (auto const& [r, fs] : idem_of_r) {
    inverse_form = inverse_form && fs.size() == 1;
  }
  for (auto const& [l, fs] : idem_of_l) {
    inverse_form = inverse_form && fs.size() == 1;
  }
  if (inverse_form) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      ls[i] = g.l_class[idem_of_r[rs[i]].front()];
    }
  }

  std::vector<ElementId> group = g.h_classes[g.h_class[e]];
  std::vector<ElementId> group_index(s.order(), kNoElement);
  for (std::size_t k = 0; k < group.size(); ++k) {
    group_index[group[k]] = static_cast<ElementId>(k);
  }

  auto in_h = [&](ElementId x, std::uint32_t r, std::uint32_t l) {
    return g.r_class[x] == r && g.l_class[x] == l;
  };
  std::vector<ElementId> a(rs.size(), kNoElement);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i == 0) {
      a[i] = e;
      continue;
    }
    for (ElementId x : J) {
      if (in_h(x, rs[i], g.l_class[e])) {
        a[i] = x;
        break;
      }
    }
  }
  std::vector<ElementId> b(ls.size(), kNoElement);
  for (std::size_t lam = 0; lam < ls.size(); ++lam) {
    if (lam == 0) {
      b[lam] = e;
      continue;
    }
    for (ElementId x : J) {
      if (!in_h(x, g.r_class[e], ls[lam])) {
        continue;
      }
      if (b[lam] == kNoElement) {
        b[lam] = x;
      }
      if (inverse_form && s.product(x, a[lam]) == e) {
        b[lam] = x;
        break;
      }
    }
  }
  for (ElementId x : a) {
    if (x == kNoElement) {
      throw Error(ErrorKind::NotSimpleFactor, "J-class is not a single D-class");
    }
  }
  for (ElementId x : b) {
    if (x == kNoElement) {
      throw Error(ErrorKind::NotSimpleFactor, "J-class is not a single D-class");
    }
  }

  FiniteSemigroup grp = restrict_to(s, group).semigroup;
  ReesCoordinates rc{ReesMatrixSpec{grp, rs.size(), ls.size(), {}, false}, group, {}};
  rc.spec.sandwich.resize(ls.size() * rs.size());
  for (std::size_t lam = 0; lam < ls.size(); ++lam) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      ElementId p = s.product(b[lam], a[i]);
      if (group_index[p] != kNoElement) {
        rc.spec.sandwich[lam * rs.size() + i] = group_index[p];
      } else {
        rc.spec.sandwich[lam * rs.size() + i] = std::nullopt;
        rc.spec.with_zero = true;
      }
    }
  }
  rc.element.assign(rs.size() * ls.size() * group.size(), kNoElement);
  std::vector<char> hit(s.order(), 0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t lam = 0; lam < ls.size(); ++lam) {
      for (std::size_t k = 0; k < group.size(); ++k) {
        ElementId x = s.product(s.product(a[i], group[k]), b[lam]);
        if (g.j_class[x] != jc || hit[x]) {
          throw Error(ErrorKind::NotSimpleFactor, "coordinates are not a bijection");
        }
        hit[x] = 1;
        rc.element[rees_element(rc.spec, i, static_cast<ElementId>(k), lam)] = x;
      }
    }
  }
  return rc;
}

FiniteSemigroup principal_factor(FiniteSemigroup const& s, std::uint32_t jc) {
  GreenData const& g = green(s);
  auto const& J = g.j_classes.at(jc);
  std::vector<ElementId> local(s.order(), kNoElement);
  for (std::size_t i = 0; i < J.size(); ++i) {
    local[J[i]] = static_cast<ElementId>(i);
  }
  bool closed = true;
  for (ElementId x : J) {
    for (ElementId y : J) {
      closed = closed && local[s.product(x, y)] != kNoElement;
    }
  }
  std::size_t k = J.size() + (closed ? 0 : 1);
  ElementId zero = static_cast<ElementId>(J.size());
  std::vector<ElementId> table(k * k, zero);
  for (std::size_t i = 0; i < J.size(); ++i) {
    for (std::size_t j = 0; j < J.size(); ++j) {
      ElementId p = local[s.product(J[i], J[j])];
      table[i * k + j] = p == kNoElement ? zero : p;
    }
  }
  std::vector<std::string> names;
  for (ElementId x : J) {
    names.push_back(s.name(x));
  }
  if (!closed) {
    std::string z = "θ";
    while (std::find(names.begin(), names.end(), z) != names.end()) {
      z += "'";
    }
    names.push_back(z);
  }
  return FiniteSemigroup::trusted(k, std::move(table), std::move(names));
}

PrincipalSeries principal_series(FiniteSemigroup const& s) {
  GreenData const& g = green(s);
  std::size_t k = g.j_classes.size();
  // above[c] counts remaining classes strictly above c.
  std::vector<std::size_t> above(k, 0);
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      if (a != b && g.j_leq(a, b)) {
        ++above[a];
      }
    }
  }
  std::vector<char> removed(k, 0);
  std::vector<char> in_ideal(s.order(), 1);
  PrincipalSeries ps;
  for (std::size_t step = 0; step < k; ++step) {
    std::uint32_t pick = 0;
    while (removed[pick] || above[pick] != 0) {
      ++pick;
    }
    std::vector<ElementId> ideal;
    for (ElementId x = 0; x < s.order(); ++x) {
      if (in_ideal[x]) {
        ideal.push_back(x);
      }
    }
    ps.ideals.push_back(std::move(ideal));

    FactorInfo f;
    f.j_class = pick;
    f.elements = g.j_classes[pick];
    bool has_idempotent = std::any_of(f.elements.begin(), f.elements.end(),
                                      [&](ElementId x) { return s.is_idempotent(x); });
    if (!has_idempotent) {
      f.kind = FactorKind::Null;
    } else {
      f.rees = rees_coordinates(s, pick);
      f.kind = f.rees->spec.with_zero ? FactorKind::CompletelyZeroSimple
                                      : FactorKind::CompletelySimple;
    }
    ps.factors.push_back(std::move(f));

    removed[pick] = 1;
    for (ElementId x : g.j_classes[pick]) {
      in_ideal[x] = 0;
    }
    for (std::uint32_t a = 0; a < k; ++a) {
      if (!removed[a] && g.j_leq(a, pick)) {
        --above[a];
      }
    }
  }
  return ps;
}

bool is_regular(FiniteSemigroup const& s) {
  for (ElementId x = 0; x < s.order(); ++x) {
    bool ok = false;
    for (ElementId y = 0; y < s.order() && !ok; ++y) {
      ok = s.product(s.product(x, y), x) == x;
    }
    if (!ok) {
      return false;
    }
  }
  return true;
}

namespace {

std::size_t inverse_count(FiniteSemigroup const& s, ElementId x, std::size_t stop) {
  std::size_t count = 0;
  for (ElementId y = 0; y < s.order() && count < stop; ++y) {
    if (s.product(s.product(x, y), x) == x && s.product(s.product(y, x), y) == y) {
      ++count;
    }
  }
  return count;
}

}  // namespace

bool is_inverse(FiniteSemigroup const& s) {
  for (ElementId x = 0; x < s.order(); ++x) {
    if (inverse_count(s, x, 2) != 1) {
      return false;
    }
  }
  return true;
}

bool is_block_group(FiniteSemigroup const& s) {
  for (ElementId x = 0; x < s.order(); ++x) {
    if (inverse_count(s, x, 2) > 1) {
      return false;
    }
  }
  return true;
}

bool idempotents_commute(FiniteSemigroup const& s) {
  auto es = idempotents(s);
  for (ElementId e : es) {
    for (ElementId f : es) {
      if (s.product(e, f) != s.product(f, e)) {
        return false;
      }
    }
  }
  return true;
}

bool is_aperiodic(FiniteSemigroup const& s) {
  for (ElementId x = 0; x < s.order(); ++x) {
    if (s.period_of(x) != 1) {
      return false;
    }
  }
  return true;
}

bool is_group(FiniteSemigroup const& s) {
  auto e = s.identity();
  if (!e) {
    return false;
  }
  for (ElementId x = 0; x < s.order(); ++x) {
    bool found = false;
    for (ElementId y = 0; y < s.order() && !found; ++y) {
      found = s.product(x, y) == *e;
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

FiniteSemigroup maximal_subgroup(FiniteSemigroup const& s, ElementId e) {
  if (!s.is_idempotent(e)) {
    throw Error(ErrorKind::InvalidArgument, s.name(e) + " is not idempotent");
  }
  GreenData const& g = green(s);
  return restrict_to(s, g.h_classes[g.h_class[e]]).semigroup;
}

std::vector<FiniteSemigroup> maximal_subgroups(FiniteSemigroup const& s) {
  std::vector<FiniteSemigroup> out;
  for (ElementId e : idempotents(s)) {
    FiniteSemigroup h = maximal_subgroup(s, e);
    bool seen = false;
    for (auto const& other : out) {
      if (other.order() == h.order() && are_isomorphic(other, h)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      out.push_back(std::move(h));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
    return x.order() < y.order();
  });
  return out;
}

bool is_nilpotent_group(FiniteSemigroup const& grp) {
  if (!is_group(grp)) {
    throw Error(ErrorKind::NotAGroup, "not a group");
  }
  std::size_t n = grp.order();
  ElementId e = *grp.identity();
  std::vector<ElementId> inv(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (grp.product(x, y) == e) {
        inv[x] = y;
        break;
      }
    }
  }
  std::vector<ElementId> term(n);
  std::iota(term.begin(), term.end(), 0u);
  while (term.size() > 1) {
    std::vector<ElementId> commutators;
    std::vector<char> seen(n, 0);
    for (ElementId a : term) {
      for (ElementId b = 0; b < n; ++b) {
        ElementId c = grp.product(grp.product(inv[a], inv[b]), grp.product(a, b));
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    }
    std::vector<ElementId> next = closure_within(grp, commutators);
    if (next.size() == term.size()) {
      return false;
    }
    term = std::move(next);
  }
  return true;
}

bool is_bg_nil(FiniteSemigroup const& s) {
  if (!is_block_group(s)) {
    return false;
  }
  for (auto const& h : maximal_subgroups(s)) {
    if (!is_nilpotent_group(h)) {
      return false;
    }
  }
  return true;
}

}  // namespace malcev
