#include "malcev/deciders.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "graph.hpp"
#include "malcev/error.hpp"
#include "malcev/kernels.hpp"
#include "malcev/structure.hpp"

namespace malcev {

PairState lambda_rho(FiniteSemigroup const& s, PairState start,
                     std::span<ElementId const> multipliers) {
  for (ElementId z : multipliers) {
    start = pair_step(s, start, z);
  }
  return start;
}

// ---------------------------------------------------------------------------
// Pair graph

PairGraph::PairGraph(FiniteSemigroup const& s) : s_(&s), n_(s.order()) {}

namespace {

struct NonDiagonalView {
  PairGraph const& g;
  std::size_t n;

  std::size_t degree(std::uint32_t) const { return n + 1; }
  std::uint32_t successor(std::uint32_t v, std::size_t k) const {
    std::uint32_t w = g.successor(v, g.multiplier(k));
    return g.state(w).diagonal() ? detail::kUnvisited : w;
  }
};

std::vector<ElementId> walk_back(std::vector<std::uint32_t> const& parent,
                                 std::vector<ElementId> const& label, std::uint32_t from,
                                 std::uint32_t v) {
  std::vector<ElementId> word;
  while (v != from) {
    word.push_back(label[v]);
    v = parent[v];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

PairGraph::Components PairGraph::components(std::span<std::uint32_t const> starts) const {
  NonDiagonalView view{*this, n_};
  auto res = detail::tarjan(view, num_nodes(), starts);
  Components c;
  c.component = std::move(res.component);
  c.cyclic = std::move(res.cyclic);
  c.count = res.count;
  return c;
}

std::vector<ElementId> PairGraph::cycle_through(Components const& c, std::uint32_t v) const {
  std::uint32_t comp = c.component[v];
  std::vector<std::uint32_t> parent(num_nodes(), detail::kUnvisited);
  std::vector<ElementId> label(num_nodes(), kNoElement);
  std::vector<std::uint32_t> queue{v};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    for (std::size_t k = 0; k <= n_; ++k) {
      ElementId z = multiplier(k);
      std::uint32_t w = successor(u, z);
      if (w == v) {
        auto word = walk_back(parent, label, v, u);
        word.push_back(z);
        return word;
      }
      if (c.component[w] == comp && parent[w] == detail::kUnvisited) {
        parent[w] = u;
        label[w] = z;
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::vector<ElementId> PairGraph::path_to_cycle(Components const& c, std::uint32_t from,
                                                std::uint32_t& to) const {
  auto in_cycle = [&](std::uint32_t v) {
    return c.component[v] != detail::kUnvisited && c.cyclic[c.component[v]];
  };
  if (in_cycle(from)) {
    to = from;
    return {};
  }
  std::vector<std::uint32_t> parent(num_nodes(), detail::kUnvisited);
  std::vector<ElementId> label(num_nodes(), kNoElement);
  parent[from] = from;
  std::vector<std::uint32_t> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    for (std::size_t k = 0; k <= n_; ++k) {
      ElementId z = multiplier(k);
      std::uint32_t w = successor(u, z);
      if (state(w).diagonal() || parent[w] != detail::kUnvisited) {
        continue;
      }
      parent[w] = u;
      label[w] = z;
      if (in_cycle(w)) {
        to = w;
        return walk_back(parent, label, from, w);
      }
      queue.push_back(w);
    }
  }
  to = detail::kUnvisited;
  return {};
}

// ---------------------------------------------------------------------------
// Properties

namespace {

struct PropertyName {
  Property p;
  char const* name;
};

constexpr PropertyName kPropertyNames[] = {
    {Property::MN, "mn"},
    {Property::WMN, "wmn"},
    {Property::NT, "nt"},
    {Property::PE, "pe"},
    {Property::TM, "tm"},
    {Property::EUNNG, "eunng"},
    {Property::BG, "bg"},
    {Property::BGNil, "bgnil"},
    {Property::NDF12, "ndf12"},
    {Property::Aperiodic, "aperiodic"},
    {Property::Inverse, "inverse"},
    {Property::IdempotentsCommute, "idem-commute"},
};

}  // namespace

char const* to_string(Property p) {
  for (auto const& e : kPropertyNames) {
    if (e.p == p) {
      return e.name;
    }
  }
  return "?";
}

Property parse_property(std::string const& name) {
  std::string lower;
  for (char ch : name) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (auto const& e : kPropertyNames) {
    if (lower == e.name) {
      return e.p;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown property: " + name);
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (auto const& e : kPropertyNames) {
    out.push_back(e.p);
  }
  return out;
}

namespace {

Verdict fail(Property p, std::string kind, std::vector<ElementId> elements,
             std::vector<ElementId> prefix = {}, std::vector<ElementId> cycle = {}) {
  Verdict v;
  v.holds = false;
  v.witness = Witness{p, std::move(kind), std::move(elements), std::move(prefix),
                      std::move(cycle)};
  return v;
}

std::vector<std::uint32_t> off_diagonal_nodes(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x != y) {
        out.push_back(static_cast<std::uint32_t>(x * n + y));
      }
    }
  }
  return out;
}

std::optional<std::uint32_t> first_cyclic(PairGraph::Components const& c, std::size_t nodes) {
  for (std::uint32_t v = 0; v < nodes; ++v) {
    if (c.component[v] != detail::kUnvisited && c.cyclic[c.component[v]]) {
      return v;
    }
  }
  return std::nullopt;
}

// Functional graph on pairs given by a successor array. Returns a node on
// a non-diagonal cycle reachable from one of the starts, if any. Diagonal
// nodes end a walk.
class FunctionalCycleFinder {
 public:
  explicit FunctionalCycleFinder(std::size_t n) : n_(n), mark_(n * n, 0) {}

  template <typename Next>
  std::optional<std::uint32_t> find(std::span<std::uint32_t const> starts, Next const& next) {
    std::uint64_t base = walk_;
    for (std::uint32_t v : starts) {
      ++walk_;
      std::uint32_t u = v;
      while (true) {
        if (u / n_ == u % n_) {
          break;
        }
        std::uint64_t m = mark_[u];
        if (m > base) {
          if (m == walk_) {
            return u;
          }
          break;
        }
        mark_[u] = walk_;
        u = next(u);
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t walk_ = 0;
};

}  // namespace

Verdict check_mn(FiniteSemigroup const& s) {
  PairGraph g(s);
  auto starts = off_diagonal_nodes(s.order());
  auto comps = g.components(starts);
  auto v = first_cyclic(comps, g.num_nodes());
  if (!v) {
    return {};
  }
  auto st = g.state(*v);
  return fail(Property::MN, "fixed pair", {st.left, st.right}, {}, g.cycle_through(comps, *v));
}

std::optional<std::size_t> nilpotency_class(FiniteSemigroup const& s) {
  PairGraph g(s);
  std::size_t n = s.order();
  auto starts = off_diagonal_nodes(n);
  auto comps = g.components(starts);
  if (first_cyclic(comps, g.num_nodes())) {
    return std::nullopt;
  }
  // Acyclic: every component is a single node, numbered after its
  // successors.
  std::vector<std::uint32_t> order(comps.count);
  for (std::uint32_t v : starts) {
    order[comps.component[v]] = v;
  }
  std::vector<std::size_t> depth(g.num_nodes(), 0);
  std::size_t best = 1;
  for (std::uint32_t v : order) {
    std::size_t d = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint32_t w = g.successor(v, g.multiplier(k));
      if (!g.state(w).diagonal()) {
        d = std::max(d, depth[w]);
      }
    }
    depth[v] = d + 1;
    best = std::max(best, depth[v]);
  }
  return best;
}

bool is_mn(FiniteSemigroup const& s) { return check_mn(s).holds; }

Verdict check_nt(FiniteSemigroup const& s) {
  PairGraph g(s);
  std::size_t n = s.order();
  std::vector<std::uint32_t> starts;
  std::vector<char> seen(g.num_nodes(), 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      PairState p = pair_step(s, {a, b}, kUnit);
      std::uint32_t v = g.node(p);
      if (!p.diagonal() && !seen[v]) {
        seen[v] = 1;
        starts.push_back(v);
      }
    }
  }
  auto comps = g.components(starts);
  if (!first_cyclic(comps, g.num_nodes())) {
    return {};
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      PairState p = pair_step(s, {a, b}, kUnit);
      if (p.diagonal()) {
        continue;
      }
      std::uint32_t to = 0;
      auto path = g.path_to_cycle(comps, g.node(p), to);
      if (to == detail::kUnvisited) {
        continue;
      }
      std::vector<ElementId> prefix{kUnit};
      prefix.insert(prefix.end(), path.begin(), path.end());
      return fail(Property::NT, "recurrent pair", {a, b}, std::move(prefix),
                  g.cycle_through(comps, to));
    }
  }
  return {};
}

bool is_nt(FiniteSemigroup const& s) { return check_nt(s).holds; }

Verdict check_tm(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  FunctionalCycleFinder finder(n);
  std::vector<std::uint32_t> starts(n * n);
  for (std::uint32_t v = 0; v < n * n; ++v) {
    starts[v] = v;
  }
  auto table = s.table();
  auto hit = finder.find(starts, [&](std::uint32_t v) {
    std::uint32_t x = v / n;
    std::uint32_t y = v % n;
    return static_cast<std::uint32_t>(table[x * n + y] * n + table[y * n + x]);
  });
  if (!hit) {
    return {};
  }
  return fail(Property::TM, "recurrent pair",
              {static_cast<ElementId>(*hit / n), static_cast<ElementId>(*hit % n)});
}

bool is_tm(FiniteSemigroup const& s) { return check_tm(s).holds; }

Verdict check_wmn(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  auto const& k = kernels::active();
  auto table = s.table();
  FunctionalCycleFinder finder(n);
  std::vector<std::uint32_t> starts(n * n);
  for (std::uint32_t v = 0; v < n * n; ++v) {
    starts[v] = v;
  }
  std::vector<std::uint32_t> succ(n * n);
  std::vector<ElementId> lam1(n), rho1(n), tmp(n), lam2(n), rho2(n);
  for (std::size_t i1 = 0; i1 <= n; ++i1) {
    ElementId c1 = i1 < n ? static_cast<ElementId>(i1) : kUnit;
    for (std::size_t i2 = 0; i2 <= n; ++i2) {
      ElementId c2 = i2 < n ? static_cast<ElementId>(i2) : kUnit;
      for (ElementId x = 0; x < n; ++x) {
        // λ1[y] = x c1 y, ρ1[y] = y c1 x
        auto lrow = s.row(times(s, x, c1));
        std::copy(lrow.begin(), lrow.end(), lam1.begin());
        auto colx = s.column(x);
        if (c1 == kUnit) {
          std::copy(colx.begin(), colx.end(), rho1.begin());
        } else {
          k.gather(colx.data(), s.column(c1).data(), rho1.data(), n);
        }
        // λ2 = λ1 c2 ρ1, ρ2 = ρ1 c2 λ1
        if (c2 == kUnit) {
          k.table_product(table.data(), n, lam1.data(), rho1.data(), lam2.data(), n);
          k.table_product(table.data(), n, rho1.data(), lam1.data(), rho2.data(), n);
        } else {
          auto colc = s.column(c2);
          k.gather(colc.data(), lam1.data(), tmp.data(), n);
          k.table_product(table.data(), n, tmp.data(), rho1.data(), lam2.data(), n);
          k.gather(colc.data(), rho1.data(), tmp.data(), n);
          k.table_product(table.data(), n, tmp.data(), lam1.data(), rho2.data(), n);
        }
        std::uint32_t* out = succ.data() + x * n;
        for (std::size_t y = 0; y < n; ++y) {
          out[y] = static_cast<std::uint32_t>(lam2[y] * n + rho2[y]);
        }
      }
      auto hit = finder.find(starts, [&](std::uint32_t v) { return succ[v]; });
      if (hit) {
        return fail(Property::WMN, "recurrent alternating pair",
                    {static_cast<ElementId>(*hit / n), static_cast<ElementId>(*hit % n), c1,
                     c2});
      }
    }
  }
  return {};
}

bool is_wmn(FiniteSemigroup const& s) { return check_wmn(s).holds; }

// ---------------------------------------------------------------------------
// Limit pairs

namespace {

// Distinct powers c, c^2, ... of c as a cycle of positions.
struct PowerCycle {
  std::vector<ElementId> powers;
  std::vector<std::uint32_t> next;
};

PowerCycle power_cycle(FiniteSemigroup const& s, ElementId c) {
  PowerCycle pc;
  if (c == kUnit) {
    pc.powers = {kUnit};
    pc.next = {0};
    return pc;
  }
  std::uint32_t index = s.index_of(c);
  std::uint32_t period = s.period_of(c);
  std::size_t len = index + period - 1;
  ElementId x = c;
  for (std::size_t i = 0; i < len; ++i) {
    pc.powers.push_back(x);
    pc.next.push_back(static_cast<std::uint32_t>(i + 1 < len ? i + 1 : index - 1));
    x = s.product(x, c);
  }
  return pc;
}

// Runs a deterministic trajectory over states (pair, phase) with a
// reusable visit table. phase indexes the multiplier sequence, which is
// itself periodic.
class TrajectorySimulator {
 public:
  TrajectorySimulator(FiniteSemigroup const& s, std::vector<ElementId> multipliers,
                      std::vector<std::uint32_t> next_phase)
      : s_(s),
        n_(s.order()),
        mult_(std::move(multipliers)),
        next_(std::move(next_phase)),
        stamp_(n_ * n_ * mult_.size(), 0),
        step_(n_ * n_ * mult_.size(), 0) {}

  // Value at the least index m >= transient with period | m, where indices
  // are shifted by `offset` (the number of steps already taken).
  LimitPair run(PairState start, std::uint32_t phase, std::uint64_t offset) {
    ++run_;
    trail_.clear();
    PairState p = start;
    std::uint32_t ph = phase;
    while (true) {
      std::size_t key = (static_cast<std::size_t>(p.left) * n_ + p.right) * mult_.size() + ph;
      if (stamp_[key] == run_) {
        std::uint64_t first = step_[key];
        std::uint64_t period = trail_.size() - first;
        std::uint64_t transient = first + offset;
        std::uint64_t m = (transient + period - 1) / period * period;
        PairState at = trail_[m - offset];
        return {at.left, at.right, transient, period};
      }
      stamp_[key] = run_;
      step_[key] = static_cast<std::uint32_t>(trail_.size());
      trail_.push_back(p);
      p = pair_step(s_, p, mult_[ph]);
      ph = next_[ph];
    }
  }

 private:
  FiniteSemigroup const& s_;
  std::size_t n_;
  std::vector<ElementId> mult_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> step_;
  std::uint32_t run_ = 0;
  std::vector<PairState> trail_;
};

TrajectorySimulator alternating_simulator(FiniteSemigroup const& s, ElementId w1,
                                          ElementId w2) {
  return TrajectorySimulator(s, {w1, w2}, {1, 0});
}

TrajectorySimulator powers_simulator(FiniteSemigroup const& s, ElementId c) {
  auto pc = power_cycle(s, c);
  return TrajectorySimulator(s, std::move(pc.powers), std::move(pc.next));
}

PairState unit_prefix(FiniteSemigroup const& s, PairState p) {
  return pair_step(s, pair_step(s, p, kUnit), kUnit);
}

}  // namespace

LimitPair limit_pair(FiniteSemigroup const& s, ElementId x, ElementId y, ElementId w1,
                     ElementId w2, Schedule schedule) {
  if (schedule == Schedule::Alternating) {
    auto sim = alternating_simulator(s, w1, w2);
    return sim.run({x, y}, 0, 0);
  }
  auto sim = powers_simulator(s, w1);
  return sim.run(unit_prefix(s, {x, y}), 0, 2);
}

Verdict check_pe(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  for (std::size_t ic = 0; ic <= n; ++ic) {
    ElementId c = ic < n ? static_cast<ElementId>(ic) : kUnit;
    auto pc = power_cycle(s, c);
    std::size_t len = pc.powers.size();
    std::vector<std::uint32_t> mark(n * n * len, 0);
    std::uint32_t walk = 0;
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        ++walk;
        PairState p = unit_prefix(s, {a, b});
        std::uint32_t ph = 0;
        while (!p.diagonal()) {
          std::size_t key = (static_cast<std::size_t>(p.left) * n + p.right) * len + ph;
          if (mark[key] == walk) {
            return fail(Property::PE, "recurrent power trajectory", {a, b, c});
          }
          if (mark[key] != 0) {
            break;
          }
          mark[key] = walk;
          p = pair_step(s, p, pc.powers[ph]);
          ph = pc.next[ph];
        }
      }
    }
  }
  return {};
}

bool is_pe(FiniteSemigroup const& s) { return check_pe(s).holds; }

// ---------------------------------------------------------------------------
// Structural properties with certificates

namespace {

std::vector<ElementId> inverses_of(FiniteSemigroup const& s, ElementId x, std::size_t cap) {
  std::vector<ElementId> out;
  for (ElementId y = 0; y < s.order() && out.size() < cap; ++y) {
    if (s.product(s.product(x, y), x) == x && s.product(s.product(y, x), y) == y) {
      out.push_back(y);
    }
  }
  return out;
}

}  // namespace

Verdict check_bg(FiniteSemigroup const& s) {
  for (ElementId x = 0; x < s.order(); ++x) {
    auto inv = inverses_of(s, x, 2);
    if (inv.size() > 1) {
      return fail(Property::BG, "two inverses", {x, inv[0], inv[1]});
    }
  }
  return {};
}

Verdict check_bg_nil(FiniteSemigroup const& s) {
  auto bg = check_bg(s);
  if (!bg.holds) {
    bg.witness->property = Property::BGNil;
    return bg;
  }
  std::vector<char> done(s.order(), 0);
  auto const& gd = green(s);
  for (ElementId e : idempotents(s)) {
    if (done[gd.h_class[e]]) {
      continue;
    }
    done[gd.h_class[e]] = 1;
    if (!is_nilpotent_group(maximal_subgroup(s, e))) {
      return fail(Property::BGNil, "non-nilpotent subgroup", {e});
    }
  }
  return {};
}

Verdict check_aperiodic(FiniteSemigroup const& s) {
  for (ElementId x = 0; x < s.order(); ++x) {
    if (s.period_of(x) != 1) {
      return fail(Property::Aperiodic, "nontrivial period", {x});
    }
  }
  return {};
}

Verdict check_inverse(FiniteSemigroup const& s) {
  for (ElementId x = 0; x < s.order(); ++x) {
    if (inverses_of(s, x, 2).size() != 1) {
      return fail(Property::Inverse, "inverse count", {x});
    }
  }
  return {};
}

Verdict check_idempotents_commute(FiniteSemigroup const& s) {
  auto es = idempotents(s);
  for (ElementId e : es) {
    for (ElementId f : es) {
      if (s.product(e, f) != s.product(f, e)) {
        return fail(Property::IdempotentsCommute, "non-commuting idempotents", {e, f});
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// NDF12

Verdict check_ndf12(FiniteSemigroup const& s, bool units_allowed) {
  auto nil = check_bg_nil(s);
  if (!nil.holds) {
    nil.witness->property = Property::NDF12;
    return nil;
  }
  std::size_t n = s.order();
  std::size_t range = units_allowed ? n + 1 : n;
  auto mult = [&](std::size_t i) { return i < n ? static_cast<ElementId>(i) : kUnit; };
  for (std::size_t i1 = 0; i1 < range; ++i1) {
    ElementId w1 = mult(i1);
    for (std::size_t i2 = 0; i2 < range; ++i2) {
      ElementId w2 = mult(i2);
      auto sim = alternating_simulator(s, w1, w2);
      for (ElementId a = 0; a < n; ++a) {
        PairState start{times(s, a, w2), w2 == kUnit ? a : s.product(w2, a)};
        auto lp = sim.run(start, 0, 0);
        if (lp.lambda == lp.rho) {
          continue;
        }
        ElementId r = s.product(times(s, lp.rho, w1), lp.lambda);
        if (s.omega_plus_one(r) == r) {
          return fail(Property::NDF12, "group-valued limit", {a, w1, w2});
        }
      }
    }
  }
  return {};
}

bool is_ndf12(FiniteSemigroup const& s) { return check_ndf12(s).holds; }

// ---------------------------------------------------------------------------
// Upper non-nilpotent graph

namespace {

class PairClosures {
 public:
  explicit PairClosures(FiniteSemigroup const& s) : s_(s) {}

  // Closure of {x, y} and whether it is MN.
  std::pair<std::vector<ElementId> const*, bool> get(ElementId x, ElementId y) {
    auto elems = closure_within(s_, std::vector<ElementId>{x, y});
    auto it = memo_.find(elems);
    if (it == memo_.end()) {
      bool mn = is_mn(restrict_to(s_, elems).semigroup);
      it = memo_.emplace(std::move(elems), mn).first;
    }
    return {&it->first, it->second};
  }

 private:
  FiniteSemigroup const& s_;
  std::map<std::vector<ElementId>, bool> memo_;
};

}  // namespace

std::vector<std::pair<ElementId, ElementId>> upper_nonnilpotent_graph(
    FiniteSemigroup const& s) {
  PairClosures closures(s);
  std::vector<std::pair<ElementId, ElementId>> edges;
  for (ElementId x = 0; x < s.order(); ++x) {
    for (ElementId y = x + 1; y < s.order(); ++y) {
      if (!closures.get(x, y).second) {
        edges.emplace_back(x, y);
      }
    }
  }
  return edges;
}

Verdict check_eunng(FiniteSemigroup const& s) {
  PairClosures closures(s);
  for (ElementId x = 0; x < s.order(); ++x) {
    for (ElementId y = x + 1; y < s.order(); ++y) {
      auto [elems, mn] = closures.get(x, y);
      if (mn) {
        continue;
      }
      auto sub = restrict_to(s, *elems);
      auto inner = check_mn(sub.semigroup);
      auto const& w = *inner.witness;
      auto lift = [&](ElementId e) { return e == kUnit ? kUnit : sub.embedding[e]; };
      std::vector<ElementId> cycle;
      for (ElementId z : w.cycle) {
        cycle.push_back(lift(z));
      }
      return fail(Property::EUNNG, "non-nilpotent pair",
                  {x, y, lift(w.elements[0]), lift(w.elements[1])}, {}, std::move(cycle));
    }
  }
  return {};
}

bool is_eunng(FiniteSemigroup const& s) { return check_eunng(s).holds; }

// ---------------------------------------------------------------------------

Verdict decide(FiniteSemigroup const& s, Property p) {
  switch (p) {
    case Property::MN:
      return check_mn(s);
    case Property::WMN:
      return check_wmn(s);
    case Property::NT:
      return check_nt(s);
    case Property::PE:
      return check_pe(s);
    case Property::TM:
      return check_tm(s);
    case Property::EUNNG:
      return check_eunng(s);
    case Property::BG:
      return check_bg(s);
    case Property::BGNil:
      return check_bg_nil(s);
    case Property::NDF12:
      return check_ndf12(s);
    case Property::Aperiodic:
      return check_aperiodic(s);
    case Property::Inverse:
      return check_inverse(s);
    case Property::IdempotentsCommute:
      return check_idempotents_commute(s);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown property");
}

// ---------------------------------------------------------------------------
// Witnesses

namespace {

bool valid_id(FiniteSemigroup const& s, ElementId e, bool unit_ok) {
  return e < s.order() || (unit_ok && e == kUnit);
}

bool returns_to(FiniteSemigroup const& s, PairState p, std::vector<ElementId> const& word) {
  if (word.empty() || p.diagonal()) {
    return false;
  }
  for (ElementId z : word) {
    if (!valid_id(s, z, true)) {
      return false;
    }
  }
  return lambda_rho(s, p, word) == p;
}

// The functional iteration of `next` from p returns to p before any
// diagonal state.
template <typename Next>
bool on_cycle(FiniteSemigroup const& s, PairState p, Next const& next) {
  std::size_t limit = s.order() * s.order() + 1;
  PairState q = p;
  for (std::size_t i = 0; i < limit; ++i) {
    if (q.diagonal()) {
      return false;
    }
    q = next(q);
    if (q == p) {
      return true;
    }
  }
  return false;
}

bool validate_structural(FiniteSemigroup const& s, Witness const& w) {
  auto const& e = w.elements;
  auto is_inverse_pair = [&](ElementId x, ElementId y) {
    return s.product(s.product(x, y), x) == x && s.product(s.product(y, x), y) == y;
  };
  if (w.kind == "two inverses") {
    return e.size() == 3 && e[1] != e[2] && is_inverse_pair(e[0], e[1]) &&
           is_inverse_pair(e[0], e[2]);
  }
  if (w.kind == "non-nilpotent subgroup") {
    return e.size() == 1 && s.is_idempotent(e[0]) &&
           !is_nilpotent_group(maximal_subgroup(s, e[0]));
  }
  return false;
}

}  // namespace

bool validate_witness(FiniteSemigroup const& s, Witness const& w) {
  auto const& e = w.elements;
  for (ElementId x : e) {
    if (!valid_id(s, x, true)) {
      return false;
    }
  }
  switch (w.property) {
    case Property::MN:
      return e.size() == 2 && e[0] < s.order() && e[1] < s.order() &&
             returns_to(s, {e[0], e[1]}, w.cycle);
    case Property::NT: {
      if (e.size() != 2 || w.prefix.empty() || w.prefix[0] != kUnit) {
        return false;
      }
      for (ElementId z : w.prefix) {
        if (!valid_id(s, z, true)) {
          return false;
        }
      }
      PairState p = lambda_rho(s, {e[0], e[1]}, w.prefix);
      return returns_to(s, p, w.cycle);
    }
    case Property::TM:
      return e.size() == 2 &&
             on_cycle(s, {e[0], e[1]}, [&](PairState p) { return pair_step(s, p, kUnit); });
    case Property::WMN:
      return e.size() == 4 && on_cycle(s, {e[0], e[1]}, [&](PairState p) {
               return pair_step(s, pair_step(s, p, e[2]), e[3]);
             });
    case Property::PE: {
      if (e.size() != 3 || e[0] == kUnit || e[1] == kUnit) {
        return false;
      }
      auto lp = limit_pair(s, e[0], e[1], e[2], e[2], Schedule::PowersWithUnitPrefix);
      return lp.lambda != lp.rho;
    }
    case Property::EUNNG: {
      if (e.size() != 4 || e[0] == kUnit || e[1] == kUnit) {
        return false;
      }
      auto elems = closure_within(s, std::vector<ElementId>{e[0], e[1]});
      auto inside = [&](ElementId z) {
        return z == kUnit || std::binary_search(elems.begin(), elems.end(), z);
      };
      if (e[2] == kUnit || e[3] == kUnit || !inside(e[2]) || !inside(e[3]) ||
          !std::all_of(w.cycle.begin(), w.cycle.end(), inside)) {
        return false;
      }
      return returns_to(s, {e[2], e[3]}, w.cycle);
    }
    case Property::NDF12: {
      if (w.kind != "group-valued limit") {
        return validate_structural(s, w);
      }
      if (e.size() != 3 || e[0] == kUnit) {
        return false;
      }
      ElementId a = e[0], w1 = e[1], w2 = e[2];
      ElementId x = times(s, a, w2);
      ElementId y = w2 == kUnit ? a : s.product(w2, a);
      auto lp = limit_pair(s, x, y, w1, w2, Schedule::Alternating);
      ElementId r = s.product(times(s, lp.rho, w1), lp.lambda);
      return check_bg_nil(s).holds && lp.lambda != lp.rho && s.omega_plus_one(r) == r;
    }
    case Property::BG:
    case Property::BGNil:
      return validate_structural(s, w);
    case Property::Aperiodic:
      return e.size() == 1 && e[0] < s.order() && s.period_of(e[0]) > 1;
    case Property::Inverse:
      return e.size() == 1 && e[0] < s.order() && inverses_of(s, e[0], 2).size() != 1;
    case Property::IdempotentsCommute:
      return e.size() == 2 && e[0] < s.order() && e[1] < s.order() &&
             s.is_idempotent(e[0]) && s.is_idempotent(e[1]) &&
             s.product(e[0], e[1]) != s.product(e[1], e[0]);
  }
  return false;
}

std::string format_witness(FiniteSemigroup const& s, Witness const& w) {
  auto name = [&](ElementId e) -> std::string { return e == kUnit ? "[1]" : s.name(e); };
  auto word = [&](std::vector<ElementId> const& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      out += (i ? ", " : "") + name(ws[i]);
    }
    return out;
  };
  auto const& e = w.elements;
  std::ostringstream os;
  os << to_string(w.property) << " fails: " << w.kind << "\n";
  switch (w.property) {
    case Property::MN:
      os << "  x = " << name(e[0]) << "\n  y = " << name(e[1]) << "\n  multipliers "
         << word(w.cycle) << " return (x, y) to itself\n";
      break;
    case Property::NT:
      os << "  a = " << name(e[0]) << "\n  b = " << name(e[1]) << "\n  prefix " << word(w.prefix)
         << "\n  then repeating " << word(w.cycle) << " never equalizes\n";
      break;
    case Property::TM:
      os << "  a = " << name(e[0]) << "\n  b = " << name(e[1])
         << "\n  (a, b) recurs under (x, y) -> (xy, yx)\n";
      break;
    case Property::WMN:
      os << "  a = " << name(e[0]) << "\n  b = " << name(e[1]) << "\n  c1 = " << name(e[2])
         << "\n  c2 = " << name(e[3]) << "\n";
      break;
    case Property::PE:
      os << "  a = " << name(e[0]) << "\n  b = " << name(e[1]) << "\n  c = " << name(e[2])
         << "\n";
      break;
    case Property::EUNNG:
      os << "  <" << name(e[0]) << ", " << name(e[1]) << "> is not MN: x = " << name(e[2])
         << ", y = " << name(e[3]) << ", multipliers " << word(w.cycle) << "\n";
      break;
    case Property::NDF12:
      if (w.kind == "group-valued limit") {
        os << "  a = " << name(e[0]) << "\n  w1 = " << name(e[1]) << "\n  w2 = " << name(e[2])
           << "\n";
      } else {
        os << "  " << word(e) << "\n";
      }
      break;
    default:
      os << "  " << word(e) << "\n";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Rank

RankResult rank_witness(FiniteSemigroup const& s, Property p, std::size_t k,
                        std::optional<std::size_t> budget) {
  if (k == 0) {
    throw Error(ErrorKind::InvalidArgument, "rank needs k >= 1");
  }
  std::size_t cap = budget.value_or(default_budgets().closure);
  RankResult res;
  std::set<std::vector<ElementId>> seen;
  struct Entry {
    std::vector<ElementId> gens;
    std::vector<ElementId> elems;
  };
  std::vector<Entry> level{Entry{}};
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Entry> next;
    for (auto const& parent : level) {
      for (ElementId x = 0; x < s.order(); ++x) {
        if (std::binary_search(parent.elems.begin(), parent.elems.end(), x)) {
          continue;
        }
        auto gens = parent.gens;
        gens.push_back(x);
        auto elems = closure_within(s, gens);
        if (!seen.insert(elems).second) {
          continue;
        }
        if (seen.size() > cap) {
          throw Error(ErrorKind::SizeBudgetExceeded,
                      "more than " + std::to_string(cap) + " subsemigroups");
        }
        ++res.subsemigroups;
        if (!decide(restrict_to(s, elems).semigroup, p).holds) {
          res.holds = false;
          res.counterexample = gens;
          return res;
        }
        next.push_back(Entry{std::move(gens), std::move(elems)});
      }
    }
    level = std::move(next);
  }
  return res;
}

}  // namespace malcev
