#include "malcev/division.hpp"

#include <algorithm>
#include <array>

#include "malcev/structure.hpp"

namespace malcev {

char const* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

char const* to_string(TrialOutcome t) {
  switch (t) {
    case TrialOutcome::Confirmed: return "confirmed";
    case TrialOutcome::Vacuous: return "vacuous";
    case TrialOutcome::Violation: return "violation";
    case TrialOutcome::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Extends tg[i] -> fg[i] to the subsemigroup generated by tg along the right
// Cayley graph. phi must be all kNoElement on entry; assigned entries are
// recorded in touched. With an inverse array the map must also be injective.
bool propagate(FiniteSemigroup const& t, FiniteSemigroup const& f,
               std::span<ElementId const> tg, std::span<ElementId const> fg,
               std::vector<ElementId>& phi, std::vector<ElementId>& touched,
               std::vector<ElementId>* inverse) {
  auto assign = [&](ElementId x, ElementId img) {
    if (phi[x] != kNoElement) {
      return phi[x] == img;
    }
    if (inverse != nullptr) {
      if ((*inverse)[img] != kNoElement) {
        return false;
      }
      (*inverse)[img] = x;
    }
    phi[x] = img;
    touched.push_back(x);
    return true;
  };
  for (std::size_t i = 0; i < tg.size(); ++i) {
    if (!assign(tg[i], fg[i])) {
      return false;
    }
  }
  for (std::size_t q = 0; q < touched.size(); ++q) {
    ElementId x = touched[q];
    ElementId fx = phi[x];
    for (std::size_t i = 0; i < tg.size(); ++i) {
      if (!assign(t.product(x, tg[i]), f.product(fx, fg[i]))) {
        return false;
      }
    }
  }
  return true;
}

void reset(std::vector<ElementId>& phi, std::vector<ElementId>& touched,
           std::vector<ElementId>* inverse) {
  for (ElementId x : touched) {
    if (inverse != nullptr) {
      (*inverse)[phi[x]] = kNoElement;
    }
    phi[x] = kNoElement;
  }
  touched.clear();
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ElementId> minimal_generating_set(FiniteSemigroup const& f,
                                              std::size_t budget) {
  std::size_t n = f.order();
  std::vector<char> product(n, 0);
  for (ElementId x : f.table()) {
    product[x] = 1;
  }
  std::vector<ElementId> mandatory;
  std::vector<ElementId> rest;
  for (ElementId x = 0; x < n; ++x) {
    (product[x] ? rest : mandatory).push_back(x);
  }
  std::size_t tried = 0;
  for (std::size_t extra = mandatory.empty() ? 1 : 0; extra <= rest.size(); ++extra) {
    std::vector<std::size_t> idx(extra);
    for (std::size_t i = 0; i < extra; ++i) {
      idx[i] = i;
    }
    do {
      if (++tried > budget) {
        throw Error(ErrorKind::SizeBudgetExceeded,
                    "minimal generating set search exceeded its budget");
      }
      std::vector<ElementId> gens = mandatory;
      for (std::size_t i : idx) {
        gens.push_back(rest[i]);
      }
      if (closure_within(f, gens).size() == n) {
        return gens;
      }
    } while (extra > 0 && next_combination(idx, rest.size()));
  }
  throw Error(ErrorKind::InvalidArgument, "no generating set found");
}

std::size_t minimal_generating_size(FiniteSemigroup const& f) {
  return minimal_generating_set(f).size();
}

DivisionResult divides(FiniteSemigroup const& f, FiniteSemigroup const& t,
                       DivisionOptions const& options) {
  DivisionResult result;
  if (t.order() < f.order()) {
    result.verdict = Tri::False;
    return result;
  }
  std::vector<ElementId> fg = minimal_generating_set(f);
  std::size_t g = fg.size();
  if (options.max_generators && g > *options.max_generators) {
    result.verdict = Tri::Unknown;
    return result;
  }
  std::size_t budget = options.budget.value_or(default_budgets().search);

  // t can map to f_i only if f_i satisfies the relation x^index = x^(index+period)
  // of the monogenic subsemigroup of t.
  std::vector<std::vector<ElementId>> candidates(g);
  for (std::size_t i = 0; i < g; ++i) {
    for (ElementId x = 0; x < t.order(); ++x) {
      std::uint64_t index = t.index_of(x);
      std::uint64_t period = t.period_of(x);
      if (power(f, fg[i], index) == power(f, fg[i], index + period)) {
        candidates[i].push_back(x);
      }
    }
    if (candidates[i].empty()) {
      result.verdict = Tri::False;
      return result;
    }
  }

  std::vector<ElementId> phi(t.order(), kNoElement);
  std::vector<ElementId> touched;
  std::vector<ElementId> chosen;
  std::vector<std::size_t> pos(g, 0);
  std::size_t depth = 0;
  // Iterative depth-first search over candidate tuples.
  while (true) {
    if (pos[depth] >= candidates[depth].size()) {
      if (depth == 0) {
        result.verdict = Tri::False;
        return result;
      }
      pos[depth] = 0;
      --depth;
      chosen.pop_back();
      ++pos[depth];
      continue;
    }
    if (++result.explored > budget) {
      result.verdict = Tri::Unknown;
      return result;
    }
    chosen.push_back(candidates[depth][pos[depth]]);
    bool ok = propagate(t, f, chosen, std::span<ElementId const>(fg.data(), depth + 1),
                        phi, touched, nullptr);
    if (ok && depth + 1 == g) {
      DivisionWitness w;
      w.t_generators = chosen;
      w.f_generators = fg;
      for (ElementId x : touched) {
        w.map.emplace_back(x, phi[x]);
      }
      std::sort(w.map.begin(), w.map.end());
      reset(phi, touched, nullptr);
      result.verdict = Tri::True;
      result.witness = std::move(w);
      return result;
    }
    reset(phi, touched, nullptr);
    if (ok) {
      ++depth;
      pos[depth] = 0;
    } else {
      chosen.pop_back();
      ++pos[depth];
    }
  }
}

bool validate_division(FiniteSemigroup const& f, FiniteSemigroup const& t,
                       DivisionWitness const& w) {
  std::vector<ElementId> phi(t.order(), kNoElement);
  for (auto [x, y] : w.map) {
    if (x >= t.order() || y >= f.order() || phi[x] != kNoElement) {
      return false;
    }
    phi[x] = y;
  }
  std::vector<char> hit(f.order(), 0);
  for (auto [x, y] : w.map) {
    hit[y] = 1;
    for (auto [x2, y2] : w.map) {
      ElementId p = t.product(x, x2);
      if (phi[p] == kNoElement || phi[p] != f.product(y, y2)) {
        return false;
      }
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace {

using Profile = std::array<std::uint32_t, 7>;

std::vector<Profile> profiles(FiniteSemigroup const& s) {
  GreenData const& g = green(s);
  std::vector<Profile> out(s.order());
  for (ElementId x = 0; x < s.order(); ++x) {
    std::uint32_t fixes = 0;
    for (ElementId y = 0; y < s.order(); ++y) {
      fixes += s.product(x, y) == y;
    }
    out[x] = {s.index_of(x),
              s.period_of(x),
              s.is_idempotent(x) ? 1u : 0u,
              static_cast<std::uint32_t>(g.r_classes[g.r_class[x]].size()),
              static_cast<std::uint32_t>(g.l_classes[g.l_class[x]].size()),
              static_cast<std::uint32_t>(g.j_classes[g.j_class[x]].size()),
              fixes};
  }
  return out;
}

std::vector<ElementId> greedy_generators(FiniteSemigroup const& s) {
  std::vector<char> product(s.order(), 0);
  for (ElementId x : s.table()) {
    product[x] = 1;
  }
  std::vector<ElementId> gens;
  for (ElementId x = 0; x < s.order(); ++x) {
    if (!product[x]) {
      gens.push_back(x);
    }
  }
  std::vector<char> covered(s.order(), 0);
  if (!gens.empty()) {
    for (ElementId x : closure_within(s, gens)) {
      covered[x] = 1;
    }
  }
  for (ElementId x = 0; x < s.order(); ++x) {
    if (!covered[x]) {
      gens.push_back(x);
      for (ElementId y : closure_within(s, gens)) {
        covered[y] = 1;
      }
    }
  }
  return gens;
}

}  // namespace

std::optional<std::vector<ElementId>> find_isomorphism(FiniteSemigroup const& s,
                                                       FiniteSemigroup const& t) {
  if (s.order() != t.order()) {
    return std::nullopt;
  }
  auto ps = profiles(s);
  auto pt = profiles(t);
  {
    auto a = ps;
    auto b = pt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      return std::nullopt;
    }
  }
  std::vector<ElementId> gens = greedy_generators(s);
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (ElementId y = 0; y < t.order(); ++y) {
      if (pt[y] == ps[gens[i]]) {
        candidates[i].push_back(y);
      }
    }
  }
  // Maps s -> t along s's generators; phi is indexed by s.
  std::vector<ElementId> phi(s.order(), kNoElement);
  std::vector<ElementId> inverse(t.order(), kNoElement);
  std::vector<ElementId> touched;
  std::vector<ElementId> chosen;
  std::vector<std::size_t> pos(gens.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (pos[depth] >= candidates[depth].size()) {
      if (depth == 0) {
        return std::nullopt;
      }
      pos[depth] = 0;
      --depth;
      chosen.pop_back();
      ++pos[depth];
      continue;
    }
    chosen.push_back(candidates[depth][pos[depth]]);
    bool ok = propagate(s, t, std::span<ElementId const>(gens.data(), depth + 1), chosen,
                        phi, touched, &inverse);
    if (ok && depth + 1 == gens.size()) {
      return phi;
    }
    reset(phi, touched, &inverse);
    if (ok) {
      ++depth;
      pos[depth] = 0;
    } else {
      chosen.pop_back();
      ++pos[depth];
    }
  }
}

bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t) {
  return find_isomorphism(s, t).has_value();
}

TrialResult exclusion_trial(FiniteSemigroup const& f,
                            std::vector<FiniteSemigroup> const& excluded,
                            FiniteSemigroup const& t, FiniteSemigroup const& v,
                            DivisionOptions const& options) {
  TrialResult out;
  FiniteSemigroup product = direct_product(t, v);
  DivisionResult d = divides(f, product, options);
  if (d.verdict == Tri::Unknown) {
    out.outcome = TrialOutcome::Unknown;
    out.detail = "division into the product undecided";
    return out;
  }
  if (d.verdict == Tri::False) {
    out.outcome = TrialOutcome::Vacuous;
    out.detail = "does not divide the product";
    return out;
  }
  bool unknown = false;
  for (std::size_t k = 0; k < excluded.size(); ++k) {
    for (int side = 0; side < 2; ++side) {
      DivisionResult r = divides(excluded[k], side == 0 ? t : v, options);
      if (r.verdict == Tri::True) {
        out.outcome = TrialOutcome::Confirmed;
        out.detail = std::string("excluded #") + std::to_string(k + 1) + " divides " +
                     (side == 0 ? "left" : "right") + " factor";
        return out;
      }
      unknown = unknown || r.verdict == Tri::Unknown;
    }
  }
  out.outcome = unknown ? TrialOutcome::Unknown : TrialOutcome::Violation;
  out.detail = unknown ? "factor divisions undecided" : "no excluded semigroup divides a factor";
  return out;
}

TrialResult times_prime_trial(FiniteSemigroup const& f, FiniteSemigroup const& t,
                              FiniteSemigroup const& v, DivisionOptions const& options) {
  TrialResult r = exclusion_trial(f, {f}, t, v, options);
  if (r.outcome == TrialOutcome::Confirmed) {
    r.detail = r.detail.find("left") != std::string::npos ? "divides left factor"
                                                          : "divides right factor";
  }
  return r;
}

}  // namespace malcev
