#include "malcev/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "malcev/kernels.hpp"

namespace malcev {

struct FiniteSemigroup::Data {
  std::size_t order = 0;
  std::vector<ElementId> table;
  std::optional<ElementId> zero;
  std::optional<ElementId> identity;
  std::vector<std::string> names;
  std::unordered_map<std::string, ElementId> name_index;
  std::vector<Transformation> transformations;
  std::unordered_map<Transformation, ElementId, TransformationHash> transformation_index;

  std::once_flag columns_once;
  std::vector<ElementId> columns;

  std::once_flag monogenic_once;
  std::vector<std::uint32_t> index;
  std::vector<std::uint32_t> period;
  std::vector<ElementId> omega;
  std::vector<ElementId> omega_minus;
  std::vector<ElementId> omega_plus;

  std::once_flag green_once;
  std::shared_ptr<GreenData const> green;
};

namespace {

std::vector<std::string> default_names(std::size_t order) {
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    names[i] = std::to_string(i);
  }
  return names;
}

void check_range(std::span<ElementId const> table, std::size_t order) {
  if (order == 0) {
    throw Error(ErrorKind::BadTable, "a semigroup has at least one element");
  }
  if (table.size() != order * order) {
    throw Error(ErrorKind::BadTable, "table has " + std::to_string(table.size()) +
                                         " entries, expected " +
                                         std::to_string(order * order));
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= order) {
      throw Error(ErrorKind::BadTable,
                  "entry " + std::to_string(table[k]) + " at row " +
                      std::to_string(k / order) + " column " +
                      std::to_string(k % order) + " is out of range");
    }
  }
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::shared_ptr<Data> data)
    : data_(std::move(data)) {
  bind();
}

void FiniteSemigroup::bind() {
  table_ = data_->table.data();
  order_ = data_->order;
}

std::optional<std::array<ElementId, 3>> find_non_associative(
    std::span<ElementId const> table, std::size_t order) {
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      ElementId ab = table[a * order + b];
      for (std::size_t c = 0; c < order; ++c) {
        ElementId left = table[ab * order + c];
        ElementId right = table[a * order + table[b * order + c]];
        if (left != right) {
          return std::array<ElementId, 3>{static_cast<ElementId>(a),
                                          static_cast<ElementId>(b),
                                          static_cast<ElementId>(c)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ElementId> find_zero(std::span<ElementId const> table,
                                   std::size_t order) {
  for (std::size_t z = 0; z < order; ++z) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) {
      ok = table[z * order + a] == z && table[a * order + z] == z;
    }
    if (ok) {
      return static_cast<ElementId>(z);
    }
  }
  return std::nullopt;
}

std::optional<ElementId> find_identity(std::span<ElementId const> table,
                                       std::size_t order) {
  for (std::size_t e = 0; e < order; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) {
      ok = table[e * order + a] == a && table[a * order + e] == a;
    }
    if (ok) {
      return static_cast<ElementId>(e);
    }
  }
  return std::nullopt;
}

FiniteSemigroup FiniteSemigroup::from_table(std::size_t order,
                                            std::vector<ElementId> table,
                                            std::optional<ElementId> zero,
                                            std::optional<ElementId> identity,
                                            std::vector<std::string> names) {
  check_range(table, order);
  if (auto bad = find_non_associative(table, order)) {
    throw NotAssociativeError(*bad);
  }
  if (zero) {
    if (*zero >= order) {
      throw Error(ErrorKind::BadZero, "zero " + std::to_string(*zero) + " out of range");
    }
    for (std::size_t a = 0; a < order; ++a) {
      if (table[*zero * order + a] != *zero || table[a * order + *zero] != *zero) {
        throw Error(ErrorKind::BadZero, "element " + std::to_string(*zero) +
                                            " does not absorb " + std::to_string(a));
      }
    }
  }
  if (identity) {
    if (*identity >= order) {
      throw Error(ErrorKind::BadIdentity,
                  "identity " + std::to_string(*identity) + " out of range");
    }
    for (std::size_t a = 0; a < order; ++a) {
      if (table[*identity * order + a] != a || table[a * order + *identity] != a) {
        throw Error(ErrorKind::BadIdentity, "element " + std::to_string(*identity) +
                                                " does not fix " + std::to_string(a));
      }
    }
  }
  FiniteSemigroup s = trusted(order, std::move(table), std::move(names));
  return s;
}

FiniteSemigroup FiniteSemigroup::from_rows(
    std::vector<std::vector<ElementId>> const& rows, std::optional<ElementId> zero,
    std::optional<ElementId> identity, std::vector<std::string> names) {
  std::vector<ElementId> table;
  table.reserve(rows.size() * rows.size());
  for (auto const& r : rows) {
    if (r.size() != rows.size()) {
      throw Error(ErrorKind::BadTable, "table is not square");
    }
    table.insert(table.end(), r.begin(), r.end());
  }
  return from_table(rows.size(), std::move(table), zero, identity, std::move(names));
}

FiniteSemigroup FiniteSemigroup::trusted(std::size_t order,
                                         std::vector<ElementId> table,
                                         std::vector<std::string> names) {
  check_range(table, order);
  auto data = std::make_shared<Data>();
  data->order = order;
  data->zero = find_zero(table, order);
  data->identity = find_identity(table, order);
  data->table = std::move(table);
  if (names.empty()) {
    names = default_names(order);
  }
  if (names.size() != order) {
    throw Error(ErrorKind::BadTable, "expected " + std::to_string(order) +
                                         " names, got " + std::to_string(names.size()));
  }
  for (std::size_t i = 0; i < order; ++i) {
    if (!data->name_index.emplace(names[i], static_cast<ElementId>(i)).second) {
      throw Error(ErrorKind::BadTable, "duplicate element name " + names[i]);
    }
  }
  data->names = std::move(names);
  return FiniteSemigroup(std::move(data));
}

std::size_t FiniteSemigroup::order() const noexcept { return order_; }

std::span<ElementId const> FiniteSemigroup::table() const noexcept {
  return data_->table;
}

std::span<ElementId const> FiniteSemigroup::row(ElementId a) const noexcept {
  return {table_ + a * order_, order_};
}

std::span<ElementId const> FiniteSemigroup::column(ElementId b) const noexcept {
  Data& d = *data_;
  std::call_once(d.columns_once, [&d] {
    std::size_t n = d.order;
    d.columns.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        d.columns[c * n + a] = d.table[a * n + c];
      }
    }
  });
  return {d.columns.data() + b * order_, order_};
}

std::optional<ElementId> FiniteSemigroup::zero() const noexcept { return data_->zero; }

std::optional<ElementId> FiniteSemigroup::identity() const noexcept {
  return data_->identity;
}

std::string const& FiniteSemigroup::name(ElementId a) const { return data_->names.at(a); }

std::vector<std::string> const& FiniteSemigroup::names() const noexcept {
  return data_->names;
}

ElementId FiniteSemigroup::find(std::string const& name) const {
  auto it = data_->name_index.find(name);
  return it == data_->name_index.end() ? kNoElement : it->second;
}

std::vector<Transformation> const& FiniteSemigroup::transformations() const noexcept {
  return data_->transformations;
}

ElementId FiniteSemigroup::find(Transformation const& t) const {
  auto it = data_->transformation_index.find(t);
  return it == data_->transformation_index.end() ? kNoElement : it->second;
}

namespace {

void compute_monogenic(FiniteSemigroup const& s, ElementId x, std::uint32_t& index,
                       std::uint32_t& period, ElementId& om, ElementId& om_minus,
                       ElementId& om_plus) {
  // powers[k - 1] = x^k
  std::vector<ElementId> powers;
  std::unordered_map<ElementId, std::uint32_t> seen;
  ElementId cur = x;
  std::uint32_t k = 1;
  while (true) {
    auto [it, inserted] = seen.emplace(cur, k);
    if (!inserted) {
      index = it->second;
      period = k - it->second;
      break;
    }
    powers.push_back(cur);
    cur = s.product(cur, x);
    ++k;
  }
  std::uint32_t m = ((index + period - 1) / period) * period;
  auto at = [&](std::uint64_t e) {
    // e >= index
    std::uint64_t r = index + (e - index) % period;
    return powers[r - 1];
  };
  om = at(m);
  om_plus = at(m + 1);
  om_minus = at(m + period - 1);
}

}  // namespace

FiniteSemigroup::Data& FiniteSemigroup::monogenic_data() const {
  Data& d = *data_;
  std::call_once(d.monogenic_once, [this, &d] {
    std::size_t n = d.order;
    d.index.resize(n);
    d.period.resize(n);
    d.omega.resize(n);
    d.omega_minus.resize(n);
    d.omega_plus.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      compute_monogenic(*this, static_cast<ElementId>(x), d.index[x], d.period[x],
                        d.omega[x], d.omega_minus[x], d.omega_plus[x]);
    }
  });
  return d;
}

std::uint32_t FiniteSemigroup::index_of(ElementId x) const {
  Data& d = monogenic_data();
  return d.index.at(x);
}

std::uint32_t FiniteSemigroup::period_of(ElementId x) const {
  Data& d = monogenic_data();
  return d.period.at(x);
}

ElementId FiniteSemigroup::omega(ElementId x) const { return omega_table().at(x); }

ElementId FiniteSemigroup::omega_minus_one(ElementId x) const {
  return omega_minus_one_table().at(x);
}

ElementId FiniteSemigroup::omega_plus_one(ElementId x) const {
  return omega_plus_one_table().at(x);
}

std::vector<ElementId> const& FiniteSemigroup::omega_table() const {
  Data& d = monogenic_data();
  return d.omega;
}

std::vector<ElementId> const& FiniteSemigroup::omega_minus_one_table() const {
  Data& d = monogenic_data();
  return d.omega_minus;
}

std::vector<ElementId> const& FiniteSemigroup::omega_plus_one_table() const {
  Data& d = monogenic_data();
  return d.omega_plus;
}


FiniteSemigroup FiniteSemigroup::with_names(std::vector<std::string> names) const {
  FiniteSemigroup s = trusted(order_, data_->table, std::move(names));
  s.data_->transformations = data_->transformations;
  s.data_->transformation_index = data_->transformation_index;
  return s;
}

FiniteSemigroup FiniteSemigroup::with_transformations(
    std::vector<Transformation> ts) const {
  if (ts.size() != order_) {
    throw Error(ErrorKind::InvalidArgument, "one transformation per element expected");
  }
  FiniteSemigroup s = trusted(order_, data_->table, data_->names);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    s.data_->transformation_index.emplace(ts[i], static_cast<ElementId>(i));
  }
  s.data_->transformations = std::move(ts);
  return s;
}

GreenData const& FiniteSemigroup::green(
    std::function<std::shared_ptr<GreenData const>(FiniteSemigroup const&)> const&
        compute) const {
  Data& d = *data_;
  std::call_once(d.green_once, [&] { d.green = compute(*this); });
  return *d.green;
}

Monogenic monogenic(FiniteSemigroup const& s, ElementId x) {
  return {s.index_of(x), s.period_of(x)};
}

ElementId power(FiniteSemigroup const& s, ElementId x, std::uint64_t k) {
  if (k == 0) {
    throw Error(ErrorKind::InvalidArgument, "power exponent must be positive");
  }
  std::uint64_t index = s.index_of(x);
  std::uint64_t period = s.period_of(x);
  if (k > index + period) {
    k = index + (k - index) % period;
  }
  ElementId result = x;
  for (std::uint64_t i = 1; i < k; ++i) {
    result = s.product(result, x);
  }
  return result;
}

ElementId omega_power(FiniteSemigroup const& s, ElementId x) { return s.omega(x); }

namespace {

std::string fresh_name(FiniteSemigroup const& s, std::string base) {
  while (s.find(base) != kNoElement) {
    base += "'";
  }
  return base;
}

}  // namespace

FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  std::size_t n1 = n + 1;
  std::vector<ElementId> table(n1 * n1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n1 + b] = s.product(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
  }
  for (std::size_t a = 0; a < n1; ++a) {
    table[a * n1 + n] = static_cast<ElementId>(a);
    table[n * n1 + a] = static_cast<ElementId>(a);
  }
  std::vector<std::string> names = s.names();
  names.push_back(fresh_name(s, "1"));
  return FiniteSemigroup::trusted(n1, std::move(table), std::move(names));
}

FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  std::size_t n1 = n + 1;
  std::vector<ElementId> table(n1 * n1, static_cast<ElementId>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n1 + b] = s.product(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
  }
  std::vector<std::string> names = s.names();
  names.push_back(fresh_name(s, "0"));
  return FiniteSemigroup::trusted(n1, std::move(table), std::move(names));
}

std::vector<ElementId> closure_within(FiniteSemigroup const& s,
                                      std::span<ElementId const> gens) {
  std::vector<char> in(s.order(), 0);
  std::vector<ElementId> gen_list;
  std::vector<ElementId> elements;
  for (ElementId g : gens) {
    if (g >= s.order()) {
      throw Error(ErrorKind::InvalidArgument, "generator out of range");
    }
    if (!in[g]) {
      in[g] = 1;
      gen_list.push_back(g);
      elements.push_back(g);
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto r = s.row(elements[i]);
    for (ElementId g : gen_list) {
      ElementId p = r[g];
      if (!in[p]) {
        in[p] = 1;
        elements.push_back(p);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

Subsemigroup restrict_to(FiniteSemigroup const& s, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<ElementId> local(s.order(), kNoElement);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    local[elements[i]] = static_cast<ElementId>(i);
  }
  std::size_t k = elements.size();
  std::vector<ElementId> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      ElementId p = local[s.product(elements[i], elements[j])];
      if (p == kNoElement) {
        throw Error(ErrorKind::InvalidArgument, "element set is not closed");
      }
      table[i * k + j] = p;
    }
  }
  std::vector<std::string> names;
  names.reserve(k);
  std::vector<Transformation> ts;
  for (ElementId e : elements) {
    names.push_back(s.name(e));
    if (!s.transformations().empty()) {
      ts.push_back(s.transformations()[e]);
    }
  }
  FiniteSemigroup sub = FiniteSemigroup::trusted(k, std::move(table), std::move(names));
  if (!ts.empty()) {
    sub = sub.with_transformations(std::move(ts));
  }
  return Subsemigroup{std::move(sub), std::move(elements)};
}

Subsemigroup generated_subsemigroup(FiniteSemigroup const& s,
                                    std::span<ElementId const> gens) {
  if (gens.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty generating set");
  }
  return restrict_to(s, closure_within(s, gens));
}

FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t,
                               std::optional<std::size_t> budget) {
  std::size_t limit = budget.value_or(default_budgets().product);
  std::size_t ns = s.order();
  std::size_t nt = t.order();
  std::size_t n = ns * nt;
  if (n > limit) {
    throw Error(ErrorKind::SizeBudgetExceeded,
                "direct product of orders " + std::to_string(ns) + " and " +
                    std::to_string(nt) + " exceeds budget " + std::to_string(limit));
  }
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < ns; ++a) {
    for (std::size_t b = 0; b < nt; ++b) {
      std::size_t x = a * nt + b;
      for (std::size_t c = 0; c < ns; ++c) {
        ElementId ac = s.product(static_cast<ElementId>(a), static_cast<ElementId>(c));
        for (std::size_t d = 0; d < nt; ++d) {
          ElementId bd = t.product(static_cast<ElementId>(b), static_cast<ElementId>(d));
          table[x * n + c * nt + d] = static_cast<ElementId>(ac * nt + bd);
        }
      }
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < ns; ++a) {
    for (std::size_t b = 0; b < nt; ++b) {
      names[a * nt + b] = "(" + s.name(static_cast<ElementId>(a)) + "," +
                          t.name(static_cast<ElementId>(b)) + ")";
    }
  }
  return FiniteSemigroup::trusted(n, std::move(table), std::move(names));
}

FiniteSemigroup from_transformations(std::span<Transformation const> gens,
                                     std::optional<std::size_t> budget) {
  if (gens.empty()) {
    throw Error(ErrorKind::InvalidArgument, "no generators");
  }
  std::size_t limit = budget.value_or(default_budgets().closure);
  std::size_t degree = gens[0].degree();
  std::vector<Transformation> elements;
  std::unordered_map<Transformation, ElementId, TransformationHash> index;
  std::vector<Transformation> gen_list;
  for (auto const& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::DegreeMismatch, "generators have different degrees");
    }
    if (index.emplace(g, static_cast<ElementId>(elements.size())).second) {
      elements.push_back(g);
      gen_list.push_back(g);
    }
  }
  std::size_t k = gen_list.size();
  // prefix[i] * gen[last[i]] == element i; prefix is kNoElement for generators.
  std::vector<ElementId> prefix(k, kNoElement);
  std::vector<std::uint32_t> last(k);
  for (std::size_t g = 0; g < k; ++g) {
    last[g] = static_cast<std::uint32_t>(g);
  }
  std::vector<ElementId> right;  // right[i * k + g] = element i * gen g
  auto const& compose = kernels::active().compose;
  Transformation scratch(degree);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      compose(elements[i].data(), gen_list[g].data(), scratch.data(), degree + 1);
      auto [it, inserted] = index.emplace(scratch, static_cast<ElementId>(elements.size()));
      if (inserted) {
        if (elements.size() >= limit) {
          throw Error(ErrorKind::SizeBudgetExceeded,
                      "closure exceeds " + std::to_string(limit) + " elements");
        }
        elements.push_back(scratch);
        prefix.push_back(static_cast<ElementId>(i));
        last.push_back(static_cast<std::uint32_t>(g));
      }
      right.push_back(it->second);
    }
  }
  std::size_t n = elements.size();
  std::vector<ElementId> table(n * n);
  // Column j is filled from column prefix[j], which always comes earlier.
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t g = last[j];
    if (prefix[j] == kNoElement) {
      for (std::size_t i = 0; i < n; ++i) {
        table[i * n + j] = right[i * k + g];
      }
    } else {
      std::size_t p = prefix[j];
      for (std::size_t i = 0; i < n; ++i) {
        table[i * n + j] = right[table[i * n + p] * k + g];
      }
    }
  }
  FiniteSemigroup s = FiniteSemigroup::trusted(n, std::move(table));
  return s.with_transformations(std::move(elements));
}

ElementId rees_element(ReesMatrixSpec const& spec, std::size_t i, ElementId g,
                       std::size_t lambda) {
  return static_cast<ElementId>((i * spec.m + lambda) * spec.group.order() + g);
}

FiniteSemigroup from_rees(ReesMatrixSpec const& spec) {
  FiniteSemigroup const& grp = spec.group;
  std::size_t gsize = grp.order();
  if (!grp.identity()) {
    throw Error(ErrorKind::NotAGroup, "group has no identity");
  }
  ElementId e = *grp.identity();
  for (std::size_t a = 0; a < gsize; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < gsize && !has_inverse; ++b) {
      has_inverse = grp.product(static_cast<ElementId>(a), static_cast<ElementId>(b)) == e;
    }
    if (!has_inverse) {
      throw Error(ErrorKind::NotAGroup, "element " + grp.name(static_cast<ElementId>(a)) +
                                            " has no inverse");
    }
  }
  if (spec.n == 0 || spec.m == 0) {
    throw Error(ErrorKind::InvalidArgument, "empty index set");
  }
  if (spec.sandwich.size() != spec.n * spec.m) {
    throw Error(ErrorKind::BadTable, "sandwich matrix must have m rows of n entries");
  }
  for (auto const& p : spec.sandwich) {
    if (!p && !spec.with_zero) {
      throw Error(ErrorKind::BadTable, "θ entry in a sandwich matrix without zero");
    }
    if (p && *p >= gsize) {
      throw Error(ErrorKind::BadTable, "sandwich entry out of range");
    }
  }
  for (std::size_t lambda = 0; lambda < spec.m; ++lambda) {
    bool any = false;
    for (std::size_t i = 0; i < spec.n; ++i) {
      any = any || spec.sandwich[lambda * spec.n + i].has_value();
    }
    if (!any) {
      throw Error(ErrorKind::NotRegular, "sandwich row " + std::to_string(lambda + 1) +
                                             " is all θ");
    }
  }
  for (std::size_t i = 0; i < spec.n; ++i) {
    bool any = false;
    for (std::size_t lambda = 0; lambda < spec.m; ++lambda) {
      any = any || spec.sandwich[lambda * spec.n + i].has_value();
    }
    if (!any) {
      throw Error(ErrorKind::NotRegular, "sandwich column " + std::to_string(i + 1) +
                                             " is all θ");
    }
  }
  std::size_t core = spec.n * spec.m * gsize;
  std::size_t n = core + (spec.with_zero ? 1 : 0);
  ElementId theta = static_cast<ElementId>(core);
  std::vector<ElementId> table(n * n, theta);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t lam = 0; lam < spec.m; ++lam) {
      for (std::size_t g = 0; g < gsize; ++g) {
        ElementId x = rees_element(spec, i, static_cast<ElementId>(g), lam);
        for (std::size_t k = 0; k < spec.n; ++k) {
          auto p = spec.sandwich[lam * spec.n + k];
          for (std::size_t mu = 0; mu < spec.m; ++mu) {
            for (std::size_t h = 0; h < gsize; ++h) {
              ElementId y = rees_element(spec, k, static_cast<ElementId>(h), mu);
              table[x * n + y] =
                  p ? rees_element(spec, i,
                                   grp.product(grp.product(static_cast<ElementId>(g), *p),
                                               static_cast<ElementId>(h)),
                                   mu)
                    : theta;
            }
          }
        }
      }
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t lam = 0; lam < spec.m; ++lam) {
      for (std::size_t g = 0; g < gsize; ++g) {
        names[rees_element(spec, i, static_cast<ElementId>(g), lam)] =
            "(" + grp.name(static_cast<ElementId>(g)) + ";" + std::to_string(i + 1) +
            "," + std::to_string(lam + 1) + ")";
      }
    }
  }
  if (spec.with_zero) {
    names[theta] = "θ";
  }
  return FiniteSemigroup::trusted(n, std::move(table), std::move(names));
}

FiniteSemigroup trivial_group() {
  return FiniteSemigroup::trusted(1, {0}, {"1"});
}

ReesMatrixSpec identity_rees_spec(std::size_t n) {
  ReesMatrixSpec spec{trivial_group(), n, n, {}, true};
  spec.sandwich.assign(n * n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    spec.sandwich[i * n + i] = 0;
  }
  return spec;
}

}  // namespace malcev
