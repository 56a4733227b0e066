#include "malcev/pseudoid.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "malcev/error.hpp"
#include "malcev/kernels.hpp"
#include "malcev/structure.hpp"

namespace malcev {

// ---------------------------------------------------------------------------
// Terms

OmegaTerm OmegaTerm::variable(char v) {
  OmegaTerm t;
  t.kind = Kind::Var;
  t.var = v;
  return t;
}

OmegaTerm OmegaTerm::product(std::vector<OmegaTerm> factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty product");
  }
  if (factors.size() == 1) {
    return std::move(factors.front());
  }
  OmegaTerm t;
  t.kind = Kind::Product;
  t.children = std::move(factors);
  return t;
}

namespace {

OmegaTerm power_node(OmegaTerm::Kind kind, OmegaTerm base) {
  OmegaTerm t;
  t.kind = kind;
  t.children.push_back(std::move(base));
  return t;
}

}  // namespace

OmegaTerm OmegaTerm::omega(OmegaTerm base) { return power_node(Kind::Omega, std::move(base)); }
OmegaTerm OmegaTerm::omega_minus_one(OmegaTerm base) {
  return power_node(Kind::OmegaMinusOne, std::move(base));
}
OmegaTerm OmegaTerm::omega_plus_one(OmegaTerm base) {
  return power_node(Kind::OmegaPlusOne, std::move(base));
}

std::set<char> OmegaTerm::variables() const {
  if (kind == Kind::Var) {
    return {var};
  }
  std::set<char> out;
  for (auto const& c : children) {
    auto v = c.variables();
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::string OmegaTerm::to_string() const {
  switch (kind) {
    case Kind::Var:
      return std::string(1, var);
    case Kind::Product: {
      std::string out;
      for (auto const& c : children) {
        out += c.kind == Kind::Product ? "(" + c.to_string() + ")" : c.to_string();
      }
      return out;
    }
    default: {
      auto const& base = children.front();
      std::string out = base.kind == Kind::Product ? "(" + base.to_string() + ")" : base.to_string();
      out += "^w";
      if (kind == Kind::OmegaMinusOne) {
        out += "-1";
      } else if (kind == Kind::OmegaPlusOne) {
        out += "+1";
      }
      return out;
    }
  }
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  OmegaTerm parse() {
    OmegaTerm t = term();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return t;
  }

 private:
  [[noreturn]] void fail(std::string const& why) const {
    throw Error(ErrorKind::ParseError, "term \"" + std::string(text_) + "\": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  bool eat(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  OmegaTerm term() {
    std::vector<OmegaTerm> factors;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') {
        break;
      }
      factors.push_back(factor());
    }
    if (factors.empty()) {
      fail("empty term");
    }
    return OmegaTerm::product(std::move(factors));
  }

  OmegaTerm factor() {
    OmegaTerm t = atom();
    while (eat("^")) {
      bool braced = eat("{");
      if (!eat("w") && !eat("\xCF\x89")) {
        fail("expected w after ^");
      }
      if (eat("-1")) {
        t = OmegaTerm::omega_minus_one(std::move(t));
      } else if (eat("+1")) {
        t = OmegaTerm::omega_plus_one(std::move(t));
      } else {
        t = OmegaTerm::omega(std::move(t));
      }
      if (braced && !eat("}")) {
        fail("expected }");
      }
    }
    return t;
  }

  OmegaTerm atom() {
    skip_space();
    if (eat("(")) {
      OmegaTerm t = term();
      if (!eat(")")) {
        fail("expected )");
      }
      return t;
    }
    char c = text_[pos_];
    if (c < 'a' || c > 'z') {
      fail("expected a variable");
    }
    ++pos_;
    return OmegaTerm::variable(c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OmegaTerm parse_term(std::string_view text) { return TermParser(text).parse(); }

ElementId eval_omega_term(FiniteSemigroup const& s, OmegaTerm const& term,
                          Assignment const& assignment) {
  using Kind = OmegaTerm::Kind;
  switch (term.kind) {
    case Kind::Var: {
      auto it = assignment.find(term.var);
      if (it == assignment.end()) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string("variable ") + term.var + " is unassigned");
      }
      if (it->second >= s.order()) {
        throw Error(ErrorKind::InvalidArgument, "assigned element out of range");
      }
      return it->second;
    }
    case Kind::Product: {
      ElementId acc = eval_omega_term(s, term.children.front(), assignment);
      for (std::size_t i = 1; i < term.children.size(); ++i) {
        acc = s(acc, eval_omega_term(s, term.children[i], assignment));
      }
      return acc;
    }
    case Kind::Omega:
      return s.omega(eval_omega_term(s, term.children.front(), assignment));
    case Kind::OmegaMinusOne:
      return s.omega_minus_one(eval_omega_term(s, term.children.front(), assignment));
    case Kind::OmegaPlusOne:
      return s.omega_plus_one(eval_omega_term(s, term.children.front(), assignment));
  }
  return kNoElement;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

// Variables whose image is not the variable itself.
std::vector<char> moving_variables(Endomorphism const& endo) {
  std::vector<char> out;
  for (auto const& [v, image] : endo.images) {
    if (!(image.kind == OmegaTerm::Kind::Var && image.var == v)) {
      out.push_back(v);
    }
  }
  return out;
}

std::string side_string(IdentitySide const& side) {
  return side.iterated ? "phi^w(" + side.term.to_string() + ")" : side.term.to_string();
}

}  // namespace

std::set<char> IteratedIdentity::variables() const {
  std::set<char> out = lhs.term.variables();
  auto r = rhs.term.variables();
  out.insert(r.begin(), r.end());
  for (auto const& [v, image] : endo.images) {
    out.insert(v);
    auto i = image.variables();
    out.insert(i.begin(), i.end());
  }
  return out;
}

std::string IteratedIdentity::to_string() const {
  std::string out;
  for (char v : moving_variables(endo)) {
    out += std::string("phi(") + v + ") = " + endo.images.at(v).to_string() + "; ";
  }
  return out + side_string(lhs) + " = " + side_string(rhs);
}

IteratedIdentity plain_identity(OmegaTerm lhs, OmegaTerm rhs) {
  return {{}, {std::move(lhs), false}, {std::move(rhs), false}};
}

std::pair<ElementId, ElementId> iterate_endo_to_omega(FiniteSemigroup const& s,
                                                      IteratedIdentity const& id,
                                                      Assignment const& assignment) {
  auto moving = moving_variables(id.endo);
  Assignment at_omega = assignment;
  if (!moving.empty()) {
    std::map<std::vector<ElementId>, std::size_t> seen;
    std::vector<std::vector<ElementId>> trajectory;
    Assignment current = assignment;
    while (true) {
      std::vector<ElementId> state;
      for (char v : moving) {
        state.push_back(eval_omega_term(s, OmegaTerm::variable(v), current));
      }
      auto [it, fresh] = seen.emplace(state, trajectory.size());
      if (!fresh) {
        std::size_t transient = it->second;
        std::size_t period = trajectory.size() - transient;
        std::size_t m = (transient + period - 1) / period * period;
        auto const& point = trajectory[m];
        for (std::size_t i = 0; i < moving.size(); ++i) {
          at_omega[moving[i]] = point[i];
        }
        break;
      }
      trajectory.push_back(state);
      Assignment next = current;
      for (char v : moving) {
        next[v] = eval_omega_term(s, id.endo.images.at(v), current);
      }
      current = std::move(next);
    }
  }
  auto value = [&](IdentitySide const& side) {
    return eval_omega_term(s, side.term, side.iterated ? at_omega : assignment);
  };
  return {value(id.lhs), value(id.rhs)};
}

namespace {

// Straight-line code for a set of terms with shared subterms merged.
enum class Op { Load, Mul, Omega, OmegaMinusOne, OmegaPlusOne };

struct Instr {
  Op op;
  char var;
  int a;
  int b;
};

class Program {
 public:
  int add(OmegaTerm const& t) {
    using Kind = OmegaTerm::Kind;
    switch (t.kind) {
      case Kind::Var:
        return intern({Op::Load, t.var, -1, -1});
      case Kind::Product: {
        int acc = add(t.children.front());
        for (std::size_t i = 1; i < t.children.size(); ++i) {
          acc = intern({Op::Mul, 0, acc, add(t.children[i])});
        }
        return acc;
      }
      case Kind::Omega:
        return intern({Op::Omega, 0, add(t.children.front()), -1});
      case Kind::OmegaMinusOne:
        return intern({Op::OmegaMinusOne, 0, add(t.children.front()), -1});
      case Kind::OmegaPlusOne:
        return intern({Op::OmegaPlusOne, 0, add(t.children.front()), -1});
    }
    return -1;
  }

  std::vector<Instr> const& code() const { return code_; }

 private:
  int intern(Instr in) {
    auto key = std::make_tuple(static_cast<int>(in.op), in.var, in.a, in.b);
    auto [it, fresh] = memo_.emplace(key, static_cast<int>(code_.size()));
    if (fresh) {
      code_.push_back(in);
    }
    return it->second;
  }

  std::vector<Instr> code_;
  std::map<std::tuple<int, char, int, int>, int> memo_;
};

// Value of a variable for a batch: one element for every slot, or a column.
struct Input {
  ElementId scalar = kNoElement;
  ElementId const* column = nullptr;
};

// Registers hold either a constant or a column of count values.
class Machine {
 public:
  Machine(FiniteSemigroup const& s, Program const& p, std::size_t count)
      : s_(s), p_(p), count_(count), constant_(p.code().size()), scalar_(p.code().size()),
        data_(p.code().size()), storage_(p.code().size()) {}

  void run(std::map<char, Input> const& inputs) {
    auto const& k = kernels::active();
    auto table = s_.table();
    std::size_t n = s_.order();
    for (std::size_t i = 0; i < p_.code().size(); ++i) {
      Instr const& in = p_.code()[i];
      if (in.op == Op::Load) {
        Input const& src = inputs.at(in.var);
        constant_[i] = src.column == nullptr;
        scalar_[i] = src.scalar;
        data_[i] = src.column;
        continue;
      }
      if (in.op == Op::Mul) {
        bool ca = constant_[in.a];
        bool cb = constant_[in.b];
        constant_[i] = ca && cb;
        if (ca && cb) {
          scalar_[i] = s_(scalar_[in.a], scalar_[in.b]);
          continue;
        }
        ElementId* out = column(i);
        if (ca) {
          k.gather(s_.row(scalar_[in.a]).data(), data_[in.b], out, count_);
        } else if (cb) {
          k.gather(s_.column(scalar_[in.b]).data(), data_[in.a], out, count_);
        } else {
          k.table_product(table.data(), n, data_[in.a], data_[in.b], out, count_);
        }
        continue;
      }
      auto const& lookup = in.op == Op::Omega           ? s_.omega_table()
                           : in.op == Op::OmegaMinusOne ? s_.omega_minus_one_table()
                                                        : s_.omega_plus_one_table();
      constant_[i] = constant_[in.a];
      if (constant_[i]) {
        scalar_[i] = lookup[scalar_[in.a]];
      } else {
        k.gather(lookup.data(), data_[in.a], column(i), count_);
      }
    }
  }

  ElementId at(int reg, std::size_t slot) const {
    return constant_[reg] ? scalar_[reg] : data_[reg][slot];
  }

 private:
  ElementId* column(std::size_t i) {
    storage_[i].resize(count_);
    data_[i] = storage_[i].data();
    return storage_[i].data();
  }

  FiniteSemigroup const& s_;
  Program const& p_;
  std::size_t count_;
  std::vector<char> constant_;
  std::vector<ElementId> scalar_;
  std::vector<ElementId const*> data_;
  std::vector<std::vector<ElementId>> storage_;
};

// For every node of a functional graph, the image under the ω-power of the
// map: the point reached after the least multiple of the period that is at
// least the distance to the cycle.
void omega_points(std::vector<std::uint32_t> const& succ, std::vector<std::uint32_t>& out) {
  std::size_t count = succ.size();
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::vector<std::uint8_t> color(count, 0);
  std::vector<std::uint32_t> depth(count, 0), entry(count, kNone), pos(count, 0),
      start(count, 0), len(count, 0), where(count, 0);
  std::vector<std::uint32_t> cycles;
  std::vector<std::uint32_t> path;
  for (std::uint32_t v = 0; v < count; ++v) {
    if (color[v] != 0) {
      continue;
    }
    path.clear();
    std::uint32_t u = v;
    while (color[u] == 0) {
      color[u] = 1;
      where[u] = static_cast<std::uint32_t>(path.size());
      path.push_back(u);
      u = succ[u];
    }
    std::size_t tree_end = path.size();
    if (color[u] == 1) {
      std::size_t j = where[u];
      auto p = static_cast<std::uint32_t>(path.size() - j);
      auto offset = static_cast<std::uint32_t>(cycles.size());
      for (std::size_t k = j; k < path.size(); ++k) {
        std::uint32_t c = path[k];
        cycles.push_back(c);
        pos[c] = static_cast<std::uint32_t>(k - j);
        start[c] = offset;
        len[c] = p;
        entry[c] = c;
        color[c] = 2;
      }
      tree_end = j;
    }
    for (std::size_t k = tree_end; k-- > 0;) {
      std::uint32_t w = path[k];
      depth[w] = depth[succ[w]] + 1;
      entry[w] = entry[succ[w]];
      color[w] = 2;
    }
  }
  out.resize(count);
  for (std::uint32_t v = 0; v < count; ++v) {
    std::uint32_t e = entry[v];
    std::uint32_t p = len[e];
    std::uint32_t back = depth[v] % p;
    out[v] = cycles[start[e] + (pos[e] + p - back) % p];
  }
}

constexpr std::size_t kMaxStates = std::size_t{1} << 24;

}  // namespace

std::optional<IdentityViolation> find_violation(FiniteSemigroup const& s,
                                                IteratedIdentity const& id) {
  std::size_t n = s.order();
  auto moving = moving_variables(id.endo);
  auto all = id.variables();

  // Batch over the moving variables, or over up to two variables of an
  // ordinary identity; enumerate the rest.
  std::vector<char> batch = moving;
  if (batch.empty()) {
    for (char v : all) {
      if (batch.size() < 2) {
        batch.push_back(v);
      }
    }
  }
  std::vector<char> params;
  for (char v : all) {
    if (std::find(batch.begin(), batch.end(), v) == batch.end()) {
      params.push_back(v);
    }
  }

  std::size_t count = 1;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    count *= n;
    if (count > kMaxStates) {
      throw Error(ErrorKind::SizeBudgetExceeded, "too many states for identity check");
    }
  }

  // coords[i][state] is the value of batch[i]; state = sum coords[i] n^i.
  std::vector<std::vector<ElementId>> coords(batch.size(), std::vector<ElementId>(count));
  for (std::size_t state = 0; state < count; ++state) {
    std::size_t rest = state;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      coords[i][state] = static_cast<ElementId>(rest % n);
      rest /= n;
    }
  }

  Program images;
  std::vector<int> image_regs;
  for (char v : moving) {
    image_regs.push_back(images.add(id.endo.images.at(v)));
  }
  Program sides;
  int lhs_reg = sides.add(id.lhs.term);
  int rhs_reg = sides.add(id.rhs.term);
  Program sides_omega;
  int lhs_omega_reg = sides_omega.add(id.lhs.term);
  int rhs_omega_reg = sides_omega.add(id.rhs.term);

  Machine image_machine(s, images, count);
  Machine plain(s, sides, count);
  Machine iterated(s, sides_omega, count);
  std::vector<std::uint32_t> succ(moving.empty() ? 0 : count);
  std::vector<std::uint32_t> omega_state;
  std::vector<std::vector<ElementId>> omega_coords(batch.size(), std::vector<ElementId>(count));
  bool needs_omega = !moving.empty() && (id.lhs.iterated || id.rhs.iterated);

  std::vector<ElementId> values(params.size(), 0);
  while (true) {
    std::map<char, Input> inputs;
    for (std::size_t i = 0; i < params.size(); ++i) {
      inputs[params[i]].scalar = values[i];
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      inputs[batch[i]].column = coords[i].data();
    }

    if (needs_omega) {
      image_machine.run(inputs);
      std::fill(succ.begin(), succ.end(), 0);
      std::size_t scale = 1;
      for (std::size_t i = 0; i < moving.size(); ++i) {
        for (std::size_t state = 0; state < count; ++state) {
          succ[state] += static_cast<std::uint32_t>(image_machine.at(image_regs[i], state) * scale);
        }
        scale *= n;
      }
      omega_points(succ, omega_state);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        for (std::size_t state = 0; state < count; ++state) {
          omega_coords[i][state] = coords[i][omega_state[state]];
        }
      }
    }

    plain.run(inputs);
    if (needs_omega) {
      std::map<char, Input> at_omega = inputs;
      for (std::size_t i = 0; i < batch.size(); ++i) {
        at_omega[batch[i]].column = omega_coords[i].data();
      }
      iterated.run(at_omega);
    }
    auto side_value = [&](bool is_iterated, int reg, int omega_reg, std::size_t state) {
      return is_iterated && needs_omega ? iterated.at(omega_reg, state) : plain.at(reg, state);
    };
    for (std::size_t state = 0; state < count; ++state) {
      ElementId l = side_value(id.lhs.iterated, lhs_reg, lhs_omega_reg, state);
      ElementId r = side_value(id.rhs.iterated, rhs_reg, rhs_omega_reg, state);
      if (l != r) {
        IdentityViolation out{{}, l, r};
        for (std::size_t i = 0; i < params.size(); ++i) {
          out.assignment[params[i]] = values[i];
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
          out.assignment[batch[i]] = coords[i][state];
        }
        return out;
      }
    }

    std::size_t k = 0;
    while (k < values.size() && ++values[k] == n) {
      values[k++] = 0;
    }
    if (k == values.size()) {
      break;
    }
  }
  return std::nullopt;
}

bool check_identity(FiniteSemigroup const& s, IteratedIdentity const& id) {
  return !find_violation(s, id).has_value();
}

// ---------------------------------------------------------------------------
// Bases

namespace {

IteratedIdentity iterated_pair(std::string_view x_image, std::string_view y_image) {
  IteratedIdentity id;
  id.endo.images.emplace('x', parse_term(x_image));
  id.endo.images.emplace('y', parse_term(y_image));
  id.lhs = {OmegaTerm::variable('x'), true};
  id.rhs = {OmegaTerm::variable('y'), true};
  return id;
}

}  // namespace

IteratedIdentity mn_identity() { return iterated_pair("(xzy)t(yzx)", "(yzx)t(xzy)"); }

IteratedIdentity tm_identity() { return iterated_pair("xy", "yx"); }

std::vector<IteratedIdentity> nilpotent_group_basis() {
  IteratedIdentity collapse;
  collapse.endo.images.emplace('x', parse_term("x^w-1 y^w-1 x y"));
  collapse.lhs = {OmegaTerm::variable('x'), true};
  collapse.rhs = {parse_term("x^w"), false};
  return {collapse, plain_identity(parse_term("x^w y"), parse_term("y")),
          plain_identity(parse_term("y x^w"), parse_term("y"))};
}

IteratedIdentity block_group_identity() {
  return plain_identity(parse_term("(x^w y^w)^w"), parse_term("(y^w x^w)^w"));
}

IteratedIdentity aperiodic_identity() {
  return plain_identity(parse_term("x^w"), parse_term("x^w+1"));
}

IteratedIdentity idempotents_commute_identity() {
  return plain_identity(parse_term("x^w y^w"), parse_term("y^w x^w"));
}

bool has_basis(Property p) {
  return p != Property::NT && p != Property::NDF12 && p != Property::Inverse;
}

namespace {

bool satisfies_all(FiniteSemigroup const& s, std::vector<IteratedIdentity> const& ids) {
  return std::all_of(ids.begin(), ids.end(),
                     [&](IteratedIdentity const& id) { return check_identity(s, id); });
}

bool bg_nil_by_basis(FiniteSemigroup const& s) {
  if (!check_identity(s, block_group_identity())) {
    return false;
  }
  auto basis = nilpotent_group_basis();
  for (auto const& g : maximal_subgroups(s)) {
    if (!satisfies_all(g, basis)) {
      return false;
    }
  }
  return true;
}

bool eunng_by_basis(FiniteSemigroup const& s) {
  auto id = mn_identity();
  std::set<std::vector<ElementId>> seen;
  for (ElementId a = 0; a < s.order(); ++a) {
    for (ElementId b = a; b < s.order(); ++b) {
      std::vector<ElementId> gens{a, b};
      auto elements = closure_within(s, gens);
      if (!seen.insert(elements).second) {
        continue;
      }
      if (!check_identity(restrict_to(s, std::move(elements)).semigroup, id)) {
        return false;
      }
    }
  }
  return true;
}

bool pe_by_basis(FiniteSemigroup const& s) {
  if (!bg_nil_by_basis(s)) {
    return false;
  }
  for (ElementId x = 0; x < s.order(); ++x) {
    for (ElementId z = 0; z < s.order(); ++z) {
      auto limit = limit_pair(s, x, z, z, z, Schedule::PowersWithUnitPrefix);
      if (limit.lambda != limit.rho) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool satisfies_basis(FiniteSemigroup const& s, Property p) {
  switch (p) {
    case Property::MN:
    case Property::WMN:
      return check_identity(s, mn_identity());
    case Property::TM:
      return check_identity(s, tm_identity());
    case Property::EUNNG:
      return eunng_by_basis(s);
    case Property::BG:
      return check_identity(s, block_group_identity());
    case Property::BGNil:
      return bg_nil_by_basis(s);
    case Property::PE:
      return pe_by_basis(s);
    case Property::Aperiodic:
      return check_identity(s, aperiodic_identity());
    case Property::IdempotentsCommute:
      return check_identity(s, idempotents_commute_identity());
    case Property::NT:
    case Property::NDF12:
    case Property::Inverse:
      break;
  }
  throw Error(ErrorKind::Unsupported, std::string("no identity basis for ") + to_string(p));
}

}  // namespace malcev
