#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "malcev/error.hpp"
#include "malcev/transformation.hpp"

namespace malcev {

inline constexpr ElementId kNoElement = 0xFFFFFFFFu;

struct GreenData;

// A finite semigroup given by its full multiplication table. Elements are
// 0 .. order-1. Values are immutable and cheap to copy; derived data such as
// Green's relations is computed once on first use and shared by copies.
class FiniteSemigroup {
 public:
  // Validates the table (entries in range, associativity) and any declared
  // zero or identity. Undeclared zero/identity are detected.
  static FiniteSemigroup from_table(std::size_t order,
                                    std::vector<ElementId> table,
                                    std::optional<ElementId> zero = {},
                                    std::optional<ElementId> identity = {},
                                    std::vector<std::string> names = {});
  static FiniteSemigroup from_rows(std::vector<std::vector<ElementId>> const& rows,
                                   std::optional<ElementId> zero = {},
                                   std::optional<ElementId> identity = {},
                                   std::vector<std::string> names = {});

  // For builders whose output is associative by construction: checks range
  // only.
  static FiniteSemigroup trusted(std::size_t order, std::vector<ElementId> table,
                                 std::vector<std::string> names = {});

  std::size_t order() const noexcept;

  ElementId product(ElementId a, ElementId b) const noexcept {
    return table_[a * order_ + b];
  }
  ElementId operator()(ElementId a, ElementId b) const noexcept {
    return product(a, b);
  }

  std::span<ElementId const> table() const noexcept;
  std::span<ElementId const> row(ElementId a) const noexcept;
  // column(b)[a] == product(a, b)
  std::span<ElementId const> column(ElementId b) const noexcept;

  std::optional<ElementId> zero() const noexcept;
  std::optional<ElementId> identity() const noexcept;

  std::string const& name(ElementId a) const;
  std::vector<std::string> const& names() const noexcept;
  // Element with the given name, or kNoElement.
  ElementId find(std::string const& name) const;

  // Non-empty when the semigroup was generated by transformations; then
  // transformations()[a] is the transformation of element a.
  std::vector<Transformation> const& transformations() const noexcept;
  ElementId find(Transformation const& t) const;

  bool is_idempotent(ElementId a) const noexcept { return product(a, a) == a; }

  // Monogenic data: x^index == x^(index + period), both minimal.
  std::uint32_t index_of(ElementId x) const;
  std::uint32_t period_of(ElementId x) const;
  ElementId omega(ElementId x) const;
  ElementId omega_minus_one(ElementId x) const;
  ElementId omega_plus_one(ElementId x) const;
  // Whole arrays, indexed by element.
  std::vector<ElementId> const& omega_table() const;
  std::vector<ElementId> const& omega_minus_one_table() const;
  std::vector<ElementId> const& omega_plus_one_table() const;

  FiniteSemigroup with_names(std::vector<std::string> names) const;
  FiniteSemigroup with_transformations(std::vector<Transformation> ts) const;

  // Internal: lazily computed Green data.
  GreenData const& green(
      std::function<std::shared_ptr<GreenData const>(FiniteSemigroup const&)> const&
          compute) const;

 private:
  struct Data;
  FiniteSemigroup(std::shared_ptr<Data> data);
  void bind();
  Data& monogenic_data() const;

  std::shared_ptr<Data> data_;
  ElementId const* table_ = nullptr;
  std::size_t order_ = 0;
};

// Least triple (lexicographic) violating associativity, if any.
std::optional<std::array<ElementId, 3>> find_non_associative(
    std::span<ElementId const> table, std::size_t order);

std::optional<ElementId> find_zero(std::span<ElementId const> table,
                                   std::size_t order);
std::optional<ElementId> find_identity(std::span<ElementId const> table,
                                       std::size_t order);

struct Monogenic {
  std::uint32_t index;
  std::uint32_t period;
};

Monogenic monogenic(FiniteSemigroup const& s, ElementId x);
// x^k for k >= 1
ElementId power(FiniteSemigroup const& s, ElementId x, std::uint64_t k);
ElementId omega_power(FiniteSemigroup const& s, ElementId x);

// S with a fresh identity adjoined as the last element, even if S is a monoid.
FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);
// S with a fresh zero adjoined as the last element.
FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

// Sorted element set of the subsemigroup of s generated by gens.
std::vector<ElementId> closure_within(FiniteSemigroup const& s,
                                      std::span<ElementId const> gens);

struct Subsemigroup {
  FiniteSemigroup semigroup;
  // embedding[i] is the element of the parent corresponding to element i.
  std::vector<ElementId> embedding;
};

// Elements are numbered in increasing parent order.
Subsemigroup generated_subsemigroup(FiniteSemigroup const& s,
                                    std::span<ElementId const> gens);

// Requires elements to be closed under multiplication.
Subsemigroup restrict_to(FiniteSemigroup const& s,
                         std::vector<ElementId> elements);

// Element (a, b) has id a * |T| + b. Throws SizeBudgetExceeded above the
// product budget.
FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t,
                               std::optional<std::size_t> budget = {});

// Elements in breadth-first order of discovery, generators first.
FiniteSemigroup from_transformations(std::span<Transformation const> gens,
                                     std::optional<std::size_t> budget = {});

struct ReesMatrixSpec {
  FiniteSemigroup group;
  std::size_t n = 0;  // index set I
  std::size_t m = 0;  // index set Λ
  // Sandwich matrix, m rows of n entries: entry [lambda * n + i] is
  // p_{lambda i}, or nullopt for θ.
  std::vector<std::optional<ElementId>> sandwich;
  bool with_zero = true;
};

// Element (i; g; λ) has id (i * m + λ) * |G| + g; θ is last when present.
FiniteSemigroup from_rees(ReesMatrixSpec const& spec);
ElementId rees_element(ReesMatrixSpec const& spec, std::size_t i, ElementId g,
                       std::size_t lambda);

// The trivial group, its one element named "1".
FiniteSemigroup trivial_group();
// M^0({1}, n, n; I_n): element (1; i, j) for 1-based i, j.
ReesMatrixSpec identity_rees_spec(std::size_t n);

}  // namespace malcev
