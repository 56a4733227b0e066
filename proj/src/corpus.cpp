#include "malcev/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "malcev/error.hpp"

namespace malcev {

namespace {

constexpr ElementId kUnset = kNoElement;

class Enumerator {
 public:
  explicit Enumerator(std::size_t n) : n_(n), table_(n * n, kUnset) {
    perms_.emplace_back(n);
    std::iota(perms_[0].begin(), perms_[0].end(), 0u);
    while (true) {
      auto next = perms_.back();
      if (!std::next_permutation(next.begin(), next.end())) {
        break;
      }
      perms_.push_back(std::move(next));
    }
  }

  std::set<std::vector<ElementId>> run() {
    fill(0);
    return found_;
  }

 private:
  ElementId at(ElementId a, ElementId b) const { return table_[a * n_ + b]; }

  bool consistent() const {
    for (ElementId x = 0; x < n_; ++x) {
      for (ElementId y = 0; y < n_; ++y) {
        ElementId xy = at(x, y);
        if (xy == kUnset) {
          continue;
        }
        for (ElementId z = 0; z < n_; ++z) {
          ElementId yz = at(y, z);
          if (yz == kUnset) {
            continue;
          }
          ElementId l = at(xy, z);
          ElementId r = at(x, yz);
          if (l != kUnset && r != kUnset && l != r) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void fill(std::size_t cell) {
    if (cell == table_.size()) {
      found_.insert(canonical());
      return;
    }
    for (ElementId v = 0; v < n_; ++v) {
      table_[cell] = v;
      if (consistent()) {
        fill(cell + 1);
      }
    }
    table_[cell] = kUnset;
  }

  std::vector<ElementId> canonical() const {
    std::vector<ElementId> best;
    std::vector<ElementId> img(n_ * n_);
    for (auto const& p : perms_) {
      for (ElementId a = 0; a < n_; ++a) {
        for (ElementId b = 0; b < n_; ++b) {
          img[p[a] * n_ + p[b]] = p[at(a, b)];
        }
      }
      if (best.empty() || img < best) {
        best = img;
      }
    }
    return best;
  }

  std::size_t n_;
  std::vector<ElementId> table_;
  std::vector<std::vector<ElementId>> perms_;
  std::set<std::vector<ElementId>> found_;
};

}  // namespace

std::vector<FiniteSemigroup> semigroups_of_order(std::size_t order) {
  if (order == 0 || order > 4) {
    throw Error(ErrorKind::InvalidArgument, "corpus orders are 1 to 4");
  }
  std::vector<FiniteSemigroup> out;
  for (auto const& t : Enumerator(order).run()) {
    out.push_back(FiniteSemigroup::trusted(order, t));
  }
  return out;
}

std::vector<FiniteSemigroup> small_semigroups(std::size_t max_order) {
  std::vector<FiniteSemigroup> out;
  for (std::size_t k = 1; k <= max_order; ++k) {
    auto part = semigroups_of_order(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace malcev
