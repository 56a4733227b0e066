#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "malcev/semigroup.hpp"

namespace malcev::zoo {

struct ZooEntry {
  std::string name;
  int parameter = 0;
  FiniteSemigroup semigroup;
  // Distinguished elements by their usual letters (u, w1, x, ...).
  std::map<std::string, ElementId> labels;
  // Idempotents of the M0({1}, n, n; I_n) ideal, point j first at j - 1.
  // Empty when there is no such ideal.
  std::vector<ElementId> ideal_idempotents;
  std::string construction;

  ElementId operator[](std::string const& label) const;
};

// Each builder validates its construction and caches the result.
ZooEntry const& f7();
ZooEntry const& f12();
ZooEntry const& n1();
ZooEntry const& n2();
ZooEntry const& n3();
ZooEntry const& n4();
// n above the cap (2) is allowed only when allow_large is set.
ZooEntry const& n2n(int n, bool allow_large = false);
ZooEntry const& sprime();
ZooEntry const& lz2();
ZooEntry const& rz2();
ZooEntry const& c2();
ZooEntry const& s3();
ZooEntry const& c7c3();

// Builds without the caching or checks; used by tests that tamper with
// inputs.
FiniteSemigroup f12_from(std::string const& w1, std::string const& w2);

// Listing of the elements of N2 outside its ideal, in orbit notation.
std::vector<std::string> const& n2_top_listing();

std::vector<std::string> names();
// Throws InvalidArgument for unknown names.
ZooEntry const& by_name(std::string const& name, int parameter = 1,
                        bool allow_large = false);

enum class Color { Black, White };

// Boxes 1..2n, box 1 black and even boxes white; coloring[k] colours box
// 2k + 3 (the odd boxes after the first). Returns (p, q) with p dividing n
// such that boxes q, q + p, q + 2p, ... (indices mod 2n, 0 read as 2n)
// alternate in colour. Throws NoPairFound.
std::pair<int, int> choose_pair(int n, std::vector<Color> const& coloring);

}  // namespace malcev::zoo
