#pragma once

#include <string>
#include <string_view>

#include "malcev/semigroup.hpp"

namespace malcev {

// The .sgp text format. '#' starts a comment. The header line is one of
//   cayley <order>
//   transformations <degree>
//   rees0 <n> <m>
//   rees <n> <m>
// A cayley body has <order> rows of <order> 0-based ids, then optional
// "zero <id>", "identity <id>" and "names <tokens>" lines. A
// transformations body has one generator per line, <degree> 1-based images
// with 0 for θ. A rees body is a line "group", a nested cayley block, then
// <m> lines of <n> entries, 0 for θ or a 1-based group element.
// Throws ParseError with the offending line.
FiniteSemigroup parse_sgp(std::string_view text);
FiniteSemigroup read_sgp(std::string const& path);

// Cayley form, with names when they are valid tokens.
std::string write_sgp(FiniteSemigroup const& s);
void write_sgp_file(FiniteSemigroup const& s, std::string const& path);

}  // namespace malcev
