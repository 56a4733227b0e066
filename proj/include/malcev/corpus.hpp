#pragma once

#include <cstddef>
#include <vector>

#include "malcev/semigroup.hpp"

namespace malcev {

// All semigroups of the given order up to isomorphism (not
// anti-isomorphism), each as the lexicographically least of its relabelled
// tables, in increasing table order.
std::vector<FiniteSemigroup> semigroups_of_order(std::size_t order);

// semigroups_of_order(1) .. semigroups_of_order(max_order), concatenated.
std::vector<FiniteSemigroup> small_semigroups(std::size_t max_order);

}  // namespace malcev
