#pragma once

#include "shifted/tableau.hpp"

namespace shifted {

// True iff for every box c, the entry t(c) is the rank(lambda, c)-th largest
// value in the multiset of extended-filling values over the extended hook of
// c, counting multiplicity: rank-of-value = 1 + #{entries strictly greater}.
bool is_balanced(const ShiftedTableau& t);

// Deliberately naive variant recomputing every hook multiset from scratch via
// extended_filling; kept as a cross-check oracle for is_balanced.
bool is_balanced_naive(const ShiftedTableau& t);

}  // namespace shifted
