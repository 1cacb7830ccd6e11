#pragma once

#include <functional>
#include <vector>

#include "shifted/tableau.hpp"

namespace shifted {

// Visits every standard tableau of the shape exactly once, in lexicographic
// order by the sequence of cell positions of 1..N (values grown 1 to N over
// addable corners, candidate cells tried row-major). Return false from the
// visitor to stop early.
void for_each_syt(const StrictPartition& lambda,
                  const std::function<bool(const ShiftedTableau&)>& visit);
std::vector<ShiftedTableau> enumerate_syt(const StrictPartition& lambda);

// Visits every balanced bijective filling, exactly once, deterministic order.
// Places values N down to 1; a value is accepted at a box only if it lands at
// exactly its prescribed rank among the already-placed extended-hook entries
// (exact at placement time: all later values are strictly smaller, so the
// strictly-greater count of the box is final). Refuses N beyond the cap.
void for_each_bs_bruteforce(const StrictPartition& lambda,
                            const std::function<bool(const ShiftedTableau&)>& visit,
                            int cap = 9);
std::vector<ShiftedTableau> enumerate_bs_bruteforce(const StrictPartition& lambda, int cap = 9);

}  // namespace shifted
