#pragma once

#include <gmpxx.h>

#include <vector>

#include "shifted/strict_partition.hpp"

namespace shifted {

// The hook of c = (i, j) in D(lambda):
//   j >= 0: the arm (boxes right of c in row i), the leg (boxes below c in
//           column j), and c itself.
//   j < 0:  arm, leg, c itself, plus every box of the mirror row d+j+1
//           (disjoint from the rest).
// Returned row-major sorted.
std::vector<Cell> hook(const StrictPartition& lambda, const Cell& c);
int hook_length(const StrictPartition& lambda, const Cell& c);

// The extended hook additionally contains the margin box (d+j+1, j) when
// j < 0 (the margin box of the mirror row, which sits in column j); for
// j >= 0 it equals the hook.
std::vector<Cell> extended_hook(const StrictPartition& lambda, const Cell& c);
int extended_hook_length(const StrictPartition& lambda, const Cell& c);

// The prescribed position (by largeness) a balanced filling's entry must take
// inside its extended hook:
//   rank(i, j) = lambda_i - d + i - j                          for j >= 0,
//   rank(i, j) = lambda_i - d + i + lambda_{d+1+j} + j + 1     for j < 0.
int rank(const StrictPartition& lambda, const Cell& c);

// The same quantity obtained by counting boxes instead of evaluating the
// closed form: for j >= 0 the number of row-i boxes of the hook; for j < 0,
// 2 plus the number of hook boxes with strictly positive column. Used as a
// cross-check oracle for rank().
int rank_by_count(const StrictPartition& lambda, const Cell& c);

// N! / prod of hook lengths, computed exactly; the division is asserted to
// leave no remainder.
mpz_class hook_length_formula_count(const StrictPartition& lambda);

}  // namespace shifted
