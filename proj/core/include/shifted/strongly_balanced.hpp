#pragma once

#include "shifted/tableau.hpp"

namespace shifted {

// Evaluates the condition families characterizing balancedness on a trapezoid
// Z(d,r) directly through the root labeling (writing B(alpha) for the entry
// at the box labeled alpha, indices 1 <= j < i <= d < p, q <= d+r):
//   (1)  B(e_i - e_j) lies strictly between B(e_i - e_k) and B(e_k - e_j)
//        for every j < k < i;
//   (2a) B(e_i + e_p) < B(e_i + e_q) for every q > p;
//   (2b) B(e_i + e_p) lies strictly between B(e_i - e_k) and B(e_k + e_p)
//        for every k < i;
//   (3a) B(e_i) < B(e_i + e_q) for every q > d;
//   (3b) B(e_i) lies strictly between B(e_i - e_k) and B(e_k) for every k < i;
//   (4a) B(e_i + e_j) < B(e_i + e_q) for every q > d;
//   (4b) B(e_i + e_j) < B(e_j + e_q) for every q > d;
//   (4c) B(e_i + e_j) lies strictly between B(e_i - e_k) and B(e_j + e_k)
//        for every integer -j < k < i, the roots read over signed indices
//        (e_0 = 0, e_{-m} = -e_m) and through the extended labeling, so that
//        k = j compares against the margin value at the doubled label 2 e_j.
// The tableau must be a bijective filling of a trapezoid shape.
bool check_strongly_balanced(const ShiftedTableau& t, int d, int r);

}  // namespace shifted
