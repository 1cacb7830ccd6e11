#pragma once

#include <utility>
#include <vector>

#include "shifted/root.hpp"
#include "shifted/signed_permutation.hpp"
#include "shifted/tableau.hpp"
#include "shifted/words.hpp"

namespace shifted {

// The trapezoid shape Z(d,r) = (r+2d-1, r+2d-3, ..., r+3, r+1); it has
// d(r+d) boxes.
StrictPartition trapezoid(int d, int r);

// The least (d, r) with lambda contained in Z(d,r): d is the number of parts
// and r = max(0, max_i(lambda_i - 2(d-i) - 1)).
std::pair<int, int> min_trapezoid(const StrictPartition& lambda);

// w(i) = d+i for i <= r and -(i-r) for i > r; its length is d(r+d) and its
// inversion set is exactly the image of the trapezoid's root labeling.
SignedPermutation w_dr(int d, int r);

// The root labeling of Z(d,r): cell (i,j) carries
//   e_{d+1-i} - e_j   for j <= 0 (so e_{d+1-i} at j = 0, e_{d+1-i} + e_{-j}
//                      for j < 0),
//   e_{j+d} + e_{d+1-i}  for 0 < j <= r,
//   e_{d+1-i} - e_{j-r}  for j > r.
// It is a bijection from the boxes onto Inv(w_dr(d,r)).
Root root_label(int d, int r, const Cell& c);

// root_label extended to the margin boxes: (i, i-d-1) carries 2 e_{d+1-i}.
Root extended_root_label(int d, int r, const Cell& c);

// The insertion tableau shared by every reduced word of w_dr(d,r): entry j at
// (i,j) for j >= 0 and r-j for j < 0.
ShiftedTableau p_tableau_trapezoid(int d, int r);

// A shape lambda (exactly d positive parts) embedded in an ambient trapezoid
// Z(d,r), with the complement row data used by the padding maps:
//   mu_i = Z(d,r)_i - lambda_i, sigma_i = mu_1 + ... + mu_i,
//   nu_i = min(mu_i, ..., mu_d).
struct TrapezoidContext {
    int d = 0;
    int r = 0;
    StrictPartition lambda;
    std::vector<int> mu;     // size d, mu[i-1] = mu_i
    std::vector<int> sigma;  // size d+1, sigma[0] = 0
    std::vector<int> nu;     // size d, nu[i-1] = nu_i

    int n() const { return d + r; }
    int cell_count() const { return d * (d + r); }  // |Z(d,r)|
    int lambda_size() const { return lambda.size(); }
};

// Context with the minimal ambient trapezoid / with explicit (d, r).
TrapezoidContext make_context(const StrictPartition& lambda);
TrapezoidContext make_context(const StrictPartition& lambda, int d, int r);

// The complement word: for each row i = 1..d in turn, the run
// (d+r-i-mu_i+1, ..., d+r-i); its length is |Z(d,r)| - |lambda|.
Word a_lambda(const TrapezoidContext& ctx);

// w_dr(d,r) shortened by the complement word, multiplied off from its end:
// w_dr * s_{a_m} * ... * s_{a_1} over the reversed letters of a_lambda. Its
// length always equals |lambda|.
SignedPermutation w_lambda(const TrapezoidContext& ctx);

// The insertion tableau shared by every reduced word of w_lambda: entry j at
// (i,j) for j >= 0 and r - j - nu_{d+1+j} for j < 0, on shape lambda.
ShiftedTableau p_lambda(const TrapezoidContext& ctx);

// w_lambda built geometrically: the lattice path bordering lambda inside the
// ambient triangle has d+r upsteps and d+r downsteps; upstep t is preceded by
// no downsteps for t <= r and by min_{i' <= d+1-i}(lambda_{i'} + i' - d) - 1
// of them for t = r+i. Upsteps are labeled d+r, d+r-1, ..., d+1, -1, ..., -d
// in order, each label transported to its matching downstep (last-in
// first-out), and the downstep labels read off in order form the window.
SignedPermutation w_lambda_via_path(const TrapezoidContext& ctx);

}  // namespace shifted
