#pragma once

#include <vector>

#include "shifted/signed_permutation.hpp"

namespace shifted {

// True iff the pattern v occurs in w: some index subset i_1 < ... < i_m has
// sign-matching values (w(i_j) and v(j) share their sign) whose absolute
// values are in the same relative order as |v(1)|, ..., |v(m)|.
bool pattern_embeds(const SignedPermutation& w, const SignedPermutation& v);

// The 18 signed patterns whose joint avoidance characterizes having a unique
// standard decomposition tableau. The characterization is additionally
// cross-checked operationally in the test suite: a signed permutation avoids
// all 18 iff all of its reduced words insert to one and the same P tableau.
const std::vector<SignedPermutation>& vexillary_patterns();

// True iff w avoids every pattern in vexillary_patterns().
bool is_vexillary(const SignedPermutation& w);

}  // namespace shifted
