#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "shifted/tableau.hpp"
#include "shifted/words.hpp"

namespace shifted {

// An insertion state: P is a letter tableau whose rows are unimodal (strictly
// decreasing then strictly increasing, the minimum belonging to the decreasing
// part), Q is a recording tableau of the same shape.
struct InsertionPair {
    ShiftedTableau p;
    ShiftedTableau q;
    friend auto operator<=>(const InsertionPair&, const InsertionPair&) = default;
};

// Length of the longest strictly-decreasing-then-strictly-increasing
// subsequence (the valley element shared by both arms).
int lus_len(const std::vector<int>& word);

// Strictly decreasing then strictly increasing as a whole sequence.
bool is_unimodal_row(const std::vector<int>& row);

// Canonical valley split: the minimum closes the decreasing part.
std::pair<std::vector<int>, std::vector<int>> unimodal_split(const std::vector<int>& row);

// Rows read left to right, bottom row first. Rank is one past the largest
// letter (0 for an empty tableau).
Word reading_word(const ShiftedTableau& t);

// Validates an externally supplied state: matching shapes, unimodal P rows,
// standard bijective Q.
void validate_insertion_pair(const InsertionPair& state);

// Row-inserts one letter, bumping down the rows by the case analysis
// (append when the row stays unimodal; pass 0 through unchanged when the row
// contains a scattered 1,0,1; otherwise displace within the increasing arm,
// then within the decreasing arm, and carry the displaced letter down). When
// the letter settles in a new box, Q records the stamp there. Rejects states
// whose reading word the letter cannot reducedly extend.
InsertionPair insert_letter(const InsertionPair& state, int letter, int stamp);

// Folds insert_letter over the word with stamps 1..m; rejects non-reduced
// words. The resulting P has unimodal rows with reduced reading word and Q is
// standard of the same shape.
InsertionPair kraskiewicz_insert(const Word& word);

// Exact inverse of one insert_letter step: removes the box holding Q's
// largest stamp, unwinds the row cases upward (all locally consistent
// preimages are enumerated, each checked by replaying the forward step), and
// keeps the unique candidate whose reading word multiplies back correctly.
// Returns the shrunk state and the recovered letter.
std::pair<InsertionPair, int> reverse_insert(const InsertionPair& state);

// True iff the reading word of t is a reduced word of w and every row is a
// longest unimodal subsequence of the reading word of the rows from the
// bottom up to and including it.
bool is_sdt(const ShiftedTableau& t, const SignedPermutation& w);

}  // namespace shifted
