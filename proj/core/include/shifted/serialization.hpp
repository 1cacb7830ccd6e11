#pragma once

#include <string>

#include "shifted/signed_permutation.hpp"
#include "shifted/tableau.hpp"
#include "shifted/words.hpp"

namespace shifted {

// Shape text: comma-separated parts, e.g. "6,2,1".
std::string shape_to_text(const StrictPartition& lambda);
StrictPartition parse_shape(const std::string& text);

// Tableau text: one line per row, space-separated entries, row i indented by
// i-1 placeholder dots (one per column the row is shifted past row 1's
// start). Dots are ignored on parse; the shape is read off the row lengths.
std::string tableau_to_text(const ShiftedTableau& t);
ShiftedTableau parse_tableau_text(const std::string& text);

// Compact single-line tableau form: rows separated by ';', entries by ','
// (e.g. "1,2,3,5,6,9;4,7;8").
std::string tableau_to_compact(const ShiftedTableau& t);
ShiftedTableau parse_tableau_compact(const std::string& text);

// Window text: space-separated signed values, e.g. "-2 -1 4 -3 5".
std::string window_to_text(const SignedPermutation& w);
SignedPermutation parse_window(const std::string& text);

// Word text: space-separated letters; a contiguous digit string is accepted
// as shorthand when every letter is a single digit.
std::string word_to_text(const Word& word);
Word parse_word(const std::string& text, int rank);

}  // namespace shifted
