#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "shifted/signed_permutation.hpp"

namespace shifted {

// A word in the simple reflections s_0 (sign flip), s_1, ..., s_{n-1}
// (adjacent swaps) of rank n.
struct Word {
    int rank = 0;
    std::vector<int> letters;
    friend auto operator<=>(const Word&, const Word&) = default;
};

// Letters must lie in [0, rank).
void validate_word(const Word& word);

// s_{a_1} s_{a_2} ... s_{a_m} (folded by right multiplication).
SignedPermutation word_to_perm(const Word& word);

// True iff length(word_to_perm(word)) == |letters|.
bool is_reduced(const Word& word);

// True iff length(s_a w) < length(w), i.e. a can start a reduced word of w.
bool is_left_descent(const SignedPermutation& w, int a);

// Visits every reduced word of w exactly once, in lexicographic order
// (recursion over left descents, smallest first letter first). Refuses
// lengths beyond max_length.
void for_each_reduced_word(const SignedPermutation& w,
                           const std::function<void(const Word&)>& visit,
                           std::size_t max_length = 16);
std::vector<Word> enumerate_reduced_words(const SignedPermutation& w,
                                          std::size_t max_length = 16);

}  // namespace shifted
