#pragma once

#include <compare>
#include <vector>

#include "shifted/root.hpp"
#include "shifted/words.hpp"

namespace shifted {

// A sequence of distinct positive roots (no doubled labels), typically the
// roots crossed along a reduced word.
struct ReflectionOrder {
    int rank = 0;
    std::vector<Root> roots;
    friend auto operator<=>(const ReflectionOrder&, const ReflectionOrder&) = default;
};

// gamma_j = (s_{a_1} ... s_{a_{j-1}})(alpha_{a_j}); rejects non-reduced words
// (detected by a crossed root coming out negative). The root set equals
// Inv(word_to_perm(word)).
ReflectionOrder reflection_order(const Word& word);

// The unique word with reflection_order(word) == order, built step by step:
// a_j is the simple index with (v_{j-1})^{-1} gamma_j = alpha_{a_j}. Fails
// with a diagnostic naming the offending step if some pullback is not simple
// (the input is not a valid reflection order).
Word reflection_order_to_word(const ReflectionOrder& order);

// True iff order (which must cover Inv(w) exactly, as a set) satisfies the
// crossing condition on all triples alpha, beta, alpha+beta of positive roots
// with alpha and alpha+beta in Inv(w):
//   beta not in Inv(w): alpha appears before alpha+beta;
//   beta in Inv(w):     alpha+beta appears strictly between alpha and beta.
bool is_valid_reflection_order(const ReflectionOrder& order, const SignedPermutation& w);

}  // namespace shifted
