#include "shifted/words.hpp"

#include <string>

#include "shifted/errors.hpp"
#include "shifted/root.hpp"

namespace shifted {

void validate_word(const Word& word) {
    if (word.rank < 0) throw UsageError("word: negative rank");
    for (int a : word.letters)
        if (a < 0 || a >= word.rank)
            throw UsageError("word: letter " + std::to_string(a) + " out of range for rank " +
                             std::to_string(word.rank));
}

SignedPermutation word_to_perm(const Word& word) {
    validate_word(word);
    SignedPermutation w = SignedPermutation::identity(word.rank);
    for (int a : word.letters) w = w.mul_simple_right(a);
    return w;
}

bool is_reduced(const Word& word) {
    return length(word_to_perm(word)) == static_cast<int>(word.letters.size());
}

bool is_left_descent(const SignedPermutation& w, int a) {
    return !apply_root(w.inverse(), simple_root(w.n(), a)).positive;
}

namespace {

void enumerate_rec(const SignedPermutation& w, std::vector<int>& prefix,
                   const std::function<void(const Word&)>& visit) {
    bool any = false;
    for (int a = 0; a < w.n(); ++a) {
        if (!is_left_descent(w, a)) continue;
        any = true;
        prefix.push_back(a);
        enumerate_rec(w.mul_simple_left(a), prefix, visit);
        prefix.pop_back();
    }
    if (!any) visit(Word{w.n(), prefix});  // w == identity
}

}  // namespace

void for_each_reduced_word(const SignedPermutation& w,
                           const std::function<void(const Word&)>& visit,
                           std::size_t max_length) {
    if (static_cast<std::size_t>(length(w)) > max_length)
        throw UsageError("reduced-word enumeration: length " + std::to_string(length(w)) +
                         " exceeds the cap " + std::to_string(max_length) +
                         " (raise it with --max)");
    std::vector<int> prefix;
    enumerate_rec(w, prefix, visit);
}

std::vector<Word> enumerate_reduced_words(const SignedPermutation& w, std::size_t max_length) {
    std::vector<Word> out;
    for_each_reduced_word(w, [&](const Word& word) { out.push_back(word); }, max_length);
    return out;
}

}  // namespace shifted
