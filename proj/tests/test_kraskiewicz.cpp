#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "shifted/errors.hpp"
#include "shifted/kraskiewicz.hpp"
#include "shifted/patterns.hpp"
#include "shifted/serialization.hpp"
#include "shifted/trapezoid.hpp"
#include "shifted/words.hpp"
#include "test_util.hpp"

using namespace shifted;
using testutil::tab;

TEST_CASE("unimodal rows and the canonical split") {
    CHECK(is_unimodal_row({4, 3, 0, 1, 2, 3, 4}));
    CHECK(is_unimodal_row({1, 0, 1}));
    CHECK(is_unimodal_row({0, 1, 2}));
    CHECK(is_unimodal_row({3, 2, 1}));
    CHECK(is_unimodal_row({7}));
    CHECK_FALSE(is_unimodal_row({1, 0, 1, 0}));
    CHECK_FALSE(is_unimodal_row({0, 0}));
    using Split = std::pair<std::vector<int>, std::vector<int>>;
    // the minimum belongs to the decreasing arm
    CHECK(unimodal_split({4, 3, 0, 1, 2}) == Split({4, 3, 0}, {1, 2}));
    CHECK(unimodal_split({0, 1, 2}) == Split({0}, {1, 2}));
    CHECK(unimodal_split({3, 2, 1}) == Split({3, 2, 1}, {}));
}

TEST_CASE("longest unimodal subsequence") {
    CHECK(lus_len({}) == 0);
    CHECK(lus_len({5}) == 1);
    CHECK(lus_len({2, 0, 1, 3}) == 4);
    CHECK(lus_len({0, 1, 0}) == 2);
    CHECK(lus_len({0, 1, 0, 1, 2, 1, 0, 1, 2, 3, 4, 2, 3, 1, 2}) == 7);
    // that word's insertion tableau has a first row of exactly that length
    auto pq = kraskiewicz_insert(parse_word("010121012342312", 5));
    CHECK(pq.p.shape().part(1) == 7);
}

TEST_CASE("single insertion steps") {
    // appending keeps a unimodal row in place
    InsertionPair s0{tab({2}, {{1, 0}}), tab({2}, {{1, 2}})};
    InsertionPair r0 = insert_letter(s0, 1, 3);
    CHECK(r0.p == tab({3}, {{1, 0, 1}}));
    CHECK(r0.q == tab({3}, {{1, 2, 3}}));
    // a bumped letter starts a new row
    InsertionPair s1{tab({2}, {{0, 1}}), tab({2}, {{1, 2}})};
    InsertionPair r1 = insert_letter(s1, 0, 3);
    CHECK(r1.p == tab({2, 1}, {{1, 0}, {0}}));
    CHECK(r1.q == tab({2, 1}, {{1, 2}, {3}}));
    // replacement first in the increasing arm, then in the decreasing arm
    InsertionPair s2{tab({4, 1}, {{1, 0, 1, 2}, {0}}), tab({4, 1}, {{1, 2, 3, 4}, {5}})};
    InsertionPair r2 = insert_letter(s2, 1, 6);
    CHECK(r2.p == tab({4, 2}, {{2, 0, 1, 2}, {0, 1}}));
    CHECK(r2.q == tab({4, 2}, {{1, 2, 3, 4}, {5, 6}}));
    // a 0 passes a row containing a scattered 1,0,1 unchanged
    InsertionPair s3{tab({3}, {{1, 0, 1}}), tab({3}, {{1, 2, 3}})};
    InsertionPair r3 = insert_letter(s3, 0, 4);
    CHECK(r3.p == tab({3, 1}, {{1, 0, 1}, {0}}));
    CHECK(r3.q == tab({3, 1}, {{1, 2, 3}, {4}}));
}

TEST_CASE("full insertion goldens") {
    auto pq1 = kraskiewicz_insert(parse_word("010121012342312", 5));
    CHECK(pq1.p == tab({7, 5, 3}, {{4, 3, 0, 1, 2, 3, 4}, {3, 0, 1, 2, 3}, {0, 1, 2}}));
    CHECK(pq1.q == tab({7, 5, 3}, {{1, 2, 4, 5, 9, 10, 11}, {3, 6, 8, 12, 13}, {7, 14, 15}}));
    auto pq2 = kraskiewicz_insert(parse_word("201012103412312", 5));
    CHECK(pq2.p == pq1.p);
    CHECK(pq2.q == tab({7, 5, 3}, {{1, 2, 3, 5, 6, 9, 10}, {4, 7, 11, 12, 13}, {8, 14, 15}}));
    CHECK(word_to_text(reading_word(pq1.p)) == "012301234301234");
    CHECK(word_to_perm(reading_word(pq1.p)) == w_dr(3, 2));
    CHECK(is_sdt(pq1.p, w_dr(3, 2)));
    CHECK(is_standard(pq1.q));
    CHECK_THROWS_AS(kraskiewicz_insert(Word{1, {0, 0}}), ValidationError);
    CHECK_THROWS_AS(kraskiewicz_insert(Word{3, {1, 2, 1, 2}}), ValidationError);
}

TEST_CASE("insertion bijectivity and full reverse over W(B3)") {
    for (const SignedPermutation& w : testutil::all_signed_permutations(3)) {
        std::set<std::pair<ShiftedTableau, ShiftedTableau>> images;
        std::set<ShiftedTableau> p_tableaux;
        auto words = enumerate_reduced_words(w);
        for (const Word& word : words) {
            InsertionPair pq = kraskiewicz_insert(word);
            CHECK(is_standard(pq.q));
            CHECK(is_sdt(pq.p, w));
            images.insert({pq.p, pq.q});
            p_tableaux.insert(pq.p);
            InsertionPair state = pq;
            std::vector<int> popped;
            while (!state.p.shape().empty()) {
                auto [rest, letter] = reverse_insert(state);
                state = rest;
                popped.push_back(letter);
            }
            std::reverse(popped.begin(), popped.end());
            CHECK(popped == word.letters);
        }
        CHECK(images.size() == words.size());
        CHECK((p_tableaux.size() == 1) == is_vexillary(w));
    }
}

TEST_CASE("reverse insertion on longer words and validation") {
    for (const Word& word : enumerate_reduced_words(w_dr(2, 2))) {
        InsertionPair state = kraskiewicz_insert(word);
        std::vector<int> popped;
        while (!state.p.shape().empty()) {
            auto [rest, letter] = reverse_insert(state);
            state = rest;
            popped.push_back(letter);
        }
        std::reverse(popped.begin(), popped.end());
        CHECK(popped == word.letters);
    }
    CHECK_THROWS_AS(
        validate_insertion_pair(InsertionPair{tab({2}, {{0, 0}}), tab({2}, {{1, 2}})}),
        ValidationError);
    CHECK_THROWS_AS(
        validate_insertion_pair(InsertionPair{tab({2}, {{1, 0}}), tab({2}, {{2, 1}})}),
        ValidationError);
    CHECK_THROWS_AS(reverse_insert(InsertionPair{}), UsageError);
}
