#include "shifted/kraskiewicz.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

using Rows = std::vector<std::vector<int>>;

Rows rows_of(const ShiftedTableau& t) { return t.rows(); }

ShiftedTableau tableau_from_rows(const Rows& rows) {
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return ShiftedTableau(StrictPartition(parts), rows);
}

Word reading_word_of_rows(const Rows& rows) {
    Word out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        out.letters.insert(out.letters.end(), it->begin(), it->end());
    int mx = -1;
    for (int a : out.letters) mx = std::max(mx, a);
    out.rank = mx + 1;
    return out;
}

Word reading_word_below(const Rows& rows, std::size_t i) {
    Rows below(rows.begin() + static_cast<std::ptrdiff_t>(i) + 1, rows.end());
    return reading_word_of_rows(below);
}

bool strictly_decreasing(const std::vector<int>& v) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (v[k] <= v[k + 1]) return false;
    return true;
}

bool strictly_increasing(const std::vector<int>& v) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (v[k] >= v[k + 1]) return false;
    return true;
}

// Scattered subsequence 1, 0, 1.
bool has_101(const std::vector<int>& row) {
    bool seen1 = false, seen10 = false;
    for (int x : row) {
        if (x == 1 && seen10) return true;
        if (x == 0 && seen1) seen10 = true;
        if (x == 1) seen1 = true;
    }
    return false;
}

// One row step. Either the letter is placed at the end of the row (result has
// no carry), or the row is rewritten and a letter is carried to the next row.
struct RowStep {
    std::vector<int> row;
    std::optional<int> carry;
};

RowStep insert_row(const std::vector<int>& row, int a) {
    if (row.empty()) return {{a}, std::nullopt};
    std::vector<int> appended = row;
    appended.push_back(a);
    if (is_unimodal_row(appended)) return {appended, std::nullopt};
    if (a == 0 && has_101(row)) return {row, 0};
    auto [dn, up] = unimodal_split(row);
    // Smallest entry of the increasing arm that is >= a.
    std::optional<int> b;
    for (int z : up)
        if (z >= a && (!b || z < *b)) b = z;
    if (!b)
        throw ValidationError(
            "insertion: letter cannot extend the row (the word being inserted is not reduced)");
    int c;
    if (*b != a) {
        std::replace(up.begin(), up.end(), *b, a);
        c = *b;
    } else {
        c = a + 1;
    }
    // Largest entry of the decreasing arm that is <= c (always exists).
    std::optional<int> dhat;
    for (int z : dn)
        if (z <= c && (!dhat || z > *dhat)) dhat = z;
    if (!dhat)
        throw ValidationError(
            "insertion: decreasing arm cannot absorb the displaced letter (non-reduced word)");
    int carried;
    if (*dhat != c) {
        std::replace(dn.begin(), dn.end(), *dhat, c);
        carried = *dhat;
    } else {
        carried = c - 1;
    }
    std::vector<int> merged = dn;
    merged.insert(merged.end(), up.begin(), up.end());
    return {merged, carried};
}

// All (row0, a) with insert_row(row0, a) == carry step (row, x).
std::vector<std::pair<std::vector<int>, int>> undo_row(const std::vector<int>& row, int x) {
    std::vector<std::pair<std::vector<int>, int>> cands;
    auto add_candidate = [&](const std::vector<int>& row0, int a) {
        // Replay verification: a speculative preimage that does not even admit
        // the forward step (the letter cannot enter the row) is rejected, not
        // an error.
        try {
            RowStep replay = insert_row(row0, a);
            if (!replay.carry || replay.row != row || *replay.carry != x) return;
        } catch (const ValidationError&) {
            return;
        }
        std::pair<std::vector<int>, int> cand{row0, a};
        if (std::find(cands.begin(), cands.end(), cand) == cands.end()) cands.push_back(cand);
    };
    if (x == 0 && has_101(row)) add_candidate(row, 0);
    // The forward step's arms need not form the canonical valley split of the
    // produced row; the only other possibility moves the valley to the
    // increasing arm.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
    auto [dn, up] = unimodal_split(row);
    splits.emplace_back(dn, up);
    if (dn.size() >= 2) {
        std::vector<int> dn2(dn.begin(), dn.end() - 1);
        std::vector<int> up2;
        up2.push_back(dn.back());
        up2.insert(up2.end(), up.begin(), up.end());
        if (strictly_increasing(up2)) splits.emplace_back(dn2, up2);
    }
    for (const auto& [dn_, up_] : splits) {
        if (up_.empty()) continue;
        // Undo the decreasing-arm stage: recover c and the original arm.
        std::vector<std::pair<int, std::vector<int>>> downs;
        if (std::find(dn_.begin(), dn_.end(), x) == dn_.end()) {
            std::optional<int> c;
            for (int z : dn_)
                if (z > x && (!c || z < *c)) c = z;
            if (c) {
                std::vector<int> dn0 = dn_;
                std::replace(dn0.begin(), dn0.end(), *c, x);
                if (strictly_decreasing(dn0)) downs.emplace_back(*c, dn0);
            }
        }
        if (std::find(dn_.begin(), dn_.end(), x + 1) != dn_.end()) downs.emplace_back(x + 1, dn_);
        for (const auto& [c, dn0] : downs) {
            // Undo the increasing-arm stage: recover the inserted letter.
            std::optional<int> a0;
            for (int z : up_)
                if (z < c && (!a0 || z > *a0)) a0 = z;
            if (a0) {
                std::vector<int> up0 = up_;
                std::replace(up0.begin(), up0.end(), *a0, c);
                if (strictly_increasing(up0)) {
                    std::vector<int> row0 = dn0;
                    row0.insert(row0.end(), up0.begin(), up0.end());
                    if (is_unimodal_row(row0)) add_candidate(row0, *a0);
                }
            }
            if (std::find(up_.begin(), up_.end(), c - 1) != up_.end()) {
                std::vector<int> row0 = dn0;
                row0.insert(row0.end(), up_.begin(), up_.end());
                if (is_unimodal_row(row0)) add_candidate(row0, c - 1);
            }
        }
    }
    return cands;
}

}  // namespace

int lus_len(const std::vector<int>& word) {
    std::size_t m = word.size();
    if (m == 0) return 0;
    std::vector<int> dec(m, 1);  // longest strictly decreasing subsequence ending at p
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < p; ++q)
            if (word[q] > word[p]) dec[p] = std::max(dec[p], dec[q] + 1);
    std::vector<int> inc(m, 1);  // longest strictly increasing subsequence starting at p
    for (std::size_t p = m; p-- > 0;)
        for (std::size_t q = p + 1; q < m; ++q)
            if (word[q] > word[p]) inc[p] = std::max(inc[p], inc[q] + 1);
    int best = 0;
    for (std::size_t p = 0; p < m; ++p) best = std::max(best, dec[p] + inc[p] - 1);
    return best;
}

bool is_unimodal_row(const std::vector<int>& row) {
    std::size_t k = 0;
    while (k + 1 < row.size() && row[k] > row[k + 1]) ++k;
    while (k + 1 < row.size() && row[k] < row[k + 1]) ++k;
    return row.empty() || k == row.size() - 1;
}

std::pair<std::vector<int>, std::vector<int>> unimodal_split(const std::vector<int>& row) {
    if (row.empty()) return {{}, {}};
    std::size_t k = 0;
    while (k + 1 < row.size() && row[k] > row[k + 1]) ++k;
    return {std::vector<int>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k) + 1),
            std::vector<int>(row.begin() + static_cast<std::ptrdiff_t>(k) + 1, row.end())};
}

Word reading_word(const ShiftedTableau& t) { return reading_word_of_rows(t.rows()); }

void validate_insertion_pair(const InsertionPair& state) {
    if (state.p.shape() != state.q.shape())
        throw UsageError("insertion pair: P and Q have different shapes");
    for (const auto& row : state.p.rows()) {
        if (!is_unimodal_row(row)) throw ValidationError("insertion pair: a P row is not unimodal");
        for (int a : row)
            if (a < 0) throw UsageError("insertion pair: negative letter in P");
    }
    if (!state.q.is_bijective() || !is_standard(state.q))
        throw ValidationError("insertion pair: Q is not standard");
}

InsertionPair insert_letter(const InsertionPair& state, int letter, int stamp) {
    if (letter < 0) throw UsageError("insertion: negative letter");
    Rows p = rows_of(state.p);
    Rows q = rows_of(state.q);
    int a = letter;
    for (std::size_t i = 0;; ++i) {
        if (i == p.size()) {
            p.push_back({a});
            q.push_back({stamp});
            break;
        }
        RowStep step = insert_row(p[i], a);
        p[i] = step.row;
        if (!step.carry) {
            q[i].push_back(stamp);
            break;
        }
        a = *step.carry;
    }
    return {tableau_from_rows(p), tableau_from_rows(q)};
}

InsertionPair kraskiewicz_insert(const Word& word) {
    validate_word(word);
    if (!is_reduced(word)) throw ValidationError("insertion: the word is not reduced");
    InsertionPair state;
    int stamp = 1;
    for (int a : word.letters) state = insert_letter(state, a, stamp++);
    return state;
}

std::pair<InsertionPair, int> reverse_insert(const InsertionPair& state) {
    validate_insertion_pair(state);
    Rows p = rows_of(state.p);
    Rows q = rows_of(state.q);
    if (p.empty()) throw UsageError("reverse insertion: empty tableau");

    // Multiplications are carried out in the parabolic subgroup generated by
    // the letters present, which embeds faithfully.
    Word full = reading_word_of_rows(p);
    int rank = std::max(full.rank, 1);
    full.rank = rank;
    SignedPermutation w = word_to_perm(full);

    // Pop the box holding Q's largest stamp; it must close its row.
    std::size_t ti = 0;
    int best = q[0][0];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int v : q[i])
            if (v >= best) {
                best = v;
                ti = i;
            }
    if (q[ti].back() != best)
        throw ValidationError("reverse insertion: the largest stamp does not close its row");
    q[ti].pop_back();
    int x = p[ti].back();
    p[ti].pop_back();
    if (p[ti].empty()) {
        if (ti + 1 != p.size())
            throw ValidationError("reverse insertion: removing the box empties a non-final row");
        p.pop_back();
        q.pop_back();
    }

    // Unwind the carry chain upward, branching over locally consistent
    // preimages; each branch is pruned against the rows below it staying a
    // longest unimodal subsequence witness.
    struct Chain {
        int carry;
        std::vector<std::pair<std::size_t, std::vector<int>>> restored;
    };
    std::vector<Chain> chains{{x, {}}};
    for (std::size_t i = ti; i-- > 0;) {
        std::vector<Chain> next;
        for (const Chain& chain : chains) {
            for (const auto& [row0, a0] : undo_row(p[i], chain.carry)) {
                Word below = reading_word_below(p, i);
                std::vector<int> witness = below.letters;
                witness.insert(witness.end(), row0.begin(), row0.end());
                if (lus_len(witness) != static_cast<int>(row0.size())) continue;
                Chain grown = chain;
                grown.carry = a0;
                grown.restored.emplace_back(i, row0);
                next.push_back(std::move(grown));
            }
        }
        chains = std::move(next);
    }

    // Keep the unique preimage whose reading word multiplies back to w s_a.
    std::optional<std::pair<Rows, int>> survivor;
    for (const Chain& chain : chains) {
        Rows candidate = p;
        for (const auto& [i, row0] : chain.restored) candidate[i] = row0;
        Word rw = reading_word_of_rows(candidate);
        rw.rank = rank;
        if (word_to_perm(rw) == w.mul_simple_right(chain.carry)) {
            if (survivor)
                throw ValidationError("reverse insertion: ambiguous preimage (invalid state)");
            survivor = {candidate, chain.carry};
        }
    }
    if (!survivor)
        throw ValidationError("reverse insertion: no preimage exists (invalid state)");
    return {{tableau_from_rows(survivor->first), tableau_from_rows(q)}, survivor->second};
}

bool is_sdt(const ShiftedTableau& t, const SignedPermutation& w) {
    Rows p = rows_of(t);
    Word rw = reading_word_of_rows(p);
    if (rw.rank > w.n()) return false;
    rw.rank = w.n();
    if (!is_reduced(rw) || word_to_perm(rw) != w) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rows suffix(p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
        if (lus_len(reading_word_of_rows(suffix).letters) != static_cast<int>(p[i].size()))
            return false;
    }
    return true;
}

}  // namespace shifted
