#include "shifted/balanced.hpp"

#include "shifted/errors.hpp"
#include "shifted/hooks.hpp"

namespace shifted {

namespace {

// Maps every box of the extended hook to the diagram box that carries its
// value (a margin box repeats the column-0 value of its row). The multiset of
// values over these source boxes is the extended-hook multiset.
std::vector<Cell> extended_hook_sources(const StrictPartition& lambda, const Cell& c) {
    std::vector<Cell> out;
    for (const Cell& x : extended_hook(lambda, c)) {
        if (x.col >= lambda.row_min_col(x.row))
            out.push_back(x);
        else
            out.push_back({x.row, 0});
    }
    return out;
}

}  // namespace

bool is_balanced(const ShiftedTableau& t) {
    const StrictPartition& sh = t.shape();
    if (!t.is_bijective())
        throw UsageError("is_balanced: tableau is not a bijective filling");
    for (const Cell& c : cells(sh)) {
        int v = t.at(c);
        int greater = 0;
        for (const Cell& s : extended_hook_sources(sh, c))
            if (t.at(s) > v) ++greater;
        if (1 + greater != rank(sh, c)) return false;
    }
    return true;
}

bool is_balanced_naive(const ShiftedTableau& t) {
    const StrictPartition& sh = t.shape();
    if (!t.is_bijective())
        throw UsageError("is_balanced: tableau is not a bijective filling");
    auto ext = extended_filling(t);
    for (const Cell& c : cells(sh)) {
        int v = t.at(c);
        int greater = 0;
        for (const Cell& x : extended_hook(sh, c))
            if (ext.at(x) > v) ++greater;
        if (1 + greater != rank(sh, c)) return false;
    }
    return true;
}

}  // namespace shifted
