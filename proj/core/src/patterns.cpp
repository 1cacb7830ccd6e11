#include "shifted/patterns.hpp"

#include <cstdlib>

namespace shifted {

namespace {

bool embeds_rec(const SignedPermutation& w, const SignedPermutation& v,
                std::vector<int>& picked, int next_index) {
    int m = v.n();
    int taken = static_cast<int>(picked.size());
    if (taken == m) return true;
    for (int i = next_index; i <= w.n() - (m - taken - 1); ++i) {
        int wv = w.apply(i);
        int pv = v.apply(taken + 1);
        if ((wv > 0) != (pv > 0)) continue;
        bool order_ok = true;
        for (int k = 0; k < taken; ++k) {
            int prev_w = w.apply(picked[k]);
            int prev_p = v.apply(k + 1);
            if ((std::abs(prev_w) < std::abs(wv)) != (std::abs(prev_p) < std::abs(pv))) {
                order_ok = false;
                break;
            }
        }
        if (!order_ok) continue;
        picked.push_back(i);
        if (embeds_rec(w, v, picked, i + 1)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

bool pattern_embeds(const SignedPermutation& w, const SignedPermutation& v) {
    if (v.n() > w.n()) return false;
    std::vector<int> picked;
    return embeds_rec(w, v, picked, 1);
}

const std::vector<SignedPermutation>& vexillary_patterns() {
    static const std::vector<SignedPermutation> patterns = {
        SignedPermutation({-3, 2, -1}),  SignedPermutation({-3, 2, 1}),
        SignedPermutation({3, 2, -1}),   SignedPermutation({3, 2, 1}),
        SignedPermutation({3, -1, 2}),   SignedPermutation({-2, 3, 1}),
        SignedPermutation({-1, 3, 2}),   SignedPermutation({-4, -1, -2, 3}),
        SignedPermutation({-4, 1, -2, 3}), SignedPermutation({-3, -4, -1, -2}),
        SignedPermutation({-3, -4, 1, -2}), SignedPermutation({3, -4, -1, -2}),
        SignedPermutation({3, -4, 1, -2}), SignedPermutation({3, 1, 4, 2}),
        SignedPermutation({-2, -3, 4, -1}), SignedPermutation({2, 4, 1, 3}),
        SignedPermutation({2, -3, 4, -1}), SignedPermutation({2, 1, 4, 3}),
    };
    return patterns;
}

bool is_vexillary(const SignedPermutation& w) {
    for (const SignedPermutation& v : vexillary_patterns())
        if (pattern_embeds(w, v)) return false;
    return true;
}

}  // namespace shifted
