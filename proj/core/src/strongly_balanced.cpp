#include "shifted/strongly_balanced.hpp"

#include <map>

#include "shifted/errors.hpp"
#include "shifted/root.hpp"
#include "shifted/trapezoid.hpp"

namespace shifted {

namespace {

bool strictly_between(int v, int a, int b) { return (a < v && v < b) || (b < v && v < a); }

}  // namespace

bool check_strongly_balanced(const ShiftedTableau& t, int d, int r) {
    if (t.shape() != trapezoid(d, r))
        throw UsageError("strongly balanced: the tableau shape is not the trapezoid Z(" +
                         std::to_string(d) + "," + std::to_string(r) + ")");
    if (!t.is_bijective())
        throw UsageError("strongly balanced: the filling is not bijective");
    int n = d + r;

    std::map<Root, int> value;
    for (const Cell& c : cells(t.shape())) value[root_label(d, r, c)] = t.at(c);
    auto val = [&](const Root& root) -> int {
        auto it = value.find(root);
        if (it == value.end())
            throw ValidationError("strongly balanced: root " + root.to_string() +
                                  " is not a label of the trapezoid");
        return it->second;
    };
    // Entry at the box labeled e_x - e_y over signed indices (y = 0 allowed);
    // through the extended labeling, |x| == |y| would be a margin label and is
    // handled by the caller.
    auto val_signed = [&](int x, int y) -> int {
        SignedRoot sr = normalize_signed_pair(x, y);
        if (!sr.positive)
            throw ValidationError("strongly balanced: referenced root is negative");
        return val(sr.root);
    };
    // The margin box repeating row (d+1-m)'s column-0 entry carries 2 e_m.
    auto margin_val = [&](int m) -> int { return t.at(d + 1 - m, 0); };

    // (1)
    for (int i = 2; i <= d; ++i)
        for (int j = 1; j < i; ++j)
            for (int k = j + 1; k < i; ++k)
                if (!strictly_between(val(Root::diff(i, j)), val(Root::diff(i, k)),
                                      val(Root::diff(k, j))))
                    return false;
    // (2a), (2b)
    for (int i = 1; i <= d; ++i)
        for (int p = d + 1; p <= n; ++p) {
            int v = val(Root::sum(p, i));
            for (int q = p + 1; q <= n; ++q)
                if (!(v < val(Root::sum(q, i)))) return false;
            for (int k = 1; k < i; ++k)
                if (!strictly_between(v, val(Root::diff(i, k)), val(Root::sum(p, k))))
                    return false;
        }
    // (3a), (3b)
    for (int i = 1; i <= d; ++i) {
        int v = val(Root::short_root(i));
        for (int q = d + 1; q <= n; ++q)
            if (!(v < val(Root::sum(q, i)))) return false;
        for (int k = 1; k < i; ++k)
            if (!strictly_between(v, val(Root::diff(i, k)), val(Root::short_root(k))))
                return false;
    }
    // (4a), (4b), (4c)
    for (int i = 2; i <= d; ++i)
        for (int j = 1; j < i; ++j) {
            int v = val(Root::sum(i, j));
            for (int q = d + 1; q <= n; ++q) {
                if (!(v < val(Root::sum(q, i)))) return false;
                if (!(v < val(Root::sum(q, j)))) return false;
            }
            for (int k = -j + 1; k < i; ++k) {
                int left, right;
                if (k == 0) {
                    left = val(Root::short_root(i));
                    right = val(Root::short_root(j));
                } else if (k == j) {
                    left = val(Root::diff(i, j));
                    right = margin_val(j);
                } else {
                    left = val_signed(i, k);
                    right = val_signed(j, -k);
                }
                if (!strictly_between(v, left, right)) return false;
            }
        }
    return true;
}

}  // namespace shifted
