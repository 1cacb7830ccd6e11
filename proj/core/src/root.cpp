#include "shifted/root.hpp"

#include <algorithm>
#include <cstdlib>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

void require_index(int b) {
    if (b < 1) throw UsageError("root: index must be >= 1");
}

}  // namespace

Root Root::short_root(int b) {
    require_index(b);
    return Root(Kind::Short, b, 0);
}

Root Root::diff(int b, int a) {
    require_index(a);
    if (b <= a) throw UsageError("root: e_b - e_a requires b > a >= 1");
    return Root(Kind::Diff, b, a);
}

Root Root::sum(int b, int a) {
    require_index(a);
    if (b <= a) throw UsageError("root: e_b + e_a requires b > a >= 1");
    return Root(Kind::Sum, b, a);
}

Root Root::doubled(int b) {
    require_index(b);
    return Root(Kind::Doubled, b, 0);
}

std::string Root::to_string() const {
    switch (kind_) {
        case Kind::Short:
            return "e" + std::to_string(hi_);
        case Kind::Diff:
            return "e" + std::to_string(hi_) + "-e" + std::to_string(lo_);
        case Kind::Sum:
            return "e" + std::to_string(hi_) + "+e" + std::to_string(lo_);
        case Kind::Doubled:
            return "2e" + std::to_string(hi_);
    }
    throw UsageError("root: unknown kind");
}

Root Root::parse(const std::string& text) {
    const auto fail = [&]() -> Root {
        throw UsageError("root: cannot parse \"" + text + "\" (expected e3, e3-e2, e3+e1, or 2e3)");
    };
    const auto read_index = [&](std::size_t pos, std::size_t end) -> int {
        if (pos >= end) fail();
        int value = 0;
        for (std::size_t k = pos; k < end; ++k) {
            if (text[k] < '0' || text[k] > '9') fail();
            value = value * 10 + (text[k] - '0');
        }
        if (value < 1) fail();
        return value;
    };
    if (text.size() >= 3 && text[0] == '2' && text[1] == 'e')
        return doubled(read_index(2, text.size()));
    if (text.empty() || text[0] != 'e') fail();
    std::size_t sign_pos = text.find_first_of("+-");
    if (sign_pos == std::string::npos) return short_root(read_index(1, text.size()));
    if (sign_pos + 1 >= text.size() || text[sign_pos + 1] != 'e') fail();
    int b = read_index(1, sign_pos);
    int a = read_index(sign_pos + 2, text.size());
    return text[sign_pos] == '+' ? sum(b, a) : diff(b, a);
}

SignedRoot normalize_signed_pair(int x, int y) {
    if (x == 0 || std::abs(x) == std::abs(y))
        throw UsageError("root: signed pair does not denote a (non-doubled) root");
    if (y == 0) {
        return x > 0 ? SignedRoot{Root::short_root(x), true}
                     : SignedRoot{Root::short_root(-x), false};
    }
    // Coefficients: +sgn(x) at |x|, -sgn(y) at |y|.
    int cx = x > 0 ? 1 : -1;
    int cy = y > 0 ? -1 : 1;
    int bx = std::abs(x), by = std::abs(y);
    int hi = bx, lo = by, chi = cx, clo = cy;
    if (by > bx) {
        hi = by;
        lo = bx;
        chi = cy;
        clo = cx;
    }
    bool positive = chi > 0;
    bool same_sign = chi == clo;
    Root root = same_sign ? Root::sum(hi, lo) : Root::diff(hi, lo);
    return SignedRoot{root, positive};
}

SignedRoot apply_root(const SignedPermutation& w, const Root& root) {
    switch (root.kind()) {
        case Root::Kind::Short:
            return normalize_signed_pair(w.apply(root.hi()), 0);
        case Root::Kind::Diff:
            return normalize_signed_pair(w.apply(root.hi()), w.apply(root.lo()));
        case Root::Kind::Sum:
            // e_b + e_a = e_b - e_{-a}
            return normalize_signed_pair(w.apply(root.hi()), w.apply(-root.lo()));
        case Root::Kind::Doubled:
            break;
    }
    throw UsageError("root: cannot apply a permutation to a doubled label");
}

Root simple_root(int n, int a) {
    if (a < 0 || a >= n) throw UsageError("root: simple index out of range");
    return a == 0 ? Root::short_root(1) : Root::diff(a + 1, a);
}

std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int b = 1; b <= n; ++b) out.push_back(Root::short_root(b));
    for (int b = 2; b <= n; ++b)
        for (int a = 1; a < b; ++a) out.push_back(Root::diff(b, a));
    for (int b = 2; b <= n; ++b)
        for (int a = 1; a < b; ++a) out.push_back(Root::sum(b, a));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Root> root_sum(const Root& alpha, const Root& beta) {
    // Work in coefficient form: each root has at most two nonzero entries.
    auto coeffs = [](const Root& r) -> std::vector<std::pair<int, int>> {
        switch (r.kind()) {
            case Root::Kind::Short:
                return {{r.hi(), 1}};
            case Root::Kind::Diff:
                return {{r.hi(), 1}, {r.lo(), -1}};
            case Root::Kind::Sum:
                return {{r.hi(), 1}, {r.lo(), 1}};
            case Root::Kind::Doubled:
                break;
        }
        throw UsageError("root: doubled label has no arithmetic");
    };
    std::vector<std::pair<int, int>> sum = coeffs(alpha);
    for (auto [idx, c] : coeffs(beta)) {
        bool merged = false;
        for (auto& [i2, c2] : sum)
            if (i2 == idx) {
                c2 += c;
                merged = true;
            }
        if (!merged) sum.emplace_back(idx, c);
    }
    std::erase_if(sum, [](const auto& e) { return e.second == 0; });
    if (sum.size() == 1) {
        auto [i, c] = sum.front();
        if (c == 1) return Root::short_root(i);
        return std::nullopt;  // 2e_i or negative: not a positive type-B root
    }
    if (sum.size() == 2) {
        auto [i1, c1] = sum[0];
        auto [i2, c2] = sum[1];
        if (std::abs(c1) != 1 || std::abs(c2) != 1) return std::nullopt;
        int hi = i1, lo = i2, chi = c1, clo = c2;
        if (i2 > i1) {
            hi = i2;
            lo = i1;
            chi = c2;
            clo = c1;
        }
        if (chi != 1) return std::nullopt;
        return clo == 1 ? Root::sum(hi, lo) : Root::diff(hi, lo);
    }
    return std::nullopt;
}

std::vector<Root> inversion_set(const SignedPermutation& w) {
    SignedPermutation winv = w.inverse();
    std::vector<Root> out;
    for (const Root& alpha : positive_roots(w.n()))
        if (!apply_root(winv, alpha).positive) out.push_back(alpha);
    return out;
}

int length(const SignedPermutation& w) { return static_cast<int>(inversion_set(w).size()); }

}  // namespace shifted
