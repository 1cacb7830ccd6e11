#include "shifted/signed_permutation.hpp"

#include <cstdlib>
#include <string>

#include "shifted/errors.hpp"

namespace shifted {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    std::vector<bool> seen(window_.size(), false);
    for (int v : window_) {
        int a = std::abs(v);
        if (a < 1 || a > n() || seen[static_cast<std::size_t>(a - 1)])
            throw UsageError("signed permutation: window is not a signed arrangement of 1..n");
        seen[static_cast<std::size_t>(a - 1)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i;
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple_reflection(int n, int a) {
    if (a < 0 || a >= n)
        throw UsageError("simple reflection: index " + std::to_string(a) +
                         " out of range for rank " + std::to_string(n));
    return identity(n).mul_simple_right(a);
}

int SignedPermutation::apply(int i) const {
    if (i == 0 || std::abs(i) > n())
        throw UsageError("signed permutation: index out of range");
    int v = window_[static_cast<std::size_t>(std::abs(i) - 1)];
    return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> w(window_.size());
    for (int i = 1; i <= n(); ++i) {
        int v = window_[static_cast<std::size_t>(i - 1)];
        if (v > 0)
            w[static_cast<std::size_t>(v - 1)] = i;
        else
            w[static_cast<std::size_t>(-v - 1)] = -i;
    }
    SignedPermutation out;
    out.window_ = std::move(w);
    return out;
}

SignedPermutation SignedPermutation::mul_simple_right(int a) const {
    if (a < 0 || a >= n())
        throw UsageError("simple reflection: index " + std::to_string(a) +
                         " out of range for rank " + std::to_string(n()));
    SignedPermutation out = *this;
    if (a == 0)
        out.window_[0] = -out.window_[0];
    else
        std::swap(out.window_[static_cast<std::size_t>(a - 1)],
                  out.window_[static_cast<std::size_t>(a)]);
    return out;
}

SignedPermutation SignedPermutation::mul_simple_left(int a) const {
    if (a < 0 || a >= n())
        throw UsageError("simple reflection: index " + std::to_string(a) +
                         " out of range for rank " + std::to_string(n()));
    SignedPermutation out = *this;
    for (int i = 0; i < n(); ++i) {
        int& v = out.window_[static_cast<std::size_t>(i)];
        if (a == 0) {
            if (std::abs(v) == 1) v = -v;
        } else {
            if (std::abs(v) == a)
                v = v > 0 ? a + 1 : -(a + 1);
            else if (std::abs(v) == a + 1)
                v = v > 0 ? a : -a;
        }
    }
    return out;
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.n() != v.n()) throw UsageError("compose: rank mismatch");
    std::vector<int> w(static_cast<std::size_t>(u.n()));
    for (int i = 1; i <= u.n(); ++i) w[static_cast<std::size_t>(i - 1)] = u.apply(v.apply(i));
    return SignedPermutation(std::move(w));
}

}  // namespace shifted
