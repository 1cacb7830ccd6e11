#pragma once

#include <compare>
#include <vector>

namespace shifted {

// An element of the hyperoctahedral group B_n, stored by its window
// w(1), ..., w(n) (nonzero, absolute values a permutation of 1..n). The full
// map on +-[n] is determined by w(-i) = -w(i).
//
// Generators: s_0 negates, s_a (a >= 1) transposes. Right multiplication acts
// on positions (w * s_0 negates the value at position 1; w * s_a swaps the
// values at positions a, a+1); left multiplication acts on values.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> window);  // validates

    static SignedPermutation identity(int n);
    static SignedPermutation simple_reflection(int n, int a);

    int n() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    int apply(int i) const;  // i in +-[n]; respects w(-i) = -w(i)

    SignedPermutation inverse() const;
    SignedPermutation mul_simple_right(int a) const;  // w * s_a
    SignedPermutation mul_simple_left(int a) const;   // s_a * w

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

// (u * v)(i) = u(v(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

}  // namespace shifted
