#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "shifted/signed_permutation.hpp"

namespace shifted {

// A positive root of the rank-n type B root system, stored canonically:
//   Short    e_b              (b >= 1)
//   Diff     e_b - e_a        (b > a >= 1)
//   Sum      e_b + e_a        (b > a >= 1)
//   Doubled  2 e_b            (label-only; never inside inversion sets or
//                              reflection orders, used for margin boxes)
class Root {
public:
    enum class Kind { Short, Diff, Sum, Doubled };

    static Root short_root(int b);
    static Root diff(int b, int a);
    static Root sum(int b, int a);
    static Root doubled(int b);

    Kind kind() const { return kind_; }
    int hi() const { return hi_; }  // b
    int lo() const { return lo_; }  // a (0 for Short/Doubled)

    std::string to_string() const;                 // "e3", "e3-e2", "e3+e1", "2e3"
    static Root parse(const std::string& text);    // inverse of to_string

    friend auto operator<=>(const Root&, const Root&) = default;

private:
    Root(Kind kind, int hi, int lo) : kind_(kind), hi_(hi), lo_(lo) {}
    Kind kind_;
    int hi_;
    int lo_;
};

// A canonical positive root together with the sign it was reached with.
struct SignedRoot {
    Root root;
    bool positive;
};

// e_x - e_y over signed indices (e_{-c} = -e_c, e_0 = 0, so y == 0 encodes a
// short root), normalized to a canonical positive root plus sign.
// |x| == |y| is rejected (zero or doubled; neither arises here).
SignedRoot normalize_signed_pair(int x, int y);

// The image w(root), normalized. Doubled labels are rejected.
SignedRoot apply_root(const SignedPermutation& w, const Root& root);

// alpha_0 = e_1, alpha_a = e_{a+1} - e_a.
Root simple_root(int n, int a);

// All positive roots of rank n, sorted in canonical order.
std::vector<Root> positive_roots(int n);

// alpha + beta when it is again a positive root (type B has no doubled roots,
// so e.g. (e_b - e_a) + (e_b + e_a) yields nothing).
std::optional<Root> root_sum(const Root& alpha, const Root& beta);

// Inv(w): positive roots alpha with w^{-1}(alpha) negative, sorted canonically.
std::vector<Root> inversion_set(const SignedPermutation& w);

// Coxeter length = |Inv(w)|.
int length(const SignedPermutation& w);

}  // namespace shifted
