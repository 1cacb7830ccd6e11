#include "shifted/reflection_order.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "shifted/errors.hpp"

namespace shifted {

ReflectionOrder reflection_order(const Word& word) {
    validate_word(word);
    SignedPermutation v = SignedPermutation::identity(word.rank);
    ReflectionOrder out{word.rank, {}};
    for (std::size_t j = 0; j < word.letters.size(); ++j) {
        int a = word.letters[j];
        SignedRoot gamma = apply_root(v, simple_root(word.rank, a));
        if (!gamma.positive)
            throw ValidationError("reflection order: word is not reduced (letter " +
                                  std::to_string(j + 1) + " revisits a crossed root)");
        out.roots.push_back(gamma.root);
        v = v.mul_simple_right(a);
    }
    return out;
}

Word reflection_order_to_word(const ReflectionOrder& order) {
    SignedPermutation v = SignedPermutation::identity(order.rank);
    Word out{order.rank, {}};
    for (std::size_t j = 0; j < order.roots.size(); ++j) {
        const Root& gamma = order.roots[j];
        if (gamma.kind() == Root::Kind::Doubled || gamma.hi() > order.rank)
            throw UsageError("reflection order: root " + gamma.to_string() +
                             " is not a positive root of rank " + std::to_string(order.rank));
        SignedRoot beta = apply_root(v.inverse(), gamma);
        int a = -1;
        if (beta.positive) {
            if (beta.root.kind() == Root::Kind::Short && beta.root.hi() == 1)
                a = 0;
            else if (beta.root.kind() == Root::Kind::Diff && beta.root.hi() == beta.root.lo() + 1)
                a = beta.root.lo();
        }
        if (a < 0)
            throw ValidationError("reflection order: not realizable by a word; at step " +
                                  std::to_string(j + 1) + " root " + gamma.to_string() +
                                  " pulls back to the non-simple root " +
                                  (beta.positive ? beta.root.to_string()
                                                 : "-" + beta.root.to_string()));
        out.letters.push_back(a);
        v = v.mul_simple_right(a);
    }
    return out;
}

bool is_valid_reflection_order(const ReflectionOrder& order, const SignedPermutation& w) {
    std::vector<Root> inv = inversion_set(w);
    std::vector<Root> given = order.roots;
    std::sort(given.begin(), given.end());
    if (given != inv)
        throw ValidationError(
            "reflection order: the root sequence does not cover the inversion set of the "
            "permutation");
    std::map<Root, std::size_t> pos;
    for (std::size_t k = 0; k < order.roots.size(); ++k) pos[order.roots[k]] = k;
    auto in_inv = [&](const Root& r) { return pos.contains(r); };

    for (const Root& alpha : positive_roots(w.n())) {
        if (!in_inv(alpha)) continue;
        for (const Root& beta : positive_roots(w.n())) {
            if (beta == alpha) continue;
            std::optional<Root> sum = root_sum(alpha, beta);
            if (!sum || !in_inv(*sum)) continue;
            if (!in_inv(beta)) {
                if (pos[alpha] >= pos[*sum]) return false;
            } else {
                std::size_t lo = std::min(pos[alpha], pos[beta]);
                std::size_t hi = std::max(pos[alpha], pos[beta]);
                if (!(lo < pos[*sum] && pos[*sum] < hi)) return false;
            }
        }
    }
    return true;
}

}  // namespace shifted
