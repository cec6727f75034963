#pragma once
// Independent brute-force oracles used only by the tests.

#include "permclass/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using permclass::Permutation;

// Calls f for every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    if (k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool contains(const Permutation& s, const Permutation& t) {
    bool found = false;
    for_each_subset(s.size(), t.size(), [&](const std::vector<int>& idx) {
        if (!found && s.restrict_to(idx) == t) found = true;
    });
    return found;
}

inline std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline long count_class(int n, const std::function<bool(const Permutation&)>& member) {
    long c = 0;
    for (auto& p : all_perms(n))
        if (member(p)) ++c;
    return c;
}

}  // namespace oracle
