#pragma once
// Small random generators shared by the property tests.

#include "permclass/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace gen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20260101);
    return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline permclass::Rational small_rational() {
    permclass::Rational q(uniform(-9, 9), uniform(1, 5));
    q.canonicalize();
    return q;
}

inline std::vector<int> random_perm(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng());
    return v;
}

}  // namespace gen
