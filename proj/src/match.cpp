#include "permclass/match.hpp"

#include <stdexcept>

namespace permclass {

PatternMatcher::PatternMatcher(const std::vector<int>& pattern) : k_(static_cast<int>(pattern.size())) {
    if (k_ > 64) throw std::invalid_argument("pattern too long");
    lo_.assign(k_, -1);
    hi_.assign(k_, -1);
    for (int j = 0; j < k_; ++j)
        for (int i = 0; i < j; ++i) {
            if (pattern[i] < pattern[j] && (lo_[j] < 0 || pattern[i] > pattern[lo_[j]])) lo_[j] = i;
            if (pattern[i] > pattern[j] && (hi_[j] < 0 || pattern[i] < pattern[hi_[j]])) hi_[j] = i;
        }
}

}  // namespace permclass
