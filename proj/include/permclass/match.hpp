#pragma once

#include <vector>

namespace permclass {

// Backtracking matcher for one classical pattern. Entry j of the pattern is placed
// at a position after entry j-1; its value is bounded by the images of its nearest
// smaller and larger predecessors in value.
class PatternMatcher {
public:
    PatternMatcher() = default;
    explicit PatternMatcher(const std::vector<int>& pattern);

    int size() const { return k_; }

    template <class T>
    bool occurs(const T* s, int n) const {
        if (k_ == 0) return true;
        if (k_ > n) return false;
        int pos[64] = {};
        return search(s, n, 0, -1, pos, false);
    }

    // Only occurrences that use the last entry of s.
    template <class T>
    bool occurs_at_end(const T* s, int n) const {
        if (k_ == 0) return true;
        if (k_ > n) return false;
        int pos[64] = {};
        return search(s, n, 0, -1, pos, true);
    }

    // Calls f(pos) for each occurrence; f returns false to stop. Returns false if stopped.
    template <class T, class F>
    bool for_each(const T* s, int n, bool at_end, F&& f) const {
        if (k_ > n) return true;
        int pos[64] = {};
        return enumerate(s, n, 0, -1, pos, at_end, f);
    }

private:
    template <class T>
    bool fits(const T* s, int j, int p, const int* pos) const {
        int v = s[p];
        if (lo_[j] >= 0 && v < static_cast<int>(s[pos[lo_[j]]])) return false;
        if (hi_[j] >= 0 && v > static_cast<int>(s[pos[hi_[j]]])) return false;
        return true;
    }

    template <class T>
    bool search(const T* s, int n, int j, int prev, int* pos, bool at_end) const {
        if (j == k_) return true;
        if (at_end && j == k_ - 1) {
            if (prev >= n - 1 || !fits(s, j, n - 1, pos)) return false;
            pos[j] = n - 1;
            return true;
        }
        int last = at_end ? n - 1 - (k_ - 1 - j) : n - (k_ - j);
        for (int p = prev + 1; p <= last; ++p) {
            if (!fits(s, j, p, pos)) continue;
            pos[j] = p;
            if (search(s, n, j + 1, p, pos, at_end)) return true;
        }
        return false;
    }

    template <class T, class F>
    bool enumerate(const T* s, int n, int j, int prev, int* pos, bool at_end, F& f) const {
        if (j == k_) return f(static_cast<const int*>(pos));
        int first = prev + 1, last = n - (k_ - j);
        if (at_end) {
            if (j == k_ - 1) first = n - 1;
            else last = n - 1 - (k_ - 1 - j);
        }
        for (int p = first; p <= last; ++p) {
            if (!fits(s, j, p, pos)) continue;
            pos[j] = p;
            if (!enumerate(s, n, j + 1, p, pos, at_end, f)) return false;
        }
        return true;
    }

    int k_ = 0;
    std::vector<int> lo_, hi_;
};

}  // namespace permclass
