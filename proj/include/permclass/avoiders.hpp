#pragma once

#include "permclass/match.hpp"
#include "permclass/perm.hpp"

#include <omp.h>

#include <cstdint>
#include <vector>

namespace permclass {

struct Basis {
    std::vector<Permutation> classical;
    std::vector<BarredPattern> barred;
    // "1 3 2 4,2 3 4 1"; entries with a trailing apostrophe make a barred pattern.
    static Basis parse(const std::string& text);
    bool empty() const { return classical.empty() && barred.empty(); }
};

// All permutations of one length, stored contiguously.
struct Level {
    int n = 0;
    std::vector<uint8_t> data;
    size_t count() const { return n == 0 ? (data.empty() ? 1 : 0) : data.size() / n; }
    const uint8_t* at(size_t i) const { return data.data() + i * n; }
    Permutation perm(size_t i) const;
};

// Classical patterns may be checked incrementally: a child of an avoider contains a
// pattern only through its new last entry. A barred pattern whose barred entry is not
// last behaves the same way (the set of avoiders is closed under deleting the last entry).
class AvoidanceFilter {
public:
    explicit AvoidanceFilter(const Basis& basis);
    bool incremental() const { return incremental_; }
    bool contains_empty() const { return contains_empty_; }
    bool accepts_extension(const uint8_t* s, int n) const;
    bool accepts(const uint8_t* s, int n) const;

private:
    std::vector<PatternMatcher> classical_;
    std::vector<BarredPattern> barred_;
    std::vector<PatternMatcher> cores_;
    bool incremental_ = true;
    bool contains_empty_ = false;
};

// One level of right extension: every child (parent with a new last entry) accepted by test.
template <class Accept>
Level extend_level(const Level& parent, Accept&& test, bool parallel, bool keep = true, uint64_t* counted = nullptr) {
    Level out;
    out.n = parent.n + 1;
    const int n = parent.n;
    const long long count = static_cast<long long>(parent.count());
    int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<std::vector<uint8_t>> buf(threads);
    std::vector<uint64_t> tally(threads, 0);
#pragma omp parallel num_threads(threads) if (parallel)
    {
        int tid = omp_get_thread_num();
        std::vector<uint8_t> child(n + 1);
#pragma omp for schedule(static)
        for (long long i = 0; i < count; ++i) {
            const uint8_t* p = parent.at(static_cast<size_t>(i));
            for (int v = 1; v <= n + 1; ++v) {
                for (int j = 0; j < n; ++j) child[j] = p[j] + (p[j] >= v);
                child[n] = static_cast<uint8_t>(v);
                if (!test(child.data(), n + 1)) continue;
                ++tally[tid];
                if (keep) buf[tid].insert(buf[tid].end(), child.begin(), child.end());
            }
        }
    }
    // Static scheduling hands each thread a contiguous block, so this keeps serial order.
    for (auto& b : buf) out.data.insert(out.data.end(), b.begin(), b.end());
    if (counted) {
        *counted = 0;
        for (auto t : tally) *counted += t;
    }
    return out;
}

template <class Accept>
std::vector<uint64_t> class_counts(int nmax, Accept&& test, bool parallel = true) {
    std::vector<uint64_t> counts{1};
    Level level;
    for (int n = 1; n <= nmax; ++n) {
        uint64_t c = 0;
        level = extend_level(level, test, parallel, n < nmax, &c);
        counts.push_back(c);
    }
    return counts;
}

BigInt count_avoiders(const Basis& basis, int n);
BigInt count_avoiders_serial(const Basis& basis, int n);
// Counts for lengths 0..n.
std::vector<BigInt> count_avoiders_upto(const Basis& basis, int n, bool parallel = true);
std::vector<Permutation> generate_avoiders(const Basis& basis, int n);
bool in_class(const Permutation& sigma, const Basis& basis);

}  // namespace permclass
