#include "permclass/avoiders.hpp"

#include <algorithm>
#include <sstream>

namespace permclass {

Basis Basis::parse(const std::string& text) {
    Basis b;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        if (item.find('\'') != std::string::npos) b.barred.push_back(BarredPattern::parse(item));
        else b.classical.push_back(Permutation::parse(item));
    }
    return b;
}

Permutation Level::perm(size_t i) const {
    std::vector<int> v(at(i), at(i) + n);
    return Permutation(std::move(v));
}

AvoidanceFilter::AvoidanceFilter(const Basis& basis) : barred_(basis.barred) {
    for (auto& p : basis.classical) {
        if (p.empty()) contains_empty_ = true;
        classical_.emplace_back(p.values());
    }
    for (auto& p : barred_) {
        cores_.emplace_back(p.core().values());
        if (p.barred == p.underlying.size() - 1) incremental_ = false;
    }
}

template <class T>
static bool barred_occurrence_unextended(const T* s, int n, const PatternMatcher& core, const BarredPattern& p,
                                         bool at_end) {
    const auto& u = p.underlying.values();
    int k = p.underlying.size(), b = p.barred;
    bool bad = false;
    core.for_each(s, n, at_end, [&](const int* pos) {
        int lo_pos = b == 0 ? -1 : pos[b - 1];
        int hi_pos = b == k - 1 ? n : pos[b];
        int lo_val = 0, hi_val = n + 1;
        for (int i = 0, ci = 0; i < k; ++i) {
            if (i == b) continue;
            int sv = s[pos[ci++]];
            if (u[i] < u[b]) lo_val = std::max(lo_val, sv);
            else hi_val = std::min(hi_val, sv);
        }
        for (int q = lo_pos + 1; q < hi_pos; ++q)
            if (s[q] > lo_val && s[q] < hi_val) return true;
        bad = true;
        return false;
    });
    return bad;
}

bool AvoidanceFilter::accepts_extension(const uint8_t* s, int n) const {
    for (auto& m : classical_)
        if (m.occurs_at_end(s, n)) return false;
    for (size_t i = 0; i < barred_.size(); ++i)
        if (barred_occurrence_unextended(s, n, cores_[i], barred_[i], true)) return false;
    return true;
}

bool AvoidanceFilter::accepts(const uint8_t* s, int n) const {
    for (auto& m : classical_)
        if (m.occurs(s, n)) return false;
    for (size_t i = 0; i < barred_.size(); ++i)
        if (barred_occurrence_unextended(s, n, cores_[i], barred_[i], false)) return false;
    return true;
}

static std::vector<BigInt> counts_by_filtering(const AvoidanceFilter& f, int nmax, bool parallel) {
    // Barred entry in last place: extensions can repair a prefix, so every length is filtered in full.
    std::vector<BigInt> out{f.contains_empty() ? 0 : 1};
    for (int n = 1; n <= nmax; ++n) {
        uint64_t total = 0;
        // Split by first entry so each worker walks its own lexicographic block.
#pragma omp parallel for reduction(+ : total) schedule(dynamic) if (parallel)
        for (int first = 1; first <= n; ++first) {
            std::vector<uint8_t> s(n);
            s[0] = static_cast<uint8_t>(first);
            for (int i = 1, v = 1; i < n; ++i, ++v) {
                if (v == first) ++v;
                s[i] = static_cast<uint8_t>(v);
            }
            do {
                if (f.accepts(s.data(), n)) ++total;
            } while (std::next_permutation(s.begin() + 1, s.end()));
        }
        out.push_back(f.contains_empty() ? BigInt(0) : BigInt(static_cast<unsigned long>(total)));
    }
    return out;
}

std::vector<BigInt> count_avoiders_upto(const Basis& basis, int n, bool parallel) {
    AvoidanceFilter f(basis);
    if (f.contains_empty()) return std::vector<BigInt>(n + 1, 0);
    if (!f.incremental()) return counts_by_filtering(f, n, parallel);
    auto counts = class_counts(n, [&](const uint8_t* s, int m) { return f.accepts_extension(s, m); }, parallel);
    std::vector<BigInt> out;
    for (auto c : counts) out.push_back(BigInt(static_cast<unsigned long>(c)));
    return out;
}

BigInt count_avoiders(const Basis& basis, int n) { return count_avoiders_upto(basis, n, true).back(); }

BigInt count_avoiders_serial(const Basis& basis, int n) { return count_avoiders_upto(basis, n, false).back(); }

std::vector<Permutation> generate_avoiders(const Basis& basis, int n) {
    AvoidanceFilter f(basis);
    std::vector<Permutation> out;
    if (f.contains_empty()) return out;
    if (n == 0) return {Permutation()};
    if (!f.incremental()) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        std::vector<uint8_t> s(v.begin(), v.end());
        do {
            if (f.accepts(s.data(), n)) out.push_back(Permutation(std::vector<int>(s.begin(), s.end())));
        } while (std::next_permutation(s.begin(), s.end()));
        return out;
    }
    Level level;
    for (int m = 1; m <= n; ++m)
        level = extend_level(level, [&](const uint8_t* s, int k) { return f.accepts_extension(s, k); }, true);
    for (size_t i = 0; i < level.count(); ++i) out.push_back(level.perm(i));
    return out;
}

bool in_class(const Permutation& sigma, const Basis& basis) {
    AvoidanceFilter f(basis);
    if (f.contains_empty()) return false;
    std::vector<uint8_t> s(sigma.values().begin(), sigma.values().end());
    return f.accepts(s.data(), sigma.size());
}

}  // namespace permclass
