#pragma once

#include "permclass/numeric.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace permclass {

// A permutation of 1..n stored as its sequence of values. n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);
    // "3 1 5 6 7 4 8 2", or the compact form "31567482" when every entry is a single digit.
    static Permutation parse(const std::string& text);
    static Permutation identity(int n);
    // Relative order of an arbitrary sequence of distinct integers.
    static Permutation standardize(const std::vector<int>& seq);

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int operator[](int i) const { return v_[i]; }
    const std::vector<int>& values() const { return v_; }

    Permutation inverse() const;
    Permutation reverse() const;
    Permutation complement() const;
    Permutation remove(int index) const;
    Permutation restrict_to(const std::vector<int>& indices) const;

    std::string to_string() const;
    std::string compact() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> v_;
};

Permutation operator""_perm(const char* s, size_t n);

// A pattern with exactly one barred entry.
struct BarredPattern {
    Permutation underlying;
    int barred = 0;  // index into underlying
    Permutation core() const { return underlying.remove(barred); }
    // "2 1' 3 5 4" or "21'354".
    static BarredPattern parse(const std::string& text);
    std::string to_string() const;
};

struct OrderedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;   // 1-based, first < second, sorted
    std::vector<std::pair<int, int>> layout;  // (position, value) per vertex
    bool has_edge(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const;
};

bool contains(const Permutation& sigma, const Permutation& tau);
inline bool avoids(const Permutation& sigma, const Permutation& tau) { return !contains(sigma, tau); }
// Containment restricted to occurrences whose last entry is sigma's last entry.
bool contains_at_end(const Permutation& sigma, const Permutation& tau);
bool contains_1324(const int* s, int n);
bool avoids_barred(const Permutation& sigma, const BarredPattern& p);

OrderedGraph inversion_graph(const Permutation& sigma);
OrderedGraph hasse_graph(const Permutation& sigma);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);
bool is_indecomposable(const Permutation& sigma);
// Sum components, left to right.
std::vector<Permutation> sum_components(const Permutation& sigma);

// Every nonempty subpermutation of some member (members included).
std::set<Permutation> downset(const std::set<Permutation>& perms);

}  // namespace permclass
