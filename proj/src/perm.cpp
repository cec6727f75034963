#include "permclass/perm.hpp"

#include "permclass/match.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permclass {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
    std::vector<char> seen(v_.size() + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > size() || seen[x]) throw DomainError("not a permutation of 1..n");
        seen[x] = 1;
    }
}

static std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    // A single run of digits is read one digit per entry.
    if (out.size() == 1) {
        std::vector<std::string> chars;
        for (char c : out[0]) {
            if (c == '\'') {
                if (chars.empty()) throw DomainError("stray bar mark");
                chars.back() += c;
            } else {
                chars.emplace_back(1, c);
            }
        }
        return chars;
    }
    return out;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> v;
    for (auto& t : split_tokens(text)) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw DomainError("bad permutation entry '" + t + "'");
        v.push_back(std::stoi(t));
    }
    return Permutation(std::move(v));
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::standardize(const std::vector<int>& seq) {
    std::vector<int> idx(seq.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
    std::vector<int> v(seq.size());
    for (size_t r = 0; r < idx.size(); ++r) v[idx[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(v_.size());
    for (int i = 0; i < size(); ++i) w[v_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::reverse() const { return Permutation(std::vector<int>(v_.rbegin(), v_.rend())); }

Permutation Permutation::complement() const {
    std::vector<int> w(v_);
    for (auto& x : w) x = size() + 1 - x;
    return Permutation(std::move(w));
}

Permutation Permutation::remove(int index) const {
    std::vector<int> w;
    int gone = v_[index];
    for (int i = 0; i < size(); ++i)
        if (i != index) w.push_back(v_[i] > gone ? v_[i] - 1 : v_[i]);
    return Permutation(std::move(w));
}

Permutation Permutation::restrict_to(const std::vector<int>& indices) const {
    std::vector<int> seq;
    for (int i : indices) seq.push_back(v_[i]);
    return standardize(seq);
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) os << (i ? " " : "") << v_[i];
    return os.str();
}

std::string Permutation::compact() const {
    if (size() > 9) return to_string();
    std::string s;
    for (int x : v_) s += static_cast<char>('0' + x);
    return s;
}

Permutation operator""_perm(const char* s, size_t n) { return Permutation::parse(std::string(s, n)); }

BarredPattern BarredPattern::parse(const std::string& text) {
    std::vector<int> v;
    std::vector<int> bars;
    for (auto t : split_tokens(text)) {
        bool bar = !t.empty() && t.back() == '\'';
        if (bar) t.pop_back();
        if (t.empty()) throw DomainError("bad barred entry");
        if (bar) bars.push_back(static_cast<int>(v.size()));
        v.push_back(std::stoi(t));
    }
    if (bars.size() != 1) throw DomainError("barred patterns must have exactly one barred entry");
    return BarredPattern{Permutation(std::move(v)), bars[0]};
}

std::string BarredPattern::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < underlying.size(); ++i) {
        os << (i ? " " : "") << underlying[i];
        if (i == barred) os << '\'';
    }
    return os.str();
}

bool OrderedGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<int>> OrderedGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

bool contains(const Permutation& sigma, const Permutation& tau) {
    return PatternMatcher(tau.values()).occurs(sigma.values().data(), sigma.size());
}

bool contains_at_end(const Permutation& sigma, const Permutation& tau) {
    return PatternMatcher(tau.values()).occurs_at_end(sigma.values().data(), sigma.size());
}

bool contains_1324(const int* s, int n) {
    // Look for the middle pair (j, k), j < k, s[j] > s[k], with a smaller entry
    // before j below s[k] and a larger entry after k above s[j].
    if (n < 4) return false;
    std::vector<int> premin(n), sufmax(n);
    premin[0] = s[0];
    for (int i = 1; i < n; ++i) premin[i] = std::min(premin[i - 1], s[i]);
    sufmax[n - 1] = s[n - 1];
    for (int i = n - 2; i >= 0; --i) sufmax[i] = std::max(sufmax[i + 1], s[i]);
    for (int j = 1; j < n - 2; ++j)
        for (int k = j + 1; k < n - 1; ++k)
            if (s[j] > s[k] && premin[j - 1] < s[k] && sufmax[k + 1] > s[j]) return true;
    return false;
}

// Does the occurrence (positions pos of the core) extend by some further entry of sigma
// to an occurrence of the underlying pattern?
static bool extends(const std::vector<int>& s, const BarredPattern& p, const int* pos) {
    const auto& u = p.underlying.values();
    int k = p.underlying.size();
    int b = p.barred;
    int lo_pos = b == 0 ? -1 : pos[b - 1];
    int hi_pos = b == k - 1 ? static_cast<int>(s.size()) : pos[b];
    // Value window from the core entries adjacent in value to the barred one.
    int lo_val = 0, hi_val = static_cast<int>(s.size()) + 1;
    for (int i = 0, ci = 0; i < k; ++i) {
        if (i == b) continue;
        int sv = s[pos[ci]];
        if (u[i] < u[b]) lo_val = std::max(lo_val, sv);
        else hi_val = std::min(hi_val, sv);
        ++ci;
    }
    for (int q = lo_pos + 1; q < hi_pos; ++q)
        if (s[q] > lo_val && s[q] < hi_val) return true;
    return false;
}

bool avoids_barred(const Permutation& sigma, const BarredPattern& p) {
    PatternMatcher m(p.core().values());
    const auto& s = sigma.values();
    return m.for_each(s.data(), sigma.size(), false, [&](const int* pos) { return extends(s, p, pos); });
}

OrderedGraph inversion_graph(const Permutation& sigma) {
    OrderedGraph g;
    g.n = sigma.size();
    for (int i = 0; i < g.n; ++i) {
        g.layout.emplace_back(i + 1, sigma[i]);
        for (int j = i + 1; j < g.n; ++j)
            if (sigma[i] > sigma[j]) g.edges.emplace_back(i + 1, j + 1);
    }
    return g;
}

OrderedGraph hasse_graph(const Permutation& sigma) {
    OrderedGraph g;
    g.n = sigma.size();
    for (int i = 0; i < g.n; ++i) {
        g.layout.emplace_back(i + 1, sigma[i]);
        // Covers of i: entries to the right and above with nothing in between; scanning
        // rightwards, j is a cover iff its value is below every earlier cover's value.
        int ceiling = g.n + 1;
        for (int j = i + 1; j < g.n; ++j)
            if (sigma[j] > sigma[i] && sigma[j] < ceiling) {
                g.edges.emplace_back(i + 1, j + 1);
                ceiling = sigma[j];
            }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v(a.values());
    for (int x : b.values()) v.push_back(x + a.size());
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    for (int x : a.values()) v.push_back(x + b.size());
    for (int x : b.values()) v.push_back(x);
    return Permutation(std::move(v));
}

std::vector<Permutation> sum_components(const Permutation& sigma) {
    std::vector<Permutation> out;
    int start = 0, mx = 0;
    for (int i = 0; i < sigma.size(); ++i) {
        mx = std::max(mx, sigma[i]);
        if (mx == i + 1) {
            std::vector<int> idx;
            for (int j = start; j <= i; ++j) idx.push_back(j);
            out.push_back(sigma.restrict_to(idx));
            start = i + 1;
        }
    }
    return out;
}

bool is_indecomposable(const Permutation& sigma) {
    if (sigma.empty()) return false;
    int mx = 0;
    for (int i = 0; i + 1 < sigma.size(); ++i) {
        mx = std::max(mx, sigma[i]);
        if (mx == i + 1) return false;
    }
    return true;
}

std::set<Permutation> downset(const std::set<Permutation>& perms) {
    std::set<Permutation> out;
    std::vector<Permutation> todo;
    for (auto& p : perms)
        if (!p.empty() && out.insert(p).second) todo.push_back(p);
    while (!todo.empty()) {
        Permutation p = todo.back();
        todo.pop_back();
        if (p.size() == 1) continue;
        for (int i = 0; i < p.size(); ++i) {
            Permutation q = p.remove(i);
            if (out.insert(q).second) todo.push_back(q);
        }
    }
    return out;
}

}  // namespace permclass
