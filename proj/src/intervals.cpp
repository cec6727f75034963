#include "permclass/intervals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace permclass {

// ---------- sequences ----------

std::string TailSequence::to_string() const {
    std::ostringstream os;
    for (long a : head) os << a << ",";
    os << tail << "'";
    return os.str();
}

TailSequence TailSequence::parse(const std::string& text) {
    std::vector<long> v;
    bool barred = false;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (barred) throw DomainError("only the last term of a tail sequence may be barred");
        if (cur.back() == '\'') {
            barred = true;
            cur.pop_back();
        }
        v.push_back(std::stol(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
        else cur += c;
    }
    flush();
    if (v.empty()) throw DomainError("empty tail sequence");
    TailSequence s;
    s.tail = v.back();
    v.pop_back();
    s.head = std::move(v);
    return s;
}

long PeriodicSequence::at(int n) const {
    int h = static_cast<int>(head.size());
    if (n <= h) return head[n - 1];
    return period[(n - h - 1) % period.size()];
}

std::optional<TailSequence> PeriodicSequence::as_tail() const {
    if (period.size() != 1) return std::nullopt;
    return TailSequence{head, period[0]};
}

std::string PeriodicSequence::to_string() const {
    if (auto t = as_tail()) return t->to_string();
    std::ostringstream os;
    for (long a : head) os << a << ",";
    os << "(";
    for (size_t i = 0; i < period.size(); ++i) os << (i ? "," : "") << period[i];
    os << ")'";
    return os.str();
}

static PeriodicSequence canonical(PeriodicSequence s) {
    size_t t = s.period.size();
    for (size_t d = 1; d < t; ++d) {
        if (t % d) continue;
        bool ok = true;
        for (size_t i = d; i < t && ok; ++i) ok = s.period[i] == s.period[i - d];
        if (ok) {
            s.period.resize(d);
            break;
        }
    }
    while (!s.head.empty() && s.head.back() == s.period.back()) {
        std::rotate(s.period.rbegin(), s.period.rbegin() + 1, s.period.rend());
        s.head.pop_back();
    }
    return s;
}

RootInterval sum_closed_growth(const TailSequence& s, const Rational& precision) {
    return sum_closed_growth(PeriodicSequence{s.head, {s.tail}}, precision);
}

RootInterval sum_closed_growth(const PeriodicSequence& s, const Rational& precision) {
    if (s.period.empty()) throw DomainError("sequence needs a repeated part");
    long mx = 0;
    bool any = false;
    for (auto* part : {&s.head, &s.period})
        for (long a : *part) {
            if (a < 0) throw DomainError("sequence has a negative term");
            any = any || a > 0;
            mx = std::max(mx, a);
        }
    if (!any) throw DomainError("sequence has no positive term");
    int h = static_cast<int>(s.head.size()), t = static_cast<int>(s.period.size());
    // In x = 1/gamma: (sum_head a_n x^n - 1)(1 - x^t) + x^h sum_j p_j x^{j+1}.
    std::vector<Rational> hc(h + 1);
    hc[0] = -1;
    for (int n = 1; n <= h; ++n) hc[n] = s.head[n - 1];
    Polynomial g = Polynomial(hc) * (Polynomial::constant(1) - Polynomial::monomial(1, t));
    for (int j = 0; j < t; ++j) g += Polynomial::monomial(s.period[j], h + j + 1);
    Polynomial p = g.reversed();
    Rational hi = Rational(mx + 2);
    Rational lo = 1;
    // Any root at gamma = 1 comes from the (1 - x^t) factor; open window excludes it.
    return isolate_positive_real_root(p, precision, RootMode::InInterval, std::make_pair(lo, hi));
}

// ---------- generalised digits ----------

GeneralisedDigit::GeneralisedDigit(std::vector<long> sub) : c(std::move(sub)) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(0);
}

Rational GeneralisedDigit::value(const Rational& beta) const {
    Rational v = 0, p = 1;
    Rational inv = 1 / beta;
    for (long d : c) {
        v += p * d;
        p *= inv;
    }
    return v;
}

double GeneralisedDigit::value(double beta) const {
    double v = 0, p = 1;
    for (long d : c) {
        v += p * d;
        p /= beta;
    }
    return v;
}

GeneralisedDigit GeneralisedDigit::operator+(const GeneralisedDigit& o) const {
    std::vector<long> r(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return GeneralisedDigit(std::move(r));
}

bool GeneralisedDigit::dominated_by(const GeneralisedDigit& o) const {
    for (size_t i = 0; i < std::max(c.size(), o.c.size()); ++i) {
        long a = i < c.size() ? c[i] : 0, b = i < o.c.size() ? o.c[i] : 0;
        if (a > b) return false;
    }
    return true;
}

std::string GeneralisedDigit::to_string() const {
    bool wide = std::any_of(c.begin() + 1, c.end(), [](long d) { return d < 0 || d > 9; });
    std::ostringstream os;
    os << c[0];
    if (c.size() > 1) os << ".";
    for (size_t i = 1; i < c.size(); ++i) {
        if (wide) os << (i > 1 ? "," : "") << c[i];
        else os << c[i];
    }
    return os.str();
}

GeneralisedDigit GeneralisedDigit::parse(const std::string& s) {
    auto dot = s.find('.');
    std::vector<long> v;
    try {
        v.push_back(std::stol(s.substr(0, dot)));
        if (dot != std::string::npos) {
            std::string rest = s.substr(dot + 1);
            if (rest.find(',') != std::string::npos) {
                std::stringstream ss(rest);
                std::string tok;
                while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
            } else {
                for (char ch : rest) {
                    if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("bad digit");
                    v.push_back(ch - '0');
                }
            }
        }
    } catch (const std::invalid_argument&) {
        throw DomainError("bad generalised digit '" + s + "'");
    }
    return GeneralisedDigit(std::move(v));
}

const std::vector<GeneralisedDigit>& DigitSystem::at(int n) const {
    int h = static_cast<int>(head.size());
    if (n <= h) return head[n - 1];
    if (period.empty()) throw DomainError("digit system has no periodic part");
    return period[(n - h - 1) % period.size()];
}

// ---------- gap inequalities ----------

static std::vector<Rational> sorted_values(const std::vector<GeneralisedDigit>& a, const Rational& beta) {
    if (a.empty()) throw DomainError("empty digit set");
    std::vector<Rational> v;
    v.reserve(a.size());
    for (auto& d : a) v.push_back(d.value(beta));
    std::sort(v.begin(), v.end());
    return v;
}

Rational digit_gap(const std::vector<GeneralisedDigit>& a, const Rational& beta) {
    auto v = sorted_values(a, beta);
    Rational g = 0;
    for (size_t i = 1; i < v.size(); ++i) g = std::max(g, Rational(v[i] - v[i - 1]));
    return g;
}

Rational digit_width(const std::vector<GeneralisedDigit>& a, const Rational& beta) {
    auto v = sorted_values(a, beta);
    return v.back() - v.front();
}

bool gap_inequalities_hold(const DigitSystem& d, const Rational& beta) {
    if (beta <= 1) throw DomainError("beta must exceed 1");
    int h = static_cast<int>(d.head.size()), t = static_cast<int>(d.period.size());
    if (t == 0) throw DomainError("digit system has no periodic part");
    int total = h + t;
    std::vector<Rational> gap(total + 1), width(total + t + 1);
    for (int n = 1; n <= total + t; ++n) {
        auto v = sorted_values(d.at(n), beta);
        width[n] = v.back() - v.front();
        if (n <= total) {
            Rational g = 0;
            for (size_t i = 1; i < v.size(); ++i) g = std::max(g, Rational(v[i] - v[i - 1]));
            gap[n] = g;
        }
    }
    Rational inv = 1 / beta;
    Rational invt = 1;
    for (int i = 0; i < t; ++i) invt *= inv;
    for (int n = 1; n <= total; ++n) {
        if (gap[n] == 0) continue;
        Rational tail = 0, w = inv;
        int m = n + 1;
        for (; m <= h; ++m, w *= inv) tail += width[m] * w;
        Rational block = 0, wb = w;
        for (int j = 0; j < t; ++j, wb *= inv) block += width[m + j] * wb;
        tail += block / (1 - invt);
        if (gap[n] > tail) return false;
    }
    return true;
}

RootInterval gap_threshold(const DigitSystem& d, Rational lo, Rational hi, const Rational& precision) {
    bool at_lo = gap_inequalities_hold(d, lo);
    if (at_lo == gap_inequalities_hold(d, hi)) throw DomainError("no change of the gap inequalities in the bracket");
    while (hi - lo > precision) {
        Rational mid = (lo + hi) / 2;
        if (gap_inequalities_hold(d, mid) == at_lo) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

// ---------- greedy expansions ----------

Rational expansion_value(const std::vector<GeneralisedDigit>& digits, const Rational& beta) {
    Rational v = 0, w = 1 / beta, inv = 1 / beta;
    for (auto& g : digits) {
        v += g.value(beta) * w;
        w *= inv;
    }
    return v;
}

// sum over i > n of the least (or greatest) digit of A_i, weighted by beta^{-i}.
static Rational extreme_tail(const DigitSystem& d, const Rational& beta, bool upper, int n) {
    int h = static_cast<int>(d.head.size()), t = static_cast<int>(d.period.size());
    auto pick = [&](int m) {
        auto vals = sorted_values(d.at(m), beta);
        return upper ? vals.back() : vals.front();
    };
    Rational inv = 1 / beta, w = 1, v = 0;
    for (int i = 0; i < n; ++i) w *= inv;
    int m = n + 1;
    for (w *= inv; m <= h; ++m, w *= inv) v += pick(m) * w;
    Rational block = 0, invt = 1;
    for (int j = 0; j < t; ++j, w *= inv) {
        block += pick(m + j) * w;
        invt *= inv;
    }
    return v + block / (1 - invt);
}

std::vector<GeneralisedDigit> greedy_expansion(const Rational& x, const DigitSystem& d, const Rational& beta,
                                               int n_digits) {
    if (beta <= 1) throw DomainError("beta must exceed 1");
    if (x < extreme_tail(d, beta, false, 0) || x > extreme_tail(d, beta, true, 0))
        throw DomainError("value lies outside the representable interval");
    std::vector<GeneralisedDigit> out;
    Rational partial = 0, w = 1 / beta, inv = 1 / beta;
    for (int n = 1; n <= n_digits; ++n, w *= inv) {
        // leave room for the least possible completion
        Rational room = x - partial - extreme_tail(d, beta, false, n);
        const auto& a = d.at(n);
        const GeneralisedDigit* best = nullptr;
        Rational best_v;
        for (auto& g : a) {
            Rational v = g.value(beta);
            if (v * w > room) continue;
            if (!best || v > best_v) {
                best = &g;
                best_v = v;
            }
        }
        if (!best) throw DomainError("greedy expansion stalled");
        out.push_back(*best);
        partial += best_v * w;
    }
    return out;
}

// ---------- oscillations ----------

static int infinite_secondary(int i) {  // 1-based: 2 4 1 6 3 8 5 ...
    if (i == 1) return 2;
    return i % 2 == 0 ? i + 2 : i - 2;
}

Permutation build_oscillation(int n, bool secondary) {
    if (n < 1) throw DomainError("oscillation length must be positive");
    std::vector<int> seq;
    if (n % 2 == 0) {
        for (int i = 1; static_cast<int>(seq.size()) < n; ++i)
            if (infinite_secondary(i) <= n) seq.push_back(infinite_secondary(i));
    } else {
        for (int i = 1; i <= n; ++i) seq.push_back(infinite_secondary(i));
    }
    Permutation sec = Permutation::standardize(seq);
    return secondary ? sec : sec.inverse();
}

Permutation build_star(int u) {
    if (u < 1) throw DomainError("star size must be positive");
    std::vector<int> v{u + 1};
    for (int i = 1; i <= u; ++i) v.push_back(i);
    return Permutation(v);
}

static std::vector<std::vector<int>> inversion_adjacency(const Permutation& p) {
    int n = p.size();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i] > p[j]) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return adj;
}

std::pair<int, int> oscillation_ends(const Permutation& osc) {
    int n = osc.size();
    if (n == 1) return {0, 0};
    auto adj = inversion_adjacency(osc);
    std::vector<int> ends;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() > 2) throw DomainError("not an oscillation");
        if (adj[i].size() == 1) ends.push_back(i);
    }
    if (ends.size() != 2) throw DomainError("not an oscillation");
    if (osc[ends[0]] > osc[ends[1]]) std::swap(ends[0], ends[1]);
    return {ends[0], ends[1]};
}

namespace {

struct Inflated {
    Permutation perm;
    std::vector<int> low, high, core;  // core in path order from the lower end's neighbour
};

Inflated inflate(int n, int r, int s, bool secondary) {
    if (n < 2) throw DomainError("inflation needs an oscillation with two ends");
    if (r < 1 || s < 1) throw DomainError("inflation sizes must be positive");
    Permutation osc = build_oscillation(n, secondary);
    auto [lo, hi] = oscillation_ends(osc);
    auto adj = inversion_adjacency(osc);
    std::vector<int> path{lo};
    for (int prev = -1, cur = lo; cur != hi;) {
        int nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = nxt;
        path.push_back(cur);
    }
    std::vector<long> key;
    std::vector<int> newpos(n, -1);
    Inflated out;
    for (int p = 0; p < n; ++p) {
        int mult = p == lo ? r : p == hi ? s : 1;
        newpos[p] = static_cast<int>(key.size());
        for (int j = 0; j < mult; ++j) {
            if (p == lo) out.low.push_back(static_cast<int>(key.size()));
            if (p == hi) out.high.push_back(static_cast<int>(key.size()));
            key.push_back(static_cast<long>(osc[p]) * 1000 + j);
        }
    }
    std::vector<long> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> vals(key.size());
    for (size_t i = 0; i < key.size(); ++i)
        vals[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[i]) - sorted.begin()) + 1;
    out.perm = Permutation(vals);
    for (size_t i = 1; i + 1 < path.size(); ++i) out.core.push_back(newpos[path[i]]);
    return out;
}

}  // namespace

Permutation build_inflated(int n, int r, int s, bool secondary) { return inflate(n, r, s, secondary).perm; }

std::vector<std::vector<Permutation>> r_set(int n, int r, int s) {
    std::vector<std::vector<Permutation>> out;
    for (int u = 2; u <= r; ++u) {
        out.emplace_back();
        for (int v = 2; v <= s; ++v) out.back().push_back(build_inflated(n, u, v));
    }
    return out;
}

static std::set<Permutation> all_r_members(int r, int s, int n_lo, int max_len) {
    std::set<Permutation> out;
    for (int n = n_lo | 1; n + 2 <= max_len; n += 2)
        for (int u = 2; u <= r; ++u)
            for (int v = 2; v <= s; ++v)
                if (n - 2 + u + v <= max_len) out.insert(build_inflated(n, u, v));
    return out;
}

std::vector<std::vector<Permutation>> q_members(int r, int s, int n_max) {
    if (r < 2 || s < 2) throw DomainError("Q needs r, s >= 2");
    auto excluded = all_r_members(r, s, 5, n_max);
    std::vector<std::set<Permutation>> by_len(n_max + 1);
    for (int n = 5; n <= n_max + 5; n += 2) {
        Inflated inf = inflate(n, r, s, false);
        int c = static_cast<int>(inf.core.size());
        auto emit = [&](int a, int b, int i, int j) {
            int len = (b - a) + i + j;
            if (len == 0 || len > n_max) return;
            std::vector<int> pos(inf.core.begin() + a, inf.core.begin() + b);
            pos.insert(pos.end(), inf.low.begin(), inf.low.begin() + i);
            pos.insert(pos.end(), inf.high.begin(), inf.high.begin() + j);
            std::sort(pos.begin(), pos.end());
            Permutation p = inf.perm.restrict_to(pos);
            if (!excluded.count(p)) by_len[len].insert(p);
        };
        emit(0, 0, 1, 0);
        emit(0, 0, 0, 1);
        for (int a = 0; a < c; ++a)
            for (int b = a + 1; b <= c; ++b)
                for (int i = 0; i <= (a == 0 ? r : 0); ++i)
                    for (int j = 0; j <= (b == c ? s : 0); ++j) emit(a, b, i, j);
    }
    std::vector<std::vector<Permutation>> out(n_max + 1);
    for (int m = 1; m <= n_max; ++m) out[m].assign(by_len[m].begin(), by_len[m].end());
    return out;
}

std::vector<std::vector<Permutation>> q_members_brute(int r, int s, int n_max, int n_osc) {
    auto excluded = all_r_members(r, s, 5, n_max);
    std::vector<std::set<Permutation>> by_len(n_max + 1);
    for (int n = 5; n <= n_osc; n += 2) {
        Permutation w = build_inflated(n, r, s);
        int len = w.size();
        if (len > 24) throw DomainError("too large for subset enumeration");
        for (unsigned mask = 1; mask < (1u << len); ++mask) {
            if (__builtin_popcount(mask) > n_max) continue;
            std::vector<int> pos;
            for (int i = 0; i < len; ++i)
                if (mask >> i & 1) pos.push_back(i);
            Permutation p = w.restrict_to(pos);
            if (is_indecomposable(p) && !excluded.count(p)) by_len[p.size()].insert(p);
        }
    }
    std::vector<std::vector<Permutation>> out(n_max + 1);
    for (int m = 1; m <= n_max; ++m) out[m].assign(by_len[m].begin(), by_len[m].end());
    return out;
}

std::vector<long> enumerate_Q(int r, int s, int n_max) {
    auto q = q_members(r, s, n_max);
    std::vector<long> out;
    for (int m = 1; m <= n_max; ++m) out.push_back(static_cast<long>(q[m].size()));
    return out;
}

TailSequence q_sequence(int r, int s) {
    // Counts settle once lengths exceed every inflated end; the run of equal terms is checked to be long.
    int n_max = r + s + 12;
    auto q = enumerate_Q(r, s, n_max);
    int k = n_max;
    while (k > 1 && q[k - 2] == q[n_max - 1]) --k;
    if (n_max - k < 6) throw DomainError("Q counts did not settle");
    TailSequence t;
    t.head.assign(q.begin(), q.begin() + (k - 1));
    t.tail = q[n_max - 1];
    return t;
}

// ---------- digit menus ----------

static void staircases(int r, int s, const std::function<void(const std::vector<int>&)>& f) {
    // h[u-2] = largest v in column u, or 1 for an empty column; nonincreasing in u.
    std::vector<int> h(r - 1);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == r - 1) {
            f(h);
            return;
        }
        for (int v = 1; v <= cap; ++v) {
            h[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, s);
}

static void family_walk(int r, int s, const std::function<void(const GeneralisedDigit&)>& f) {
    if (r < 3 || s < 2) throw DomainError("family needs r >= 3 and s >= 2");
    staircases(r, s, [&](const std::vector<int>& h) {
        if (h[1] < 2) return;
        std::vector<long> c(r + s - 3, 0);
        for (int u = 2; u <= r; ++u)
            for (int v = 2; v <= h[u - 2]; ++v) c[u + v - 4]++;
        f(GeneralisedDigit(c));
    });
}

std::vector<GeneralisedDigit> family_digits(int r, int s) {
    std::set<GeneralisedDigit> seen;
    family_walk(r, s, [&](const GeneralisedDigit& g) { seen.insert(g); });
    return {seen.begin(), seen.end()};
}

int family_downset_count(int r, int s) {
    int n = 0;
    family_walk(r, s, [&](const GeneralisedDigit&) { ++n; });
    return n;
}

// ---------- extras ----------

static std::set<Permutation> indecomposables_below(const Permutation& u) {
    int len = u.size();
    if (len > 24) throw DomainError("extra permutation too long");
    std::set<Permutation> out;
    for (unsigned mask = 1; mask < (1u << len); ++mask) {
        std::vector<int> pos;
        for (int i = 0; i < len; ++i)
            if (mask >> i & 1) pos.push_back(i);
        Permutation p = u.restrict_to(pos);
        if (is_indecomposable(p)) out.insert(p);
    }
    return out;
}

ExtraDigits extra_digits(int r, int s, int k, const std::vector<ExtraSpec>& extras) {
    ExtraDigits out;
    if (extras.empty()) return out;
    int max_len = 0;
    for (auto& e : extras) {
        if (e.upper.empty()) throw DomainError("extras need a nonempty upper set");
        for (auto& u : e.upper) max_len = std::max(max_len, u.size());
    }
    auto q = q_members(r, s, max_len);
    std::set<Permutation> qset;
    for (auto& level : q) qset.insert(level.begin(), level.end());
    auto forbidden = all_r_members(r, s, std::max(k, 5), max_len);

    std::vector<std::vector<Permutation>> xs;
    std::set<Permutation> all_x;
    for (auto& e : extras) {
        std::set<Permutation> below;
        for (auto& u : e.upper) {
            auto b = indecomposables_below(u);
            below.insert(b.begin(), b.end());
        }
        std::vector<Permutation> x;
        for (auto& p : below)
            if (!qset.count(p)) {
                if (forbidden.count(p)) throw DomainError("extras meet an R set: " + p.compact());
                x.push_back(p);
            }
        for (auto& l : e.lower)
            if (std::find(x.begin(), x.end(), l) == x.end())
                throw DomainError("lower set member " + l.compact() + " is not an extra below the upper set");
        std::stable_sort(x.begin(), x.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
        all_x.insert(x.begin(), x.end());
        xs.push_back(std::move(x));
    }
    if (all_x.empty()) throw DomainError("extras add nothing outside Q");
    out.candidates.assign(all_x.begin(), all_x.end());
    out.index = std::min_element(out.candidates.begin(), out.candidates.end(),
                                 [](auto& a, auto& b) { return a.size() < b.size(); })
                    ->size();

    std::set<GeneralisedDigit> seen;
    for (size_t e = 0; e < extras.size(); ++e) {
        const auto& x = xs[e];
        int m = static_cast<int>(x.size());
        std::vector<std::vector<int>> below(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (x[j].size() < x[i].size() && contains(x[i], x[j])) below[i].push_back(j);
        std::vector<char> forced(m, 0);
        for (auto& l : extras[e].lower) {
            int i = static_cast<int>(std::find(x.begin(), x.end(), l) - x.begin());
            forced[i] = 1;
            for (int j : below[i]) forced[j] = 1;
        }
        std::vector<char> in(m, 0);
        std::vector<long> counts(max_len + 1, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == m) {
                std::vector<long> c(counts.begin() + out.index, counts.end());
                seen.insert(GeneralisedDigit(c));
                out.downsets++;
                return;
            }
            bool can = std::all_of(below[i].begin(), below[i].end(), [&](int j) { return in[j]; });
            if (can) {
                in[i] = 1;
                counts[x[i].size()]++;
                rec(i + 1);
                counts[x[i].size()]--;
                in[i] = 0;
            }
            if (!forced[i]) rec(i + 1);
        };
        rec(0);
    }
    out.digits.assign(seen.begin(), seen.end());
    return out;
}

// ---------- families ----------

static std::vector<Permutation> perm_list(const std::string& text) {
    std::vector<Permutation> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(Permutation::parse(tok));
    }
    return out;
}

static std::vector<ExtraSpec> parse_extras(const std::string& text) {
    std::vector<ExtraSpec> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        auto slash = part.find('/');
        if (slash == std::string::npos || part.find('/', slash + 1) != std::string::npos)
            throw DomainError("extras must read 'upper / lower'");
        ExtraSpec e;
        e.upper = perm_list(part.substr(0, slash));
        e.lower = perm_list(part.substr(slash + 1));
        if (e.upper.empty()) throw DomainError("extras need a nonempty upper set");
        out.push_back(std::move(e));
    }
    return out;
}

FamilySpec FamilySpec::named(const std::string& name) {
    FamilySpec f;
    f.name = name;
    if (name == "A") {
        f.r = 5, f.s = 3, f.k = 7;
        f.extras = parse_extras("11 1 2 3 4 5 6 7 8 9 13 10 15 12 14 / 8 1 2 3 4 5 6 7");
    } else if (name == "B") {
        f.r = 5, f.s = 3, f.k = 5;
        f.extras = parse_extras("2 9 1 3 4 5 6 7 10 8 /");
    } else if (name == "C") {
        f.r = 9, f.s = 8, f.k = 5;
        f.extras = parse_extras("3 1 8 2 4 5 6 10 7 9 / 251364");
    } else if (name == "D") {
        f.r = 5, f.s = 3, f.k = 5;
        f.extras = parse_extras("314562, 281345697 / 2341");
    } else if (name == "E") {
        f.r = 5, f.s = 5, f.k = 5;
        f.extras = parse_extras("3412, 2613475, 31456827 / 2341, 3412; 3412, 2613475, 31456827 / 251364, 23451, 23514");
    } else {
        throw DomainError("unknown family '" + name + "'");
    }
    return f;
}

FamilySpec FamilySpec::parse(const std::string& text) {
    FamilySpec f;
    f.name = "custom";
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError("expected key=value: " + line);
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        try {
            if (key == "r") f.r = std::stoi(val);
            else if (key == "s") f.s = std::stoi(val);
            else if (key == "k") f.k = std::stoi(val);
            else if (key == "name") f.name = val;
            else if (key == "extras") {
                auto e = parse_extras(val);
                f.extras.insert(f.extras.end(), e.begin(), e.end());
            } else throw DomainError("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw DomainError("bad value for " + key);
        }
    }
    if (f.r < 3 || f.s < 2) throw DomainError("family needs r >= 3 and s >= 2");
    if (f.k < 5 || f.k % 2 == 0) throw DomainError("k must be odd and at least 5");
    return f;
}

PeriodicSequence flatten_digits(const DigitSystem& d, const std::vector<GeneralisedDigit>& choice_head,
                                const std::vector<GeneralisedDigit>& choice_period) {
    int h = static_cast<int>(choice_head.size()), t = static_cast<int>(choice_period.size());
    if (h != static_cast<int>(d.head.size()) || t != static_cast<int>(d.period.size()) || t == 0)
        throw DomainError("digit choice does not match the system");
    auto pick = [&](int n) -> const GeneralisedDigit& {
        return n <= h ? choice_head[n - 1] : choice_period[(n - h - 1) % t];
    };
    int longest = 1;
    for (auto& g : choice_head) longest = std::max<int>(longest, g.c.size());
    for (auto& g : choice_period) longest = std::max<int>(longest, g.c.size());
    int stable = h + longest + t;  // from here on the terms repeat with period t
    int upto = stable + t;
    std::vector<long> a(upto + 1, 0);
    for (int n = 1; n <= upto; ++n) {
        const auto& g = pick(n);
        for (size_t i = 0; i < g.c.size() && n + static_cast<int>(i) <= upto; ++i) a[n + i] += g.c[i];
    }
    PeriodicSequence s;
    s.head.assign(a.begin() + 1, a.begin() + stable);
    s.period.assign(a.begin() + stable, a.begin() + stable + t);
    return canonical(std::move(s));
}

static std::vector<GeneralisedDigit> dedupe(std::vector<GeneralisedDigit> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

static GeneralisedDigit extreme_at(const std::vector<GeneralisedDigit>& a, const Rational& beta, bool upper) {
    const GeneralisedDigit* best = &a[0];
    Rational bv = a[0].value(beta);
    for (auto& g : a) {
        Rational v = g.value(beta);
        if (upper ? v > bv : v < bv) {
            best = &g;
            bv = v;
        }
    }
    return *best;
}

// Least (or greatest) digit of every A_n at beta, with beta the growth rate of the resulting sequence.
static std::pair<PeriodicSequence, RootInterval> extreme_sequence(const DigitSystem& d, bool upper,
                                                                  const Rational& precision) {
    Rational beta = 2;
    std::optional<PeriodicSequence> last;
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<GeneralisedDigit> ch, cp;
        for (auto& a : d.head) ch.push_back(extreme_at(a, beta, upper));
        for (auto& a : d.period) cp.push_back(extreme_at(a, beta, upper));
        PeriodicSequence seq = flatten_digits(d, ch, cp);
        RootInterval g = sum_closed_growth(seq, precision);
        if (last && last->head == seq.head && last->period == seq.period) return {seq, g};
        last = seq;
        beta = g.mid();
    }
    throw DomainError("extreme digit choice does not settle");
}

double FamilyInterval::covered_hi() const { return std::min(upper.value(), gamma_max.value()); }

FamilyInterval family_interval(const FamilySpec& spec, const Rational& precision) {
    FamilyInterval out;
    out.spec = spec;
    out.q = q_sequence(spec.r, spec.s);
    out.f_digits = family_digits(spec.r, spec.s);
    out.extras = extra_digits(spec.r, spec.s, spec.k, spec.extras);

    int idx = out.extras.digits.empty() ? 0 : out.extras.index;
    auto set_at = [&](int n) {
        std::vector<GeneralisedDigit> a{GeneralisedDigit(out.q.at(n))};
        if (n % 2 == 1 && n >= spec.k + 2) {
            std::vector<GeneralisedDigit> b;
            for (auto& f : out.f_digits) b.push_back(a[0] + f);
            a = b;
        }
        if (n == idx) {
            std::vector<GeneralisedDigit> b;
            for (auto& x : a)
                for (auto& hd : out.extras.digits) b.push_back(x + hd);
            a = b;
        }
        return dedupe(a);
    };
    int p = std::max({static_cast<int>(out.q.head.size()) + 1, idx + 1, spec.k + 2});
    for (int n = 1; n < p; ++n) out.system.head.push_back(set_at(n));
    out.system.period = {set_at(p), set_at(p + 1)};

    std::tie(out.lower_seq, out.lower) = extreme_sequence(out.system, false, precision);
    std::tie(out.upper_seq, out.upper) = extreme_sequence(out.system, true, precision);

    // Scan outward from the lower endpoint on a 1/512 grid, then bisect the first change.
    const Rational step("1/512");
    Rational start = out.lower.lo;
    bool holds_at_start = gap_inequalities_hold(out.system, start);
    Rational a = start, b = start + step;
    while (b < 8 && gap_inequalities_hold(out.system, b)) {
        a = b;
        b += step;
    }
    if (b >= 8) out.gamma_max = {Rational(8), Rational(8)};
    else if (!holds_at_start) out.gamma_max = {start, start};
    else out.gamma_max = gap_threshold(out.system, a, b, precision);

    if (holds_at_start) {
        Rational hi = start, lo = start - step;
        while (lo > 1 && gap_inequalities_hold(out.system, lo)) {
            hi = lo;
            lo -= step;
        }
        if (lo > 1) out.gamma_min = gap_threshold(out.system, lo, hi, precision);
    }
    out.covered = holds_at_start && out.gamma_max.lo > out.lower.hi;
    return out;
}

Polynomial theta_b_poly() { return Polynomial{-1, -2, -2, -1, -1, 0, -2, 1}; }
Polynomial lambda_b_poly() { return Polynomial{-1, -1, -2, -2, -1, -1, 0, -2, 1}; }
Polynomial lambda_a_poly() { return Polynomial{-1, -2, -2, 0, -2, 1}; }
Polynomial kappa_poly() { return Polynomial{-1, 0, -2, 1}; }
Polynomial gamma_max_poly() { return Polynomial{-1, 0, -1, -2, 1}; }

}  // namespace permclass
