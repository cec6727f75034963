#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"

#include "permclass/intervals.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace permclass;

namespace {

const Rational eps("1/1000000000000");

// Float oracle: solve sum a_n g^{-n} = 1 by bisection on a long truncation.
double growth_oracle(const std::function<long(int)>& a) {
    auto f = [&](double g) {
        double s = 0, w = 1 / g;
        for (int n = 1; n < 4000 && w > 1e-300; ++n, w /= g) s += a(n) * w;
        return s;
    };
    double lo = 1.0000001, hi = 100;
    for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        (f(mid) > 1 ? lo : hi) = mid;
    }
    return lo;
}

// Float oracle for the gap inequalities, tails truncated far out.
bool gap_oracle(const DigitSystem& d, double beta) {
    auto vals = [&](int n) {
        std::vector<double> v;
        for (auto& g : d.at(n)) v.push_back(g.value(beta));
        std::sort(v.begin(), v.end());
        return v;
    };
    for (int n = 1; n <= d.checked_length(); ++n) {
        auto v = vals(n);
        double gap = 0;
        for (size_t i = 1; i < v.size(); ++i) gap = std::max(gap, v[i] - v[i - 1]);
        double tail = 0, w = 1 / beta;
        for (int m = n + 1; m < n + 3000 && w > 1e-300; ++m, w /= beta) {
            auto u = vals(m);
            tail += (u.back() - u.front()) * w;
        }
        if (gap > tail + 1e-12) return false;
    }
    return true;
}

std::vector<GeneralisedDigit> digits(std::initializer_list<const char*> xs) {
    std::vector<GeneralisedDigit> v;
    for (auto x : xs) v.push_back(GeneralisedDigit::parse(x));
    return v;
}

std::set<std::string> digit_strings(const std::vector<GeneralisedDigit>& v) {
    std::set<std::string> s;
    for (auto& g : v) s.insert(g.to_string());
    return s;
}

Rational ratio(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

double root_of(const Polynomial& p) { return largest_real_root(p, eps).value(); }

DigitSystem example_integer_system() {
    DigitSystem d;
    d.period = {digits({"1", "4"}), digits({"1", "3", "5", "7", "9"})};
    return d;
}

DigitSystem example_generalised_system() {
    DigitSystem d;
    d.period = {digits({"1.1", "1.11", "1.12", "1.2", "1.21", "1.22"}), digits({"0"})};
    return d;
}

const FamilyInterval& family(const std::string& name) {
    static std::map<std::string, FamilyInterval> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, family_interval(FamilySpec::named(name), eps)).first;
    return it->second;
}

}  // namespace

TEST_CASE("sum-closed growth rates of tail sequences") {
    CHECK(sum_closed_growth(TailSequence::parse("1'"), eps).value() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(sum_closed_growth(TailSequence::parse("1,1,2,3,5,7,8'"), eps).value() - 2.35526) < 5e-6);
    CHECK(std::abs(sum_closed_growth(TailSequence::parse("1,1,2,3,5,7,8,9'"), eps).value() - 2.356983) < 5e-7);
    CHECK_THROWS_AS(sum_closed_growth(TailSequence::parse("0,0'"), eps), DomainError);
    CHECK_THROWS_AS(sum_closed_growth(TailSequence::parse("1,-1,1'"), eps), DomainError);

    for (int trial = 0; trial < 40; ++trial) {
        TailSequence s;
        int h = gen::uniform(0, 6);
        for (int i = 0; i < h; ++i) s.head.push_back(gen::uniform(0, 6));
        s.tail = gen::uniform(1, 6);
        double ours = sum_closed_growth(s, eps).value();
        CHECK(ours == doctest::Approx(growth_oracle([&](int n) { return s.at(n); })).epsilon(1e-9));
        // raising any single term raises the growth rate
        TailSequence t = s;
        int pos = gen::uniform(0, h);
        if (pos == h) t.tail++;
        else t.head[pos]++;
        CHECK(sum_closed_growth(t, eps).lo > sum_closed_growth(s, eps).hi);
    }
}

TEST_CASE("periodic sequences and the named constants") {
    PeriodicSequence p{{1}, {2, 3}};
    CHECK(sum_closed_growth(p, eps).value() == doctest::Approx(growth_oracle([&](int n) { return p.at(n); })));
    CHECK(std::abs(sum_closed_growth(p, eps).value() - 2.51155) < 5e-6);

    CHECK(std::abs(root_of(theta_b_poly()) - 2.35526) < 5e-6);
    CHECK(std::abs(root_of(lambda_b_poly()) - 2.35698) < 5e-6);
    CHECK(std::abs(root_of(kappa_poly()) - 2.20557) < 5e-6);
    CHECK(std::abs(root_of(lambda_a_poly()) - 2.48187) < 5e-6);
    CHECK(std::abs(root_of(gamma_max_poly()) - 2.470979) < 5e-7);
    CHECK(std::abs(root_of(theta_b_poly()) - sum_closed_growth(q_sequence(5, 3), eps).value()) < 1e-10);
    CHECK(std::abs(root_of(lambda_b_poly()) - sum_closed_growth(TailSequence::parse("1,1,2,3,5,7,8,9'"), eps).value()) <
          1e-10);
}

TEST_CASE("generalised digits") {
    auto g = GeneralisedDigit::parse("1.221");
    CHECK(g.c == std::vector<long>{1, 2, 2, 1});
    CHECK(g.to_string() == "1.221");
    CHECK(g.value(Rational(2)) == Rational(1) + Rational(1) + Rational(1, 2) + Rational(1, 8));
    CHECK((g + GeneralisedDigit(3)).to_string() == "4.221");
    CHECK(GeneralisedDigit::parse("1.0").to_string() == "1");
    CHECK(GeneralisedDigit(std::vector<long>{1, 12, 3}).to_string() == "1.12,3");
    CHECK(GeneralisedDigit::parse("1.12,3").c == std::vector<long>{1, 12, 3});
    CHECK_THROWS_AS(GeneralisedDigit::parse("x.1"), DomainError);

    // 1.12 at odd n and 3.1 at even n spread out to 1, 4, 4, 4, ...
    DigitSystem d;
    d.period = {digits({"1.12"}), digits({"3.1"})};
    auto s = flatten_digits(d, {}, {d.period[0][0], d.period[1][0]});
    REQUIRE(s.as_tail());
    CHECK(s.as_tail()->to_string() == "1,4'");
}

TEST_CASE("gap inequalities on the integer example") {
    auto d = example_integer_system();
    CHECK(gap_inequalities_hold(d, Rational(3)));
    CHECK_FALSE(gap_inequalities_hold(d, Rational(16, 5)));
    auto t = gap_threshold(d, Rational(3), Rational(16, 5), eps);
    CHECK(std::abs(t.value() - (3 + std::sqrt(89.0)) / 4) < 1e-9);
    // At that point (3b + 8)/(b^2 - 1) = 2 is the binding constraint; (8b + 3)/(b^2 - 1) = 3 binds at (4 + sqrt 34)/3.
    double b = t.value();
    CHECK((3 * b + 8) / (b * b - 1) == doctest::Approx(2.0).epsilon(1e-8));
    DigitSystem other;
    other.period = {digits({"1", "4"}), digits({"1", "2", "3", "4", "5", "6", "7", "8", "9"})};
    auto t2 = gap_threshold(other, Rational(3), Rational(4), eps);
    CHECK(std::abs(t2.value() - (4 + std::sqrt(34.0)) / 3) < 1e-9);

    // The sum of the two integer digit sets spans 2 to 2 + sqrt 14.
    CHECK(sum_closed_growth(PeriodicSequence{{}, {1}}, eps).value() == doctest::Approx(2.0));
    CHECK(sum_closed_growth(PeriodicSequence{{}, {4, 9}}, eps).value() == doctest::Approx(2 + std::sqrt(14.0)));
}

TEST_CASE("gap inequalities on the generalised digit example") {
    auto d = example_generalised_system();
    auto t = gap_threshold(d, Rational(2), Rational(5, 2), eps);
    CHECK(std::abs(t.value() - (1 + std::sqrt(13.0)) / 2) < 1e-9);
    auto up = flatten_digits(d, {}, {GeneralisedDigit::parse("1.22"), GeneralisedDigit(0)});
    CHECK(up.to_string() == "1,(2,3)'");
    CHECK(std::abs(sum_closed_growth(up, eps).value() - 2.51155) < 5e-6);
}

TEST_CASE("gap inequalities against the float oracle") {
    for (int trial = 0; trial < 60; ++trial) {
        DigitSystem d;
        int h = gen::uniform(0, 3), t = gen::uniform(1, 2);
        auto random_set = [&] {
            std::vector<GeneralisedDigit> a;
            int m = gen::uniform(1, 4);
            for (int i = 0; i < m; ++i) {
                std::vector<long> c{gen::uniform(0, 5)};
                int len = gen::uniform(0, 2);
                for (int j = 0; j < len; ++j) c.push_back(gen::uniform(0, 3));
                a.push_back(GeneralisedDigit(c));
            }
            return a;
        };
        for (int i = 0; i < h; ++i) d.head.push_back(random_set());
        for (int i = 0; i < t; ++i) d.period.push_back(random_set());
        Rational beta = ratio(gen::uniform(110, 500), 100);
        bool exact = gap_inequalities_hold(d, beta);
        bool approx = gap_oracle(d, beta.get_d());
        // equality cases sit on the truncation boundary of the oracle
        if (exact != approx) {
            bool near = gap_oracle(d, beta.get_d() * (1 + 1e-9)) != gap_oracle(d, beta.get_d() * (1 - 1e-9));
            CHECK(near);
        }
    }
}

TEST_CASE("singleton digit sets satisfy the gap inequalities at every beta") {
    for (int trial = 0; trial < 30; ++trial) {
        DigitSystem d;
        for (int i = 0; i < gen::uniform(0, 4); ++i) d.head.push_back({GeneralisedDigit(gen::uniform(0, 9))});
        d.period.push_back({GeneralisedDigit(std::vector<long>{gen::uniform(0, 4), gen::uniform(0, 4)})});
        CHECK(gap_inequalities_hold(d, ratio(gen::uniform(1001, 9000), 1000)));
    }
}

TEST_CASE("greedy expansions") {
    DigitSystem d;
    d.period = {digits({"0", "1", "2"})};
    auto e = greedy_expansion(Rational(1, 2), d, Rational(3), 12);
    for (auto& g : e) CHECK(g.to_string() == "1");
    CHECK(greedy_expansion(Rational(0), d, Rational(3), 5) == std::vector<GeneralisedDigit>(5, GeneralisedDigit(0)));
    CHECK_THROWS_AS(greedy_expansion(Rational(2), d, Rational(3), 5), DomainError);

    auto ex = example_integer_system();
    Rational beta(3);
    Rational lo = Rational(1) * beta / (beta * beta - 1) + Rational(1) / (beta * beta - 1);
    auto all_min = greedy_expansion(lo, ex, beta, 10);
    for (auto& g : all_min) CHECK(g.to_string() == "1");

    // Where the gap inequalities hold, the greedy partial sums close in on x.
    for (int trial = 0; trial < 20; ++trial) {
        Rational hi = Rational(4) * beta / (beta * beta - 1) + Rational(9) / (beta * beta - 1);
        Rational x = lo + (hi - lo) * ratio(gen::uniform(0, 1000), 1000);
        int n = 25;
        auto digs = greedy_expansion(x, ex, beta, n);
        Rational s = expansion_value(digs, beta);
        CHECK(s <= x);
        Rational w = 1;
        for (int i = 0; i < n; ++i) w /= beta;
        CHECK(x - s <= 30 * w);
    }
}

TEST_CASE("increasing oscillations") {
    CHECK(build_oscillation(1).compact() == "1");
    CHECK(build_oscillation(2).compact() == "21");
    CHECK(build_oscillation(6).compact() == "315264");
    CHECK(build_oscillation(6, true).compact() == "241635");
    CHECK(build_oscillation(7).compact() == "3152746");
    CHECK(build_oscillation(7, true).compact() == "2416375");
    for (int n = 3; n <= 20; ++n) {
        for (bool sec : {false, true}) {
            Permutation w = build_oscillation(n, sec);
            auto g = inversion_graph(w);
            CHECK(static_cast<int>(g.edges.size()) == n - 1);
            CHECK(is_indecomposable(w));
            auto adj = g.adjacency();
            std::vector<int> deg(n);
            for (auto [a, b] : g.edges) deg[a - 1]++, deg[b - 1]++;
            CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
            CHECK(*std::max_element(deg.begin(), deg.end()) == 2);
            if (!sec) {
                int least = static_cast<int>(std::find(w.values().begin(), w.values().end(), 1) - w.values().begin());
                CHECK(deg[least] == 1);
            } else {
                CHECK(deg[0] == 1);
            }
        }
        CHECK(build_oscillation(n) != build_oscillation(n, true));
    }
}

TEST_CASE("inflated oscillations") {
    CHECK(build_inflated(7, 2, 2).to_string() == "4 1 2 6 3 9 5 7 8");
    CHECK(build_inflated(7, 2, 3).to_string() == "4 1 2 6 3 10 5 7 8 9");
    CHECK(build_inflated(7, 3, 2).to_string() == "5 1 2 3 7 4 10 6 8 9");
    CHECK(build_inflated(7, 3, 3).to_string() == "5 1 2 3 7 4 11 6 8 9 10");
    CHECK(build_inflated(7, 4, 2).to_string() == "6 1 2 3 4 8 5 11 7 9 10");
    CHECK(build_inflated(7, 4, 3).to_string() == "6 1 2 3 4 8 5 12 7 9 10 11");
    CHECK(build_inflated(5, 7, 1).to_string() == "9 1 2 3 4 5 6 7 11 8 10");
    CHECK(build_inflated(7, 9, 1).to_string() == "11 1 2 3 4 5 6 7 8 9 13 10 15 12 14");
    CHECK(build_star(7).to_string() == "8 1 2 3 4 5 6 7");
    CHECK(build_inflated(9, 3, 4).size() == 9 - 2 + 3 + 4);
    CHECK_THROWS_AS(build_inflated(7, 0, 2), DomainError);
}

TEST_CASE("the seven size-six elements of Q^{4,3}") {
    auto q = q_members(4, 3, 7);
    std::set<std::string> got;
    for (auto& p : q[6]) got.insert(p.compact());
    std::set<std::string> want{"315264", "241635", "612345", "512364", "412635", "316245", "261345"};
    CHECK(got == want);
    CHECK(build_inflated(4, 3, 1).compact() == "512364");
    CHECK(build_inflated(5, 2, 1).compact() == "412635");
    CHECK(build_inflated(5, 1, 2).compact() == "316245");
    CHECK(build_inflated(4, 1, 3, true).compact() == "261345");
}

TEST_CASE("Q enumerations and the subset oracle") {
    CHECK(q_sequence(5, 3).to_string() == "1,1,2,3,5,7,8'");
    CHECK(q_sequence(5, 5).to_string() == "1,1,2,3,5,7,9,10'");
    CHECK(q_sequence(9, 8).to_string() == "1,1,2,3,5,7,9,11,13,15,17'");
    for (auto [r, s] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 3}}) {
        auto fast = q_members(r, s, 8);
        auto slow = q_members_brute(r, s, 8, 11);
        for (int m = 1; m <= 8; ++m) CHECK(fast[m] == slow[m]);
    }
}

TEST_CASE("R sets: product order inside, incomparable across lengths") {
    auto rs = r_set(5, 4, 3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 2; ++v)
            for (int u2 = 0; u2 < 3; ++u2)
                for (int v2 = 0; v2 < 2; ++v2)
                    CHECK(oracle::contains(rs[u][v], rs[u2][v2]) == (u2 <= u && v2 <= v));
    auto r7 = r_set(7, 4, 3), r9 = r_set(9, 4, 3);
    for (auto* a : {&rs, &r7, &r9})
        for (auto* b : {&rs, &r7, &r9}) {
            if (a == b) continue;
            for (auto& row : *a)
                for (auto& p : row)
                    for (auto& row2 : *b)
                        for (auto& q : row2) CHECK_FALSE(oracle::contains(p, q));
        }
}

TEST_CASE("generalised digits of the F menus") {
    CHECK(family_downset_count(4, 3) == 7);
    CHECK(digit_strings(family_digits(4, 3)) == std::set<std::string>{"1.1", "1.2", "1.21", "1.11", "1.22", "1.221"});
    CHECK(digit_strings(family_digits(5, 3)) == std::set<std::string>{"1.1", "1.11", "1.111", "1.2", "1.21", "1.211",
                                                                      "1.22", "1.221", "1.222", "1.2221"});
    auto d55 = family_digits(5, 5);
    CHECK(d55.size() == 26);
    auto d98 = family_digits(9, 8);
    CHECK(d98.size() == 574);
    auto lo = *std::min_element(d98.begin(), d98.end());
    CHECK(lo.to_string() == "1.1");
    for (auto* d : {&d55, &d98}) {
        int hits_max = 0;
        for (auto& g : *d) {
            bool top = std::all_of(d->begin(), d->end(), [&](auto& o) { return o.dominated_by(g); });
            if (top) {
                ++hits_max;
                CHECK(g.to_string() == (d == &d55 ? "1.234321" : "1.2345677654321"));
            }
        }
        CHECK(hits_max == 1);
    }
}

TEST_CASE("F menus agree with downsets computed from permutations") {
    // Downsets of R_5^{4,3} under containment, enumerated directly.
    auto rs = r_set(5, 4, 3);
    std::vector<Permutation> all;
    for (auto& row : rs) all.insert(all.end(), row.begin(), row.end());
    std::set<std::string> got;
    int count = 0;
    for (int mask = 0; mask < (1 << all.size()); ++mask) {
        bool ok = (mask >> 2 & 1);  // (3,2) sits at row 1, column 0
        for (size_t i = 0; i < all.size() && ok; ++i)
            for (size_t j = 0; j < all.size() && ok; ++j)
                if ((mask >> i & 1) && !(mask >> j & 1) && i != j && oracle::contains(all[i], all[j])) ok = false;
        if (!ok) continue;
        ++count;
        std::vector<long> c(5, 0);
        for (size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) c[all[i].size() - 7]++;
        got.insert(GeneralisedDigit(c).to_string());
    }
    CHECK(count == family_downset_count(4, 3));
    CHECK(got == digit_strings(family_digits(4, 3)));
}

TEST_CASE("worked example with one extra upper permutation") {
    FamilySpec f;
    f.r = 5, f.s = 3, f.k = 5;
    f.extras = {{{build_inflated(5, 7, 1)}, {build_star(7)}}};
    auto fi = family_interval(f, eps);
    CHECK(fi.extras.candidates.size() == 6);
    CHECK(fi.extras.downsets == 9);
    CHECK(fi.extras.index == 8);
    CHECK(digit_strings(fi.extras.digits) == std::set<std::string>{"1", "1.1", "1.11", "1.2", "1.21", "1.22", "1.221"});
    CHECK(fi.lower_seq.to_string() == "1,1,2,3,5,7,9,10,9'");
    CHECK(fi.upper_seq.to_string() == "1,1,2,3,5,7,9,11,13,14,13,12'");
    CHECK(std::abs(fi.lower.value() - 2.36028) < 5e-6);
    CHECK(std::abs(fi.upper.value() - 2.36420) < 5e-6);
    CHECK(std::abs(fi.gamma_max.value() - 2.47098) < 5e-6);
    CHECK(fi.covered);
}

TEST_CASE("families without extras") {
    for (int k : {5, 7, 9}) {
        FamilySpec f;
        f.r = 5, f.s = 3, f.k = k;
        auto fi = family_interval(f, eps);
        std::string eights;
        for (int i = 0; i < k - 5; ++i) eights += "8,";
        CHECK(fi.lower_seq.to_string() == "1,1,2,3,5,7," + eights + "9'");
        CHECK(fi.upper_seq.to_string() == "1,1,2,3,5,7," + eights + "9,10,11,12'");
        CHECK(std::abs(fi.gamma_max.value() - root_of(gamma_max_poly())) < 1e-9);
        if (k == 5) CHECK(std::abs(fi.upper.value() - 2.362008) < 5e-7);
        CHECK(fi.covered);
    }
}

TEST_CASE("family A") {
    auto& f = family("A");
    CHECK(f.extras.digits.size() == 47);
    CHECK(f.extras.digits.front().to_string() == "1");
    CHECK(f.lower_seq.to_string() == "1,1,2,3,5,7,8,9'");
    CHECK(f.upper_seq.to_string() == "1,1,2,3,5,7,8,9,11,13,15,16,15,14,13,12'");
    CHECK(std::abs(f.lower.value() - 2.356983) < 5e-7);
    CHECK(std::abs(f.upper.value() - 2.359320) < 5e-7);
    CHECK(std::abs(f.gamma_max.value() - 2.470979) < 5e-7);
}

TEST_CASE("family B") {
    auto& f = family("B");
    CHECK(f.extras.digits.size() == 29);
    CHECK(f.lower_seq.to_string() == "1,1,2,3,5,7,9'");
    CHECK(f.upper_seq.to_string() == "1,1,2,3,5,8,11,13,14,13,12'");
    CHECK(std::abs(f.lower.value() - 2.359304) < 5e-7);
    CHECK(std::abs(f.upper.value() - 2.375872) < 5e-7);
    CHECK(std::abs(f.gamma_max.value() - 2.470979) < 5e-7);
}

TEST_CASE("family C") {
    auto& f = family("C");
    CHECK(f.extras.digits.size() == 19);
    CHECK(f.lower_seq.to_string() == "1,1,2,3,5,8,10,12,14,16,18'");
    CHECK(f.upper_seq.to_string() == "1,1,2,3,5,8,13,17,20,22,26,29,33,36,39,41,43,44,45'");
    CHECK(std::abs(f.lower.value() - 2.373983) < 5e-7);
    CHECK(std::abs(f.upper.value() - 2.389043) < 5e-7);
    CHECK(std::abs(f.gamma_max.value() - 2.786389) < 5e-7);
}

TEST_CASE("family D") {
    auto& f = family("D");
    CHECK(f.extras.digits.size() == 37);
    CHECK(f.lower_seq.to_string() == "1,1,2,4,5,7,9'");
    CHECK(f.upper_seq.to_string() == "1,1,2,4,7,9,11,12'");
    CHECK(std::abs(f.lower.value() - 2.389038) < 5e-7);
    CHECK(std::abs(f.upper.value() - 2.430059) < 5e-7);
    CHECK(std::abs(f.gamma_max.value() - 2.470979) < 5e-7);
}

TEST_CASE("family E") {
    auto& f = family("E");
    CHECK(f.extras.digits.size() == 61);
    CHECK(f.lower_seq.to_string() == "1,1,2,4,7,8,10,11'");
    CHECK(f.upper_seq.to_string() == "1,1,2,5,8,12,14,13,14,16,17,18'");
    CHECK(std::abs(f.lower.value() - 2.422247) < 5e-7);
    CHECK(std::abs(f.upper.value() - 2.485938) < 5e-7);
    CHECK(std::abs(f.gamma_max.value() - 2.489043) < 5e-7);
    // One of the lower-set members is not pinned down by the source; the lower gap threshold is not reproduced.
    WARN(f.gamma_min.has_value());
}

TEST_CASE("families cover the gap between the two constants") {
    double lb = root_of(lambda_b_poly()), la = root_of(lambda_a_poly());
    std::vector<const FamilyInterval*> fs;
    for (auto n : {"A", "B", "C", "D", "E"}) {
        fs.push_back(&family(n));
        CHECK(family(n).covered);
    }
    std::sort(fs.begin(), fs.end(), [](auto a, auto b) { return a->lower.value() < b->lower.value(); });
    CHECK(std::abs(fs.front()->lower.value() - lb) < 1e-5);
    double reach = fs.front()->covered_lo();
    for (auto f : fs) {
        CHECK(f->covered_lo() <= reach + 1e-5);
        reach = std::max(reach, f->covered_hi());
    }
    CHECK(reach >= la - 1e-5);
}

TEST_CASE("family spec files") {
    auto b = FamilySpec::parse("# family B again\nr=5\ns=3\nk=5\nextras=2 9 1 3 4 5 6 7 10 8 /\n");
    auto nb = FamilySpec::named("B");
    CHECK(b.r == nb.r);
    CHECK(b.extras.size() == 1);
    CHECK(b.extras[0].upper == nb.extras[0].upper);
    auto bi = family_interval(b, eps);
    CHECK(std::abs(bi.lower.value() - family("B").lower.value()) < 1e-12);

    CHECK_THROWS_AS(FamilySpec::parse("r=5\nextras=2 9 1 3 4 5 6 7 10 8\n"), DomainError);
    CHECK_THROWS_AS(FamilySpec::parse("q=5\n"), DomainError);
    CHECK_THROWS_AS(FamilySpec::parse("k=6\n"), DomainError);
    CHECK_THROWS_AS(FamilySpec::named("Z"), DomainError);
    // a required member that is not below the upper set
    auto bad = FamilySpec::parse("r=5\ns=3\nk=5\nextras=314562 / 251364\n");
    CHECK_THROWS_AS(family_interval(bad, eps), DomainError);
    // an upper set inside Q adds nothing
    auto empty = FamilySpec::parse("r=5\ns=3\nk=5\nextras=315264 /\n");
    CHECK_THROWS_AS(family_interval(empty, eps), DomainError);
}
