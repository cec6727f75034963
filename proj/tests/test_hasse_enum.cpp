#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"

#include "permclass/hasse.hpp"
#include "permclass/multipoly.hpp"

#include <cmath>
#include <functional>
#include <iostream>

using namespace permclass;

namespace {

const Rational eps("1/1000000000000");

std::vector<long> as_longs(const TruncatedSeries& s, int from, int to) {
    std::vector<long> out;
    for (int i = from; i <= to; ++i) out.push_back(BigInt(s[i].get_num()).get_si());
    return out;
}

// sigma avoids 21(3)54 iff every 2154 has an entry between its 1 and 5 valued between its 2 and its 4.
bool plane_oracle(const Permutation& s) {
    int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (s[b] >= s[a]) continue;
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (!(s[d] > s[a] && s[c] > s[d])) continue;
                    bool bridged = false;
                    for (int p = b + 1; p < c && !bridged; ++p) bridged = s[p] > s[a] && s[p] < s[d];
                    if (!bridged) return false;
                }
        }
    return true;
}

long brute(int n, const std::vector<std::string>& pats, bool forest = false) {
    std::vector<Permutation> ps;
    for (auto& p : pats) ps.push_back(Permutation::parse(p));
    return oracle::count_class(n, [&](const Permutation& s) {
        for (auto& p : ps)
            if (oracle::contains(s, p)) return false;
        return !forest || plane_oracle(s);
    });
}

// no proper prefix occupies the top values
bool skew_indecomposable(const Permutation& p) {
    int n = p.size(), lo = n + 1;
    for (int i = 0; i + 1 < n; ++i) {
        lo = std::min(lo, p[i]);
        if (lo == n - i) return false;
    }
    return true;
}

bool is_inversion_sequence(const std::vector<int>& e) {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > static_cast<int>(i)) return false;
    return true;
}

// Subsequence pattern test over all index subsets.
bool inv_oracle(const std::vector<int>& e, const std::vector<int>& p) {
    bool found = false;
    int k = static_cast<int>(p.size());
    oracle::for_each_subset(static_cast<int>(e.size()), k, [&](const std::vector<int>& idx) {
        if (found) return;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = 0; j < k && ok; ++j)
                ok = (e[idx[i]] < e[idx[j]]) == (p[i] < p[j]) && (e[idx[i]] == e[idx[j]]) == (p[i] == p[j]);
        found = ok;
    });
    return found;
}

}  // namespace

TEST_CASE("class names round trip") {
    for (auto c : {HasseClass::Schroeder_1324_2314, HasseClass::Forestlike, HasseClass::F_1234_2341,
                   HasseClass::E_1243_2314})
        CHECK(parse_hasse_class(hasse_class_name(c)) == c);
    CHECK_THROWS_AS(parse_hasse_class("nope"), DomainError);
    CHECK_THROWS_AS(closed_gf(HasseClass::Forestlike, 0), DomainError);
}

TEST_CASE("closed forms against published terms") {
    CHECK(as_longs(closed_gf(HasseClass::Schroeder_1324_2314, 5), 1, 5) == std::vector<long>{1, 2, 6, 22, 90});
    CHECK(as_longs(closed_gf(HasseClass::F_1234_2341, 12), 1, 12) ==
          std::vector<long>{1, 2, 6, 22, 89, 376, 1611, 6901, 29375, 123996, 518971, 2155145});
    CHECK(as_longs(closed_gf(HasseClass::E_1243_2314, 12), 1, 12) ==
          std::vector<long>{1, 2, 6, 22, 88, 367, 1571, 6861, 30468, 137229, 625573, 2881230});
    for (auto c : {HasseClass::Schroeder_1324_2314, HasseClass::Forestlike, HasseClass::F_1234_2341,
                   HasseClass::E_1243_2314})
        CHECK(closed_gf(c, 4)[0] == 0);
}

TEST_CASE("closed forms against brute force up to 8") {
    CHECK(as_longs(closed_gf(HasseClass::Schroeder_1324_2314, 8), 1, 8) ==
          std::vector<long>{brute(1, {"1324", "2314"}), brute(2, {"1324", "2314"}), brute(3, {"1324", "2314"}),
                            brute(4, {"1324", "2314"}), brute(5, {"1324", "2314"}), brute(6, {"1324", "2314"}),
                            brute(7, {"1324", "2314"}), brute(8, {"1324", "2314"})});
    auto fl = closed_gf(HasseClass::Forestlike, 8);
    for (int n = 1; n <= 8; ++n) CHECK(fl[n] == brute(n, {"1324"}, true));
    auto e = closed_gf(HasseClass::E_1243_2314, 7);
    for (int n = 1; n <= 7; ++n) CHECK(e[n] == brute(n, {"1243", "2314"}));
}

TEST_CASE("closed forms against count_avoiders up to 10") {
    for (auto c : {HasseClass::Schroeder_1324_2314, HasseClass::Forestlike, HasseClass::F_1234_2341,
                   HasseClass::E_1243_2314}) {
        auto s = closed_gf(c, 10);
        auto counts = count_avoiders_upto(hasse_class_basis(c), 10);
        for (int n = 1; n <= 10; ++n) CHECK_MESSAGE(s[n] == Rational(counts[n]), hasse_class_name(c) << " n=" << n);
    }
}

TEST_CASE("coefficients are nonnegative integers") {
    for (auto c : {HasseClass::Schroeder_1324_2314, HasseClass::Forestlike, HasseClass::F_1234_2341,
                   HasseClass::E_1243_2314}) {
        auto s = closed_gf(c, 30);
        for (int n = 0; n <= 30; ++n) {
            CHECK(s[n].get_den() == 1);
            CHECK(s[n] >= 0);
        }
    }
}

TEST_CASE("cubic residual vanishes") {
    int N = 25;
    auto F = closed_gf(HasseClass::E_1243_2314, N);
    auto z = [&](std::initializer_list<long> c) {
        std::vector<Rational> v;
        for (long x : c) v.push_back(x);
        return TruncatedSeries::from_polynomial(Polynomial(v), N);
    };
    auto r = (z({0, 1, -3, 2}) - z({1, -5, 8, -5}) * F + z({0, 2, -5, 4}) * F * F + z({0, 0, 0, 1}) * F * F * F);
    CHECK(r.is_zero());
}

TEST_CASE("growth constants") {
    auto sch = growth_constant(HasseClass::Schroeder_1324_2314, eps);
    CHECK(std::abs(sch.value() - (3 + 2 * std::sqrt(2.0))) < 1e-10);
    auto f = growth_constant(HasseClass::F_1234_2341, eps);
    CHECK(f.lo == 4);
    CHECK(f.hi == 4);
    auto e = growth_constant(HasseClass::E_1243_2314, eps);
    CHECK(e.lo <= Rational("51955/10000") + Rational(1, 10000));
    CHECK(e.hi >= Rational("51955/10000") - Rational(1, 10000));
    CHECK(e.hi - e.lo <= eps);
    auto fl = growth_constant(HasseClass::Forestlike, eps);
    CHECK(fl.value() > 4);
    // the ratio of successive terms approaches the growth rate from below
    auto s = closed_gf(HasseClass::E_1243_2314, 200);
    double ratio = Rational(s[200] / s[199]).get_d();
    CHECK(ratio < e.value());
    CHECK(ratio > e.value() - 0.1);
    auto t = closed_gf(HasseClass::Forestlike, 200);
    CHECK(std::abs(Rational(t[200] / t[199]).get_d() - fl.value()) < 1e-6);
}

TEST_CASE("1324 1432 satisfies its functional equation") {
    auto s = series_1324_1432(10);
    CHECK(as_longs(s, 1, 4) == std::vector<long>{1, 2, 6, 22});
    auto counts = count_avoiders_upto(Basis::parse("1324,1432"), 10);
    for (int n = 1; n <= 10; ++n) CHECK(s[n] == Rational(counts[n]));
    for (int n = 1; n <= 7; ++n) CHECK(s[n] == brute(n, {"1324", "1432"}));
}

TEST_CASE("1324 1432 skew-indecomposable members") {
    auto g = connected_1324_1432(8);
    for (int n = 1; n <= 8; ++n) {
        g.check_cap(n, n);
        long want = oracle::count_class(n, [](const Permutation& p) {
            return oracle::contains(p, Permutation::parse("1324")) == false &&
                   oracle::contains(p, Permutation::parse("1432")) == false && skew_indecomposable(p);
        });
        CHECK(g.at_ones(n) == want);
    }
}

TEST_CASE("1324 1432 reaches order 20") {
    auto s = series_1324_1432(20);
    for (int n = 1; n <= 20; ++n) CHECK(s[n].get_den() == 1);
    for (int n = 2; n <= 20; ++n) CHECK(s[n] > s[n - 1]);
}

TEST_CASE("plane permutations") {
    auto p = series_plane(10);
    CHECK(as_longs(p, 1, 3) == std::vector<long>{1, 2, 6});
    Basis plane = Basis::parse("2 1 3' 5 4");
    auto counts = count_avoiders_upto(plane, 10);
    for (int n = 1; n <= 10; ++n) CHECK(p[n] == Rational(counts[n]));
    for (int n = 1; n <= 8; ++n) CHECK(p[n] == oracle::count_class(n, plane_oracle));
    // the barred oracle agrees with the library test on random permutations
    for (int t = 0; t < 300; ++t) {
        Permutation s(gen::random_perm(gen::uniform(4, 10)));
        CHECK(plane_oracle(s) == avoids_barred(s, plane.barred[0]));
    }
}

TEST_CASE("plane series reaches order 20") {
    auto p = plane_catalytic(20);
    for (int n = 1; n <= 20; ++n) p.check_cap(n, n + 1);
    auto s = series_plane(20);
    for (int n = 2; n <= 20; ++n) CHECK(s[n] > s[n - 1]);
}

TEST_CASE("Apery numbers") {
    CHECK(apery(0) == 1);
    CHECK(apery(1) == 3);
    CHECK(apery(2) == 19);
    for (int n = 0; n <= 50; ++n) CHECK(apery(n) == apery_direct(n));
    CHECK_THROWS_AS(apery(-1), DomainError);
}

TEST_CASE("inversion sequence avoidance") {
    CHECK(count_inv_seq_avoiding({{1, 0, 1}, {2, 0, 1}}, 3) == 6);
    for (int n = 0; n <= 7; ++n) CHECK(count_inv_seq_avoiding({}, n) == factorial(n));
    CHECK_THROWS_AS(count_inv_seq_avoiding({{-1}}, 3), DomainError);
    // against a subset oracle
    for (int t = 0; t < 200; ++t) {
        int n = gen::uniform(1, 8);
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = gen::uniform(0, i);
        REQUIRE(is_inversion_sequence(e));
        std::vector<int> pat(gen::uniform(1, 3));
        for (auto& x : pat) x = gen::uniform(0, 2);
        CHECK(inv_seq_contains(e, pat) == inv_oracle(e, pat));
    }
    // counting by filtering all sequences agrees
    std::vector<std::vector<int>> pats{{0, 1, 0}, {1, 0, 0}};
    for (int n = 1; n <= 6; ++n) {
        long c = 0;
        std::vector<int> e(n);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                c += !inv_oracle(e, pats[0]) && !inv_oracle(e, pats[1]);
                return;
            }
            for (int x = 0; x <= i; ++x) e[i] = x, rec(i + 1);
        };
        rec(0);
        CHECK(count_inv_seq_avoiding(pats, n) == c);
    }
}

// Outcomes here are reported, not asserted: they concern conjectured formulas.
TEST_CASE("conjecture status") {
    auto p = series_plane(25);
    int agree = 0;
    for (int n = 2; n <= 25; ++n) agree += Rational(van_hoeij(n)) == p[n];
    std::cout << "[conjecture] van Hoeij formula matches plane counts for " << agree << " of 24 lengths 2..25\n";
    auto rec = plane_recurrence(25);
    int rec_agree = 0;
    for (int n = 1; n <= 25; ++n) rec_agree += Rational(rec[n]) == p[n];
    std::cout << "[conjecture] three-term recurrence matches for " << rec_agree << " of 25 lengths\n";
    int sav = 0;
    for (int n = 1; n <= 10; ++n) sav += Rational(count_inv_seq_avoiding({{1, 0, 1}, {2, 0, 1}}, n)) == p[n];
    std::cout << "[conjecture] inversion sequences avoiding 101, 201 match for " << sav << " of 10 lengths\n";
    std::cout << "[conjecture] p_25/p_24 = " << Rational(p[25] / p[24]).get_d()
              << ", conjectured limit (11+5*sqrt 5)/2 = " << (11 + 5 * std::sqrt(5.0)) / 2 << "\n";
    if (agree != 24) MESSAGE("van Hoeij formula disagrees somewhere");
    if (sav != 10) MESSAGE("inversion sequence counts disagree somewhere");
}
