#include "doctest.h"
#include "gen.hpp"

#include "permclass/multipoly.hpp"
#include "permclass/ratfun.hpp"
#include "permclass/roots.hpp"
#include "permclass/series.hpp"

using namespace permclass;

static TruncatedSeries random_series(int order) {
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i) s[i] = gen::small_rational();
    return s;
}

static BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

TEST_CASE("series sqrt of 1-4z") {
    auto s = TruncatedSeries::from_polynomial(Polynomial{1, -4}, 12);
    auto r = series_sqrt(s);
    CHECK(r * r == s);
    std::vector<long> head{1, -2, -2, -4, -10};
    for (int i = 0; i < 5; ++i) CHECK(r[i] == head[i]);
    // (1 - sqrt(1-4z))/2 lists the Catalan numbers shifted by one.
    auto t = (TruncatedSeries::constant(1, 12) - r) * Rational(1, 2);
    for (int n = 1; n <= 12; ++n) CHECK(t[n] == catalan(n - 1));
}

TEST_CASE("series sqrt edge cases") {
    CHECK(series_sqrt(TruncatedSeries::constant(1, 5)) == TruncatedSeries::constant(1, 5));
    CHECK_THROWS_AS(series_sqrt(TruncatedSeries::from_polynomial(Polynomial{0, 1}, 4)), DomainError);
    CHECK_THROWS_AS(series_sqrt(TruncatedSeries::from_polynomial(Polynomial{2, 1}, 4)), DomainError);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_series(8);
        s[0] = Rational(gen::uniform(1, 6) * gen::uniform(1, 6), 1);
        s[0] = s[0] * s[0];
        auto r = series_sqrt(s);
        CHECK(r * r == s);
    }
}

TEST_CASE("series ring laws") {
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_series(7), b = random_series(7), c = random_series(6);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (a[0] != 0) CHECK(a * a.inverse() == TruncatedSeries::constant(1, 7));
        CHECK((a * c).order() == 6);
    }
}

TEST_CASE("algebraic roots") {
    std::vector<std::string> zy{"z", "y"};
    // T = z/(1-T), i.e. T - T^2 - z = 0.
    auto P = MultiPoly::parse("y - y^2 - z", zy);
    auto t = series_algebraic_root(P, 0, 12);
    for (int n = 1; n <= 12; ++n) CHECK(t[n] == catalan(n - 1));
    CHECK(evaluate_on_series(P, t).is_zero());

    auto trivial = series_algebraic_root(MultiPoly::parse("y - z", zy), 0, 5);
    CHECK(trivial[1] == 1);
    CHECK(trivial[2] == 0);

    CHECK_THROWS_AS(series_algebraic_root(MultiPoly::parse("y^2 - z", zy), 0, 5), DomainError);
    CHECK_THROWS_AS(series_algebraic_root(MultiPoly::parse("y - 1 - z", zy), 0, 5), DomainError);
}

TEST_CASE("cubic for Av(1243,2314)") {
    std::vector<std::string> zy{"z", "y"};
    auto P = MultiPoly::parse(
        "z - 3*z^2 + 2*z^3 - y + 5*z*y - 8*z^2*y + 5*z^3*y + 2*z*y^2 - 5*z^2*y^2 + 4*z^3*y^2 + z^3*y^3", zy);
    auto f = series_algebraic_root(P, 0, 12);
    std::vector<long> terms{1, 2, 6, 22, 88, 367, 1571, 6861, 30468, 137229, 625573, 2881230};
    for (int n = 1; n <= 12; ++n) CHECK(f[n] == terms[n - 1]);
}

TEST_CASE("root isolation") {
    Rational eps(1, 100000);
    auto theta = isolate_positive_real_root(Polynomial{-1, -2, -2, -1, -1, 0, -2, 1}, eps, RootMode::UniquePositive);
    CHECK(theta.value() == doctest::Approx(2.35526).epsilon(1e-5));
    auto kappa = isolate_positive_real_root(Polynomial{-1, 0, -2, 1}, eps);
    CHECK(kappa.value() == doctest::Approx(2.20557).epsilon(1e-5));
    auto one = isolate_positive_real_root(Polynomial{-1, 1}, eps);
    CHECK(one.exact());
    CHECK(one.lo == 1);
    CHECK_THROWS_AS(isolate_positive_real_root(Polynomial{1, 1}, eps), DomainError);
    CHECK_THROWS_AS(isolate_positive_real_root(Polynomial{2, -3, 1}, eps, RootMode::UniquePositive), DomainError);
}

TEST_CASE("root intervals are certified and nest") {
    for (int trial = 0; trial < 25; ++trial) {
        // Product of linear factors with known rational roots, plus an irrational quadratic.
        Polynomial p = Polynomial{-2, 0, 1};
        int k = gen::uniform(1, 3);
        for (int i = 0; i < k; ++i) p *= Polynomial{-gen::uniform(1, 9), gen::uniform(1, 3)};
        auto wide = isolate_positive_real_root(p, Rational(1, 1000));
        auto narrow = isolate_positive_real_root(p, Rational(1, 10000));
        CHECK(narrow.lo >= wide.lo);
        CHECK(narrow.hi <= wide.hi);
        auto sq = squarefree_part(p);
        if (!wide.exact()) CHECK(sgn(sq.eval(wide.lo)) * sgn(sq.eval(wide.hi)) <= 0);
        CHECK(wide.hi - wide.lo <= Rational(1, 1000));
    }
    // Largest root of (x-1)(x-3)(x^2-2) is 3, found exactly by bisection.
    auto r = isolate_positive_real_root(Polynomial{-1, 1} * Polynomial{-3, 1} * Polynomial{-2, 0, 1}, Rational(1, 1000));
    CHECK(r.value() == doctest::Approx(3.0).epsilon(1e-3));
}

TEST_CASE("polynomial text round trip") {
    Polynomial p{3, 0, -1};
    p += Polynomial::monomial(Rational(5, 7), 4);
    CHECK(Polynomial::parse(p.to_string()) == p);
    CHECK(Polynomial::parse("1 - 2*z + z^3") == Polynomial{1, -2, 0, 1});
    CHECK(Polynomial::parse("-z^2 + 1/2") == Polynomial::constant(Rational(1, 2)) - Polynomial::monomial(1, 2));
}

TEST_CASE("rational function equality and series") {
    auto a = RationalFunction::univariate(Polynomial{0, 1}, Polynomial{1, -2});
    auto b = RationalFunction::univariate(Polynomial{0, 1} * Polynomial{1, -1}, Polynomial{1, -2} * Polynomial{1, -1});
    CHECK(ratfun_equal(a, b));
    CHECK(ratfun_equal(a.reduced(), b.reduced()));
    CHECK(b.reduced().den() == a.den());
    auto zero1 = RationalFunction::univariate(Polynomial(), Polynomial{1});
    auto zero2 = RationalFunction::univariate(Polynomial(), Polynomial{3, 7});
    CHECK(ratfun_equal(zero1, zero2));

    auto s = ratfun_series(a, 4);
    std::vector<long> pw{0, 1, 2, 4, 8};
    for (int i = 0; i <= 4; ++i) CHECK(s[i] == pw[i]);
    auto ones = ratfun_series(RationalFunction::univariate(Polynomial{1}, Polynomial{1, -1}), 10);
    for (int i = 0; i <= 10; ++i) CHECK(ones[i] == 1);
    CHECK_THROWS_AS(ratfun_series(RationalFunction::univariate(Polynomial{1}, Polynomial{0, 1}), 3), DomainError);
}

TEST_CASE("rational function equality is an equivalence") {
    std::vector<std::string> xy{"x", "y"};
    auto rnd = [&] {
        MultiPoly p(xy);
        for (int i = 0; i < 3; ++i) p.add_term({gen::uniform(0, 2), gen::uniform(0, 2)}, gen::small_rational());
        if (p.is_zero()) p = MultiPoly::constant(xy, 1);
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto n = rnd(), d = rnd(), f = rnd(), g = rnd();
        RationalFunction a(n, d), b(n * f, d * f), c(n * f * g, d * f * g);
        CHECK(ratfun_equal(a, a));
        CHECK(ratfun_equal(a, b) == ratfun_equal(b, a));
        CHECK(ratfun_equal(a, b));
        CHECK(ratfun_equal(b, c));
        CHECK(ratfun_equal(a, c));
        CHECK(ratfun_equal((a + b) - b, a));
    }
}

TEST_CASE("multivariate exact division") {
    std::vector<std::string> xy{"x", "y"};
    auto k = MultiPoly::parse("x*y + x - y", xy);
    auto q = MultiPoly::parse("3*x^2 - y + 2", xy);
    auto prod = k * q;
    auto back = prod.divide_exact(k);
    REQUIRE(back.has_value());
    CHECK(*back == q);
    CHECK_FALSE((prod + MultiPoly::constant(xy, 1)).divide_exact(k).has_value());
}
