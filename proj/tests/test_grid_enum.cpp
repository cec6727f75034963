#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"

#include "permclass/avoiders.hpp"
#include "permclass/grid.hpp"
#include "permclass/gridded_gf.hpp"
#include "permclass/skinny.hpp"

using namespace permclass;

namespace {

// Cell-by-cell check written independently of the library version.
bool valid_by_cells(const Permutation& s, const GridMatrix& M, const Gridding& g) {
    int n = s.size();
    for (int c = 0; c < M.columns(); ++c)
        for (int r = 0; r < M.rows(); ++r) {
            std::vector<int> pts;
            for (int i = g.column_dividers[c]; i < g.column_dividers[c + 1]; ++i)
                if (s[i] > g.row_dividers[r] && s[i] <= g.row_dividers[r + 1]) pts.push_back(s[i]);
            if (pts.empty()) continue;
            int e = M.at(c, r);
            if (e == 0) return false;
            for (size_t j = 1; j < pts.size(); ++j)
                if ((e == 1) != (pts[j] > pts[j - 1])) return false;
        }
    (void)n;
    return true;
}

long brute_gridded(const GridMatrix& M, int n) {
    long total = 0;
    auto cds = divider_sequences(M.columns(), n);
    auto rds = divider_sequences(M.rows(), n);
    for (auto& p : oracle::all_perms(n))
        for (auto& cd : cds)
            for (auto& rd : rds)
                if (valid_by_cells(p, M, {cd, rd})) ++total;
    return total;
}

GridMatrix random_matrix(int t, int u) {
    GridMatrix m(t, u);
    for (int c = 0; c < t; ++c)
        for (int r = 0; r < u; ++r) m.set(c, r, gen::uniform(-1, 1));
    return m;
}

GridMatrix random_forest_matrix(int cells_max) {
    // Grow a tree on the row-column graph by attaching pendant edges.
    while (true) {
        int t = gen::uniform(1, 4), u = gen::uniform(1, 4);
        GridMatrix m(t, u);
        int target = gen::uniform(1, cells_max);
        for (int tries = 0; tries < 60 && m.nonzero_count() < target; ++tries) {
            int c = gen::uniform(0, t - 1), r = gen::uniform(0, u - 1);
            if (m.at(c, r)) continue;
            m.set(c, r, gen::uniform(0, 1) ? 1 : -1);
            try {
                plan_build(m);
            } catch (const DomainError&) {
                m.set(c, r, 0);
            }
        }
        if (m.nonzero_count() > 0) return m;
    }
}

std::vector<long> bigs(const std::vector<BigInt>& v) {
    std::vector<long> out;
    for (auto& b : v) out.push_back(b.get_si());
    return out;
}

}  // namespace

TEST_CASE("matrix text uses rows top to bottom") {
    auto M = GridMatrix::parse("1 -1 0; 0 -1 1");
    CHECK(M.columns() == 3);
    CHECK(M.rows() == 2);
    CHECK(M.at(0, 1) == 1);
    CHECK(M.at(1, 1) == -1);
    CHECK(M.at(2, 0) == 1);
    CHECK(M.to_string() == "1 -1 0; 0 -1 1");
    for (int i = 0; i < 30; ++i) {
        auto R = random_matrix(gen::uniform(1, 4), gen::uniform(1, 4));
        CHECK(GridMatrix::parse(R.to_string()) == R);
        CHECK(GridMatrix::from_rows(R.rows_top_to_bottom()) == R);
        CHECK(R.transpose().transpose() == R);
    }
    CHECK_THROWS_AS(GridMatrix::parse("1 2"), DomainError);
    CHECK_THROWS_AS(GridMatrix::parse("1 1; 1"), DomainError);
}

TEST_CASE("griddings of the two by two example") {
    auto M = GridMatrix::parse("1 1; -1 -1");
    auto s = Permutation::parse("3 1 5 6 7 4 8 2");
    CHECK(count_griddings(s, M) == 7);
    CHECK(count_griddings_naive(s, M) == 7);
    Gridding leftmost{{0, 5, 8}, {0, 2, 8}};
    CHECK(is_valid_gridding(s, M, leftmost));
    auto all = all_griddings(s, M);
    CHECK(std::find(all.begin(), all.end(), leftmost) != all.end());
    CHECK(in_grid_class(s, M));
    CHECK_FALSE(is_valid_gridding(s, M, {{0, 4, 8}, {0, 2, 8}}));
}

TEST_CASE("gridding counts agree with cell-by-cell checking") {
    for (int it = 0; it < 60; ++it) {
        auto M = random_matrix(gen::uniform(1, 3), gen::uniform(1, 2));
        Permutation s(gen::random_perm(gen::uniform(0, 6)));
        long brute = 0;
        for (auto& cd : divider_sequences(M.columns(), s.size()))
            for (auto& rd : divider_sequences(M.rows(), s.size())) {
                bool v = valid_by_cells(s, M, {cd, rd});
                CHECK(v == is_valid_gridding(s, M, {cd, rd}));
                brute += v;
            }
        CHECK(count_griddings(s, M) == brute);
        CHECK(count_griddings_naive(s, M) == brute);
        CHECK(in_grid_class(s, M) == (brute > 0));
    }
}

TEST_CASE("gridded count formula against brute force") {
    for (int t = 1; t <= 2; ++t)
        for (int u = 1; u <= 2; ++u)
            for (auto& M : all_matrices(t, u))
                for (int n = 0; n <= 4; ++n) CHECK(count_gridded_perms(M, n) == brute_gridded(M, n));
    for (auto dims : {std::pair{2, 3}, std::pair{3, 2}})
        for (auto& M : all_matrices(dims.first, dims.second))
            for (int n = 0; n <= 5; ++n) REQUIRE(count_gridded_perms(M, n) == count_gridded_perms_oracle(M, n));
}

TEST_CASE("gridded oracle: serial and parallel agree") {
    for (int it = 0; it < 10; ++it) {
        auto M = random_matrix(gen::uniform(1, 3), gen::uniform(1, 3));
        int n = gen::uniform(0, 7);
        CHECK(count_gridded_perms_oracle(M, n) == count_gridded_perms_oracle_serial(M, n));
    }
}

TEST_CASE("gridded count is invariant under row and column permutations") {
    for (int it = 0; it < 40; ++it) {
        int t = gen::uniform(1, 3), u = gen::uniform(1, 3);
        auto M = random_matrix(t, u);
        std::vector<int> co(t), ro(u);
        std::iota(co.begin(), co.end(), 0);
        std::iota(ro.begin(), ro.end(), 0);
        std::shuffle(co.begin(), co.end(), gen::rng());
        std::shuffle(ro.begin(), ro.end(), gen::rng());
        int n = gen::uniform(0, 7);
        CHECK(count_gridded_perms(M, n) == count_gridded_perms(M.permuted(co, ro), n));
        CHECK(count_gridded_perms(M, n) == count_gridded_perms(M.transpose(), n));
    }
}

TEST_CASE("greedy gridding example") {
    auto s = Permutation::parse("2 6 7 8 11 3 9 13 15 14 12 10 5 4 1");
    auto g = greedy_gridding(s, {1, -1, 1, 1, -1, -1});
    REQUIRE(g);
    CHECK(g->column_dividers == std::vector<int>{0, 5, 6, 9, 10, 15, 15});
    CHECK(is_valid_gridding(s, GridMatrix::row_vector({1, -1, 1, 1, -1, -1}), *g));
    auto id = greedy_gridding(Permutation::identity(4), {1});
    REQUIRE(id);
    CHECK(id->column_dividers == std::vector<int>{0, 4});
    CHECK_FALSE(greedy_gridding(Permutation::parse("2 1"), {1}));
}

TEST_CASE("greedy gridding is the rightmost-divider gridding") {
    for (int k = 1; k <= 4; ++k)
        for (int it = 0; it < 6; ++it) {
            std::vector<int> V(k);
            for (int& v : V) v = gen::uniform(0, 1) ? 1 : -1;
            auto M = GridMatrix::row_vector(V);
            for (int n = 0; n <= 6; ++n)
                for (auto& p : oracle::all_perms(n)) {
                    auto all = all_griddings(p, M);
                    auto g = greedy_gridding(p, V);
                    REQUIRE(g.has_value() == !all.empty());
                    if (!g) continue;
                    // Column dividers as large as possible, lexicographically.
                    auto best = std::max_element(all.begin(), all.end(), [](const Gridding& a, const Gridding& b) {
                        return a.column_dividers < b.column_dividers;
                    });
                    CHECK(*g == *best);
                }
        }
}

TEST_CASE("skinny generating functions of the table") {
    auto U = [](Polynomial n, Polynomial d) { return RationalFunction::univariate(n, d); };
    Polynomial a{1, -1}, b{1, -2}, c{1, -3};
    CHECK(ratfun_equal(skinny_gf({1}), U({0, 1}, a)));
    CHECK(ratfun_equal(skinny_gf({-1}), U({0, 1}, a)));
    CHECK(ratfun_equal(skinny_gf({-1, 1}), U({0, 1}, b)));
    CHECK(ratfun_equal(skinny_gf({1, 1}), U({0, 1, -2, 2}, a * a * b)));
    CHECK(ratfun_equal(skinny_gf({1, -1, 1}), U({0, 1, -3, 3}, a * a * c)));
    CHECK(ratfun_equal(skinny_gf({-1, 1, 1}), U({0, 1, -6, 13, -9}, a * b * b * c)));
    CHECK(ratfun_equal(skinny_gf({1, 1, 1}), U({0, 1, -8, 26, -39, 30, -12}, a * a * a * b * b * c)));
    CHECK_THROWS_AS(skinny_gf({}), DomainError);
    CHECK_THROWS_AS(skinny_gf({1, 0}), DomainError);
}

TEST_CASE("skinny series match brute-force grid class counts") {
    for (int k = 1; k <= 4; ++k)
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> V(k);
            for (int j = 0; j < k; ++j) V[j] = mask >> j & 1 ? 1 : -1;
            auto M = GridMatrix::row_vector(V);
            auto s = ratfun_series(skinny_gf(V), 7);
            CHECK(s.coeff(0) == 0);
            for (int n = 1; n <= 7; ++n) {
                long direct = oracle::count_class(n, [&](const Permutation& p) { return in_grid_class(p, M); });
                CHECK(s.coeff(n) == direct);
            }
        }
}

TEST_CASE("skinny symmetry: reversing and negating V") {
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> V(k);
        for (int& v : V) v = gen::uniform(0, 1) ? 1 : -1;
        std::vector<int> R(V.rbegin(), V.rend()), N = V;
        for (int& v : N) v = -v;
        CHECK(ratfun_equal(skinny_gf(V), skinny_gf(R)));
        CHECK(ratfun_equal(skinny_gf(V), skinny_gf(N)));
    }
}

TEST_CASE("conjectured form for Grid(1,...,1)") {
    for (int k = 1; k <= 5; ++k) WARN(ratfun_equal(skinny_gf(std::vector<int>(k, 1)), skinny_ones_conjecture(k)));
}

TEST_CASE("acyclic engine: base and one step") {
    auto base = GridMatrix::parse("1 0 0; 0 0 -1; 0 1 0");
    auto a = acyclic_gridded_gf({base, {}});
    CHECK(a.denominator() == Polynomial{1, -1}.pow(3));
    // Marking one cell: 1 / ((1 - zx)(1 - z)^2).
    MultiPoly D = a.D.evaluate_var(2, 1).evaluate_var(3, 1);
    auto P = [&](const char* t) { return MultiPoly::parse(t, a.D.vars()); };
    CHECK(D == P("1 - z*x1") * P("1 - z").pow(2));

    auto one = GridMatrix::parse("1");
    auto b = acyclic_gridded_gf({one, {BuildStep{true, 0, {1}, {1}}}});
    CHECK(b.matrix == GridMatrix::parse("1 1"));
    CHECK(b.denominator() == Polynomial{1, -2});
    CHECK_THROWS_AS(acyclic_gridded_gf({GridMatrix::parse("1 1"), {}}), DomainError);
    CHECK_THROWS_AS(acyclic_gridded_gf({one, {BuildStep{true, 0, {3}, {1}}}}), DomainError);
    CHECK_THROWS_AS(acyclic_gridded_gf({one, {BuildStep{true, 0, {1}, {1}}, BuildStep{true, 0, {0}, {1}}}}),
                    DomainError);
}

TEST_CASE("acyclic engine: inserting three columns in one row") {
    auto M = GridMatrix::parse("-1 1 0 -1; 0 1 0 0; 0 -1 1 0");
    auto plus = GridMatrix::parse("0 -1 1 0 0 0 -1; 1 0 1 -1 -1 0 0; 0 0 -1 0 0 1 0");
    auto script = plan_build(M);
    script.steps.push_back(BuildStep{true, 1, {0, 3, 4}, {1, -1, -1}});
    auto a = acyclic_gridded_gf(script);
    CHECK(a.matrix == plus);
    auto s = a.series(10);
    for (int n = 0; n <= 10; ++n) CHECK(s.coeff(n) == count_gridded_perms(plus, n));
}

TEST_CASE("acyclic engine: planner scripts agree with the formula") {
    for (int it = 0; it < 25; ++it) {
        auto M = random_forest_matrix(6);
        auto script = plan_build(M);
        auto a = acyclic_gridded_gf(script);
        CHECK(a.matrix == drop_empty_lines(M));
        auto s = a.series(10);
        for (int n = 0; n <= 10; ++n) CHECK(s.coeff(n) == count_gridded_perms(M, n));
        // A script for a shuffled copy gives the same univariate function.
        std::vector<int> co(M.columns()), ro(M.rows());
        std::iota(co.begin(), co.end(), 0);
        std::iota(ro.begin(), ro.end(), 0);
        std::shuffle(co.begin(), co.end(), gen::rng());
        std::shuffle(ro.begin(), ro.end(), gen::rng());
        auto b = acyclic_gridded_gf(plan_build(M.permuted(co, ro).transpose()));
        CHECK(a.denominator() == b.denominator());
    }
    CHECK_THROWS_AS(plan_build(GridMatrix::parse("1 1; 1 1")), DomainError);
}

TEST_CASE("unicyclic: merging pendant cells") {
    auto M = GridMatrix::parse("-1 0 1 1 0; 0 1 0 0 0; 0 -1 0 -1 1");
    auto merged = merge_pendant_cells(M, {1, 1}, {2, 2});
    CHECK(merged == GridMatrix::parse("-1 1 1 0; 0 -1 -1 1"));
    CHECK_THROWS_AS(merge_pendant_cells(M, {1, 1}, {3, 2}), DomainError);
    CHECK_THROWS_AS(merge_pendant_cells(M, {0, 2}, {1, 1}), DomainError);
    auto u = unicyclic_gridded_gf(M, {1, 1}, {2, 2});
    auto s = u.series(10);
    for (int n = 0; n <= 10; ++n) CHECK(s.coeff(n) == count_gridded_perms(merged, n));
    for (int n = 0; n <= 6; ++n) CHECK(s.coeff(n) == count_gridded_perms_oracle(merged, n));
}

TEST_CASE("unicyclic: the four-cycle") {
    for (int sign : {1, -1}) {
        GridMatrix M(3, 3);
        M.set(0, 0, 1);
        M.set(1, 1, 1);
        M.set(1, 2, sign);
        M.set(2, 0, sign);
        M.set(2, 2, sign);
        auto u = unicyclic_gridded_gf(M, {0, 0}, {1, 1});
        CHECK(u.merged.nonzero_count() == 4);
        CHECK(u.merged.columns() == 2);
        auto s = u.series(10);
        auto coeffs = s.integer_coeffs();
        for (int n = 0; n <= 10; ++n) {
            CHECK(coeffs[n] >= 0);
            CHECK(coeffs[n] == count_gridded_perms(u.merged, n));
        }
        for (int n = 0; n <= 5; ++n) CHECK(coeffs[n] == brute_gridded(u.merged, n));
    }
}

TEST_CASE("unicyclic: a perfect-square discriminant gives a rational series") {
    UnicyclicGF u;
    u.R = Polynomial{-2, 1};
    u.S = Polynomial{};
    u.T = Polynomial{3};
    u.U = Polynomial{1};
    Polynomial b = Polynomial{1} + Polynomial::x() * (u.R + u.U);
    u.discriminant = b * b;
    CHECK(u.series(12) == ratio_series(Polynomial{1}, b, 12));
}
