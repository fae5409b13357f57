#include <gtest/gtest.h>

#include <random>

#include "tkk/linalg.hpp"

using namespace tkk;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range, bool fractions = false) {
    std::uniform_int_distribution<int> d(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = fractions ? Rational(d(rng), den(rng)) : Rational(d(rng));
    return m;
}

Matrix low_rank_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
    return random_matrix(rng, r, k, 3) * random_matrix(rng, k, c, 3);
}

Matrix poly_eval(const std::vector<Rational>& p, const Matrix& m) {
    Matrix acc(m.rows(), m.cols());
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * m + Matrix::identity(m.rows()).scaled(p[k]);
    return acc;
}

}  // namespace

TEST(Rational, CanonicalFormAndArithmetic) {
    EXPECT_EQ(Rational(2, 4).str(), "1/2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(0, -5).str(), "0/1");
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
}

TEST(Rational, MatchesGmpOracleAcrossOverflowBoundary) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> big(-(1LL << 62), 1LL << 62);
    std::uniform_int_distribution<long long> small(-50, 50);
    for (int it = 0; it < 20000; ++it) {
        bool use_big = it % 3 == 0;
        long long an = use_big ? big(rng) : small(rng), bn = use_big ? big(rng) : small(rng);
        long long ad = use_big ? std::llabs(big(rng)) + 1 : std::llabs(small(rng)) + 1;
        long long bd = std::llabs(small(rng)) + 1;
        Rational a(an, ad), b(bn, bd);
        mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
        EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
        EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
        if (!b.is_zero()) EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
        // Products of products leave the inline range and must come back when reduced.
        Rational p = a * a * a;
        if (!a.is_zero()) EXPECT_EQ((p / a / a), a);
        EXPECT_EQ(Rational::compare(a, b), cmp(qa, qb));
    }
}

TEST(Linalg, RrefRankKernelExamples) {
    auto id = rref_rank_kernel(Matrix::identity(3));
    EXPECT_EQ(id.rank, 3u);
    EXPECT_TRUE(id.kernel.is_zero());
    EXPECT_TRUE(id.rowspace.is_full());

    auto r = rref_rank_kernel(Matrix{{1, 1}});
    EXPECT_EQ(r.rank, 1u);
    EXPECT_EQ(r.kernel, Subspace::span(2, std::vector<Vector>{{Rational(1), Rational(-1)}}));
    EXPECT_EQ(r.rowspace, Subspace::span(2, std::vector<Vector>{{Rational(1), Rational(1)}}));
}

TEST(Linalg, SolveLinearExamples) {
    Vector b{Rational(3), Rational(-2), Rational(1, 2)};
    EXPECT_EQ(solve_linear(Matrix::identity(3), b), b);
    auto x = solve_linear(Matrix{{1, 1}}, Vector{Rational(2)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (Vector{Rational(2), Rational(0)}));
    EXPECT_FALSE(solve_linear(Matrix{{1}, {1}}, Vector{Rational(1), Rational(2)}).has_value());
}

TEST(Linalg, CharPolyExamples) {
    EXPECT_EQ(char_poly(Matrix::identity(2)), (std::vector<Rational>{1, -2, 1}));
    Matrix j(3, 3);
    j(0, 1) = 1;
    j(1, 2) = 1;
    EXPECT_EQ(char_poly(j), (std::vector<Rational>{0, 0, 0, 1}));
}

TEST(Linalg, MeetJoinExamples) {
    Subspace u = Subspace::span(4, std::vector<Vector>{{1, 2, 0, 0}, {0, 0, 1, 1}});
    auto same = subspace_meet_join(u, u);
    EXPECT_EQ(same.intersection, u);
    EXPECT_EQ(same.sum, u);
    Subspace a = Subspace::span(3, std::vector<Vector>{{1, 0, 0}});
    Subspace b = Subspace::span(3, std::vector<Vector>{{0, 1, 0}, {0, 0, 1}});
    auto mj = subspace_meet_join(a, b);
    EXPECT_TRUE(mj.intersection.is_zero());
    EXPECT_TRUE(mj.sum.is_full());
    EXPECT_THROW(subspace_meet_join(a, Subspace::zero(2)), std::invalid_argument);
}

TEST(Linalg, ExpNilpotentExamples) {
    EXPECT_EQ(exp_nilpotent(Matrix(3, 3)), Matrix::identity(3));
    Matrix n{{0, 1}, {0, 0}};
    EXPECT_EQ(exp_nilpotent(n), Matrix::identity(2) + n);
    EXPECT_THROW(exp_nilpotent(Matrix::identity(2)), std::domain_error);
}

TEST(LinalgProperties, RankOfTransposeAndProducts) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7, k = 1 + rng() % 5;
        Matrix a = (it % 2) ? low_rank_matrix(rng, r, c, k) : random_matrix(rng, r, c, 3, true);
        Matrix b = low_rank_matrix(rng, c, 1 + rng() % 6, 1 + rng() % 4);
        auto ra = rref_rank_kernel(a);
        EXPECT_EQ(ra.rank, rank(a.transpose()));
        EXPECT_EQ(ra.rank + ra.kernel.dim(), c);
        EXPECT_EQ(ra.rowspace.dim(), ra.rank);
        for (const auto& v : ra.kernel.basis()) {
            Vector img = a * v.to_dense(c);
            for (const auto& x : img) EXPECT_TRUE(x.is_zero());
        }
        EXPECT_LE(rank(a * b), std::min(ra.rank, rank(b)));
        // The sparse path agrees with the dense one.
        EXPECT_EQ(kernel(a.to_sparse()), ra.kernel);
        EXPECT_EQ(image(a.transpose().to_sparse()), ra.rowspace);
    }
}

TEST(LinalgProperties, SolveReturnsExactSolutions) {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix a = low_rank_matrix(rng, r, c, 1 + rng() % 4);
        Vector x0 = random_matrix(rng, c, 1, 4, true).column(0);
        Vector b = a * x0;
        auto x = solve_linear(a, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(a * *x, b);
        // Perturbing b outside the column space must make the system inconsistent.
        auto rk = rref_rank_kernel(a.transpose());
        if (rk.kernel.dim() > 0) {
            Vector bad = b;
            Vector w = rk.kernel.basis(0).to_dense(r);
            for (std::size_t i = 0; i < r; ++i) bad[i] += w[i];
            EXPECT_FALSE(solve_linear(a, bad).has_value());
        }
    }
}

TEST(LinalgProperties, CharPolySimilarityInvariantAndCayleyHamilton) {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 1 + rng() % 8;
        Matrix m = random_matrix(rng, n, n, 3, it % 2 == 0);
        Matrix p = random_matrix(rng, n, n, 2);
        for (std::size_t i = 0; i < n; ++i) p(i, i) += Rational(7);
        if (rank(p) < n) continue;
        auto cp = char_poly(m);
        EXPECT_EQ(cp.size(), n + 1);
        EXPECT_TRUE(cp.back().is_one());
        EXPECT_EQ(char_poly(p * m * inverse(p)), cp);
        EXPECT_TRUE(poly_eval(cp, m).is_zero());
    }
}

TEST(LinalgProperties, ExpOfNilpotentIsInvertible) {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 1 + rng() % 7;
        Matrix u = random_matrix(rng, n, n, 3, true);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) u(i, j) = 0;
        Matrix p = random_matrix(rng, n, n, 2);
        for (std::size_t i = 0; i < n; ++i) p(i, i) += Rational(9);
        if (rank(p) < n) continue;
        Matrix nil = p * u * inverse(p);
        EXPECT_EQ(exp_nilpotent(nil) * exp_nilpotent(-nil), Matrix::identity(n));
        EXPECT_EQ(Matrix::from_sparse(exp_nilpotent(nil.to_sparse())), exp_nilpotent(nil));
    }
}

TEST(LinalgProperties, MeetJoinDimensionFormula) {
    std::mt19937_64 rng(15);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 2 + rng() % 7;
        Matrix a = low_rank_matrix(rng, 1 + rng() % n, n, 1 + rng() % n);
        Matrix b = low_rank_matrix(rng, 1 + rng() % n, n, 1 + rng() % n);
        Subspace u = rref_rank_kernel(a).rowspace, v = rref_rank_kernel(b).rowspace;
        auto mj = subspace_meet_join(u, v);
        EXPECT_EQ(mj.intersection.dim() + mj.sum.dim(), u.dim() + v.dim());
        EXPECT_TRUE(u.contains(mj.intersection));
        EXPECT_TRUE(v.contains(mj.intersection));
        EXPECT_TRUE(mj.sum.contains(u));
        EXPECT_TRUE(mj.sum.contains(v));
    }
}

TEST(Subspace, CanonicalEqualityAndCoordinates) {
    Subspace a = Subspace::span(3, std::vector<Vector>{{1, 1, 0}, {0, 1, 1}});
    Subspace b = Subspace::span(3, std::vector<Vector>{{1, 2, 1}, {1, 0, -1}});
    EXPECT_EQ(a, b);
    SparseVector v = SparseVector::from_dense({2, 3, 1});
    auto c = a.coordinates(v);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(a.element(*c), v);
    EXPECT_FALSE(a.coordinates(SparseVector::unit(0)).has_value());
}
