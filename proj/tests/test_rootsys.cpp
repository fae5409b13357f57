#include <gtest/gtest.h>

#include <numeric>

#include "tkk/liealg.hpp"
#include "tkk/rootsys.hpp"

using namespace tkk;

namespace {

// Independent Cartan matrices in Bourbaki numbering, entry [i][j] = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> reference_cartan(const std::string& name) {
    if (name == "G2") return {{2, -1}, {-3, 2}};
    if (name == "F4") return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    if (name == "B3") return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
    if (name == "C3") return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
    if (name == "D4") return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    return {};
}

// Length of the alpha-string through beta below beta, counted on coefficient vectors.
int string_below(const RootSystem& rs, const std::vector<int>& beta, const std::vector<int>& alpha) {
    auto is_root = [&](std::vector<int> c) {
        bool neg = false;
        for (int x : c) neg |= x < 0;
        if (neg)
            for (auto& x : c) x = -x;
        return rs.find_positive(c) >= 0;
    };
    int p = 0;
    std::vector<int> cur = beta;
    while (true) {
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= alpha[i];
        if (!is_root(cur)) return p;
        ++p;
    }
}

}  // namespace

TEST(RootSystem, CountsMatchClassificationTable) {
    for (const auto& t : all_simple_types()) {
        RootSystem rs = build_root_system(t);
        EXPECT_EQ(2 * rs.num_positive(), t.root_count()) << t.name();
        EXPECT_EQ(rs.algebra_dim(), t.algebra_dim()) << t.name();
        EXPECT_EQ(rs.dual_coxeter, t.dual_coxeter_table()) << t.name();
        EXPECT_EQ(rs.normalized(rs.highest_root, rs.highest_root), Rational(2)) << t.name();
    }
    EXPECT_EQ(build_root_system(SimpleType::parse("E7")).num_positive(), 63u);
    EXPECT_EQ(SimpleType::parse("E8").algebra_dim(), 248u);
}

TEST(RootSystem, RejectsInvalidTypes) {
    EXPECT_THROW(SimpleType::parse("E9"), std::invalid_argument);
    EXPECT_THROW(SimpleType::parse("D3"), std::invalid_argument);
    EXPECT_THROW(SimpleType::parse("F5"), std::invalid_argument);
    EXPECT_THROW(SimpleType::parse("A0"), std::invalid_argument);
    EXPECT_THROW(SimpleType::parse("Q2"), std::invalid_argument);
}

TEST(RootSystem, CartanMatricesMatchReference) {
    for (const std::string name : {"G2", "F4", "B3", "C3", "D4"}) {
        RootSystem rs = build_root_system(SimpleType::parse(name));
        EXPECT_EQ(rs.cartan, reference_cartan(name)) << name;
    }
}

TEST(RootSystem, G2RootLengths) {
    RootSystem rs = build_root_system(SimpleType::parse("G2"));
    int longs = 0, shorts = 0;
    for (std::size_t k = 0; k < rs.num_positive(); ++k) (rs.is_long(k) ? longs : shorts) += 2;
    EXPECT_EQ(longs, 6);
    EXPECT_EQ(shorts, 6);
}

TEST(RootSystem, PositiveOrderIsByHeightWithSimpleRootsFirst) {
    for (const auto& t : all_simple_types()) {
        RootSystem rs = build_root_system(t);
        for (std::size_t i = 0; i < rs.rank; ++i) {
            std::vector<int> e(rs.rank, 0);
            e[i] = 1;
            EXPECT_EQ(rs.positive_coeffs[i], e);
        }
        auto height = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
        for (std::size_t k = 1; k < rs.num_positive(); ++k)
            EXPECT_LE(height(rs.positive_coeffs[k - 1]), height(rs.positive_coeffs[k]));
        EXPECT_EQ(rs.positive_coeffs.back(), rs.highest_coeffs);
    }
}

TEST(WeylDimension, KnownModules) {
    RootSystem e7 = build_root_system(SimpleType::parse("E7"));
    EXPECT_EQ(weyl_dimension(e7, Weight{{0, 0, 0, 0, 0, 0, 1}}), 56);
    RootSystem d6 = build_root_system(SimpleType::parse("D6"));
    EXPECT_EQ(weyl_dimension(d6, Weight{{0, 0, 0, 0, 0, 1}}), 32);
    EXPECT_EQ(weyl_dimension(d6, Weight{{0, 0, 0, 0, 1, 0}}), 32);
    EXPECT_EQ(weyl_dimension(d6, Weight{{1, 0, 0, 0, 0, 0}}), 12);
    RootSystem e8 = build_root_system(SimpleType::parse("E8"));
    EXPECT_EQ(weyl_dimension(e8, e8.adjoint_weight()), 248);
    RootSystem g2 = build_root_system(SimpleType::parse("G2"));
    EXPECT_EQ(weyl_dimension(g2, Weight{{1, 0}}), 7);
    EXPECT_THROW(weyl_dimension(g2, Weight{{-1, 0}}), std::invalid_argument);
}

TEST(WeylDimension, AdjointDimensionAndCasimirForAllTypes) {
    for (const auto& t : all_simple_types()) {
        RootSystem rs = build_root_system(t);
        EXPECT_EQ(weyl_dimension(rs, rs.adjoint_weight()), t.algebra_dim()) << t.name();
        EXPECT_EQ(casimir_pairing(rs, rs.adjoint_weight()), Rational(2 * t.dual_coxeter_table())) << t.name();
    }
}

TEST(Casimir, KnownValues) {
    EXPECT_EQ(casimir_pairing(build_root_system(SimpleType::parse("A1")), Weight{{2}}), Rational(4));
    EXPECT_EQ(casimir_pairing(build_root_system(SimpleType::parse("D6")), Weight{{1, 0, 0, 0, 0, 0}}), Rational(11));
}

TEST(WeightMultiset, SumsToWeylDimensionOnFundamentals) {
    for (const auto& t : all_simple_types()) {
        if (t.rank > 5) continue;
        RootSystem rs = build_root_system(t);
        for (std::size_t i = 0; i < rs.rank; ++i) {
            Weight w{std::vector<long long>(rs.rank, 0)};
            w.coords[i] = 1;
            long long total = 0;
            for (const auto& [mu, m] : weight_multiset(rs, w)) total += m;
            EXPECT_EQ(mpz_class(static_cast<long>(total)), weyl_dimension(rs, w)) << t.name() << " omega" << i + 1;
        }
    }
}

TEST(WeightMultiset, AdjointHasRankZeroWeights) {
    for (const std::string name : {"A3", "B3", "C3", "G2", "F4", "D5"}) {
        RootSystem rs = build_root_system(SimpleType::parse(name));
        auto mult = weight_multiset(rs, rs.adjoint_weight());
        EXPECT_EQ(mult[std::vector<long long>(rs.rank, 0)], static_cast<long long>(rs.rank)) << name;
        std::size_t long_roots = 0;
        for (std::size_t k = 0; k < rs.num_positive(); ++k) long_roots += rs.is_long(k) ? 2 : 0;
        EXPECT_EQ(weyl_orbit(rs, rs.adjoint_weight()).size(), long_roots) << name;
    }
}

TEST(ChevalleyConstants, MagnitudeIsStringLengthPlusOne) {
    for (const auto& t : all_simple_types()) {
        if (t.rank > 6) continue;
        RootSystem rs = build_root_system(t);
        ChevalleyConstants cc(rs);
        const std::size_t ids = 2 * cc.num_positive();
        for (std::size_t a = 0; a < ids; ++a)
            for (std::size_t b = 0; b < ids; ++b) {
                auto ca = cc.coeffs(a), cb = cc.coeffs(b), s = ca;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += cb[i];
                long long n = cc.N(a, b);
                if (cc.find(s) < 0) {
                    EXPECT_EQ(n, 0);
                    continue;
                }
                EXPECT_EQ(std::llabs(n), string_below(rs, cb, ca) + 1) << t.name();
                EXPECT_EQ(cc.N(b, a), -n);
            }
    }
}

TEST(Chevalley, JacobiHoldsForAllTypes) {
    for (const auto& t : all_simple_types()) {
        auto l = chevalley_algebra(t);
        EXPECT_EQ(l->dim(), t.algebra_dim());
        std::vector<std::size_t> w = t.rank <= 6 && t.family != Family::E ? jacobi_check(*l) : jacobi_check_sampled(*l, 20000, 7);
        EXPECT_TRUE(w.empty()) << t.name();
    }
}

TEST(Chevalley, ExceptionalJacobiExhaustive) {
    for (const std::string name : {"G2", "F4", "E6", "E7", "E8"}) {
        auto l = chevalley_algebra(SimpleType::parse(name));
        EXPECT_TRUE(jacobi_check(*l).empty()) << name;
    }
}

TEST(Chevalley, IntegralStructureConstants) {
    auto l = chevalley_algebra(SimpleType::parse("F4"));
    for (std::size_t i = 0; i < l->dim(); ++i)
        for (std::size_t j = 0; j < l->dim(); ++j)
            for (const auto& e : l->bracket_basis(i, j).entries()) ASSERT_TRUE(e.value.is_integer());
}
