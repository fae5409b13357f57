#include <gtest/gtest.h>

#include <map>
#include <random>

#include "tkk/dynkin.hpp"

using namespace tkk;

namespace {

LieAlgebraPtr chev(const std::string& name) { return chevalley_algebra(SimpleType::parse(name)); }

// Dual Coxeter numbers copied from the classification, independent of the library table.
int hand_dual_coxeter(const SimpleType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n + 1;
        case Family::B: return 2 * n - 1;
        case Family::C: return n + 1;
        case Family::D: return 2 * n - 2;
        case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
        case Family::F: return 9;
        case Family::G: return 4;
    }
    return 0;
}

// (L, L + 2 rho) for D_n in epsilon coordinates, where (theta, theta) = 2 is the standard dot product.
Rational casimir_dn(const std::vector<Rational>& lambda) {
    const std::size_t n = lambda.size();
    Rational s;
    for (std::size_t i = 0; i < n; ++i) s += lambda[i] * (lambda[i] + Rational(2 * static_cast<long long>(n - 1 - i)));
    return s;
}

SparseVector root_vector(const LieAlgebraPtr&, const RootSystem& rs, std::vector<int> coeffs) {
    return SparseVector::unit(chevalley_root_index(rs, coeffs));
}

std::vector<int> unit_coeffs(std::size_t rank, std::size_t i, int sign = 1) {
    std::vector<int> c(rank, 0);
    c[i] = sign;
    return c;
}

std::vector<int> negated(std::vector<int> c) {
    for (auto& x : c) x = -x;
    return c;
}

Subalgebra sl2_of_root(const LieAlgebraPtr& l, const RootSystem& rs, const std::vector<int>& coeffs) {
    return generate_subalgebra(l, {root_vector(l, rs, coeffs), root_vector(l, rs, negated(coeffs))});
}

// Centralizer in `l` of the sl2 of the highest root of its first simple component.
Subalgebra theta_centralizer(const LieAlgebraPtr& l) {
    FrameAnalysis fa = decompose(*l);
    const auto& c = fa.components.front();
    return centralizer(l, {fa.frame.roots[c.highest].vector, fa.frame.roots[fa.negative_of[c.highest]].vector});
}

std::map<std::size_t, std::size_t> dims_with_multiplicity(const std::vector<IsotypicComponent>& parts) {
    std::map<std::size_t, std::size_t> out;
    for (const auto& p : parts) out[p.dim] += p.multiplicity;
    return out;
}

}  // namespace

// ---------------------------------------------------------------- representation indices

TEST(RepIndex, VectorOfD6IsTwo) {
    RootSystem rs = build_root_system(SimpleType::parse("D6"));
    EXPECT_EQ(rep_dynkin_index(rs, Weight{{1, 0, 0, 0, 0, 0}}), Rational(2));
    // Oracle: epsilon-coordinate Casimir of e_1 times 12 / 66.
    Rational oracle = casimir_dn({1, 0, 0, 0, 0, 0}) * Rational(12) / Rational(66);
    EXPECT_EQ(oracle, Rational(2));
}

TEST(RepIndex, HalfSpinorOfD6MatchesEpsilonOracle) {
    RootSystem rs = build_root_system(SimpleType::parse("D6"));
    Rational half(1, 2);
    Rational oracle = casimir_dn({half, half, half, half, half, half}) * Rational(32) / Rational(66);
    EXPECT_EQ(rep_dynkin_index(rs, Weight{{0, 0, 0, 0, 0, 1}}), oracle);
    EXPECT_EQ(rep_dynkin_index(rs, Weight{{0, 0, 0, 0, 1, 0}}), oracle);
}

TEST(RepIndex, A1AdjointIsFour) {
    RootSystem rs = build_root_system(SimpleType::parse("A1"));
    EXPECT_EQ(rep_dynkin_index(rs, Weight{{2}}), Rational(4));
    EXPECT_EQ(rep_dynkin_index(rs, Weight{{1}}), Rational(1));
    EXPECT_EQ(rep_dynkin_index(rs, Weight{{0}}), Rational(0));
}

TEST(RepIndex, E7MinusculeIsTwelveAndMatchesD6Branching) {
    RootSystem e7 = build_root_system(SimpleType::parse("E7"));
    Rational l56 = rep_dynkin_index(e7, Weight{{0, 0, 0, 0, 0, 0, 1}});
    EXPECT_EQ(l56, Rational(12));
    RootSystem d6 = build_root_system(SimpleType::parse("D6"));
    Rational vec = rep_dynkin_index(d6, Weight{{1, 0, 0, 0, 0, 0}});
    Rational spin = rep_dynkin_index(d6, Weight{{0, 0, 0, 0, 0, 1}});
    EXPECT_EQ(vec + vec + spin, l56);
}

TEST(RepIndex, AdjointIsTwiceDualCoxeterForAllTypes) {
    for (const auto& t : all_simple_types()) {
        RootSystem rs = build_root_system(t);
        EXPECT_EQ(rep_dynkin_index(rs, rs.adjoint_weight()), Rational(2 * hand_dual_coxeter(t))) << t.name();
    }
}

TEST(RepIndex, RejectsNonDominantWeights) {
    RootSystem rs = build_root_system(SimpleType::parse("A2"));
    EXPECT_THROW(rep_dynkin_index(rs, Weight{{1, -1}}), std::invalid_argument);
    EXPECT_THROW(rep_dynkin_index(rs, Weight{{1}}), std::invalid_argument);
}

TEST(RepIndex, AdditiveUnderTensorWithTrivialAndScalesWithDimension) {
    // Property: for random dominant weights of A2, index * dim g = Casimir * dim V, all positive.
    RootSystem rs = build_root_system(SimpleType::parse("A2"));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 4);
    for (int it = 0; it < 20; ++it) {
        Weight w{{d(rng), d(rng)}};
        Rational idx = rep_dynkin_index(rs, w);
        Rational dim(weyl_dimension(rs, w));
        EXPECT_EQ(idx * Rational(8), casimir_pairing(rs, w) * dim);
        // Dual module has the same index.
        EXPECT_EQ(idx, rep_dynkin_index(rs, Weight{{w.coords[1], w.coords[0]}}));
    }
}

// ---------------------------------------------------------------- normalized forms

TEST(NormalizedForm, LongCorootHasSquareTwoAndShortCorootsScale) {
    for (const char* name : {"A1", "A2", "C2", "G2", "B3", "C3", "D4", "F4"}) {
        SimpleType t = SimpleType::parse(name);
        auto l = chevalley_algebra(t);
        RootSystem rs = build_root_system(t);
        FrameAnalysis fa = decompose(*l);
        NormalizedForm nf = normalized_form(*l, fa, 0);
        EXPECT_EQ(nf.scale, Rational(1, 2 * hand_dual_coxeter(t))) << name;
        const auto& c = fa.components[0];
        EXPECT_EQ(nf(*l, c.long_coroot, c.long_coroot), Rational(2)) << name;
        // Simple coroot i: (h_i, h_i) = 4 / (alpha_i, alpha_i) in the normalization (theta, theta) = 2.
        for (std::size_t i = 0; i < rs.rank; ++i) {
            SparseVector h = SparseVector::unit(rs.num_positive() + i);
            Rational a2 = rs.normalized(rs.simple_roots[i], rs.simple_roots[i]);
            EXPECT_EQ(nf(*l, h, h), Rational(4) / a2) << name << " node " << i + 1;
        }
    }
}

TEST(NormalizedForm, GramIsInvariant) {
    auto l = chev("G2");
    FrameAnalysis fa = decompose(*l);
    Matrix g = normalized_gram(*l, fa);
    const std::size_t n = l->dim();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-2, 2);
    auto rnd = [&] {
        Vector v(n);
        for (auto& x : v) x = Rational(d(rng));
        return SparseVector::from_dense(v);
    };
    auto form = [&](const SparseVector& a, const SparseVector& b) {
        Rational s;
        for (const auto& ea : a.entries())
            for (const auto& eb : b.entries()) s += ea.value * eb.value * g(ea.index, eb.index);
        return s;
    };
    for (int it = 0; it < 10; ++it) {
        SparseVector x = rnd(), y = rnd(), z = rnd();
        EXPECT_EQ(form(l->bracket(x, y), z) + form(y, l->bracket(x, z)), Rational(0));
    }
}

// ---------------------------------------------------------------- embedding indices

TEST(EmbeddingIndex, IdentityIsOne) {
    for (const char* name : {"A1", "G2", "C3", "D4"}) {
        auto l = chev(name);
        EXPECT_EQ(embedding_index(identity_subalgebra(l)), Rational(1)) << name;
    }
}

TEST(EmbeddingIndex, ThetaSl2InE7IsOne) {
    auto l = chev("E7");
    RootSystem rs = build_root_system(SimpleType::parse("E7"));
    Subalgebra s = sl2_of_root(l, rs, rs.highest_coeffs);
    ASSERT_EQ(s.dim(), 3u);
    MultiIndex mi = multi_index(s);
    ASSERT_EQ(mi.matrix.size(), 1u);
    EXPECT_EQ(mi.matrix[0][0], Rational(1));
    for (const auto& r : mi.evaluations[0][0]) EXPECT_EQ(r, Rational(1));
}

TEST(EmbeddingIndex, ShortRootSl2IsLengthRatio) {
    // Oracle: the index of a root sl2 is (theta, theta) / (alpha, alpha).
    struct Case {
        const char* type;
        std::size_t node;
        Rational expected;
    };
    for (const auto& c : {Case{"G2", 0, Rational(3)}, Case{"B3", 2, Rational(2)}, Case{"C3", 0, Rational(2)},
                          Case{"F4", 3, Rational(2)}, Case{"C3", 2, Rational(1)}}) {
        SimpleType t = SimpleType::parse(c.type);
        auto l = chevalley_algebra(t);
        RootSystem rs = build_root_system(t);
        Subalgebra s = sl2_of_root(l, rs, unit_coeffs(rs.rank, c.node));
        EXPECT_EQ(embedding_index(s), c.expected) << c.type << " node " << c.node + 1;
    }
}

TEST(EmbeddingIndex, PrincipalSl2InA2IsFour) {
    // Oracle: the natural module of A2 restricts to the 3-dim irreducible of A1, so j = 4 / 1.
    auto l = chev("A2");
    SparseVector e = SparseVector::unit(0) + SparseVector::unit(1);
    auto t = sl2_from_nilpotent(*l, e);
    ASSERT_TRUE(t.has_value());
    Subalgebra s = generate_subalgebra(l, {t->e, t->f});
    ASSERT_EQ(s.dim(), 3u);
    RootSystem a1 = build_root_system(SimpleType::parse("A1"));
    RootSystem a2 = build_root_system(SimpleType::parse("A2"));
    Rational oracle = rep_dynkin_index(a1, Weight{{2}}) / rep_dynkin_index(a2, Weight{{1, 0}});
    EXPECT_EQ(embedding_index(s), oracle);
}

TEST(EmbeddingIndex, RejectsNonSimpleSides) {
    auto l = chev("D4");
    RootSystem rs = build_root_system(SimpleType::parse("D4"));
    Subalgebra two = generate_subalgebra(
        l, {root_vector(l, rs, unit_coeffs(4, 0)), root_vector(l, rs, unit_coeffs(4, 0, -1)),
            root_vector(l, rs, unit_coeffs(4, 2)), root_vector(l, rs, unit_coeffs(4, 2, -1))});
    ASSERT_EQ(two.dim(), 6u);
    EXPECT_THROW(embedding_index(two), std::invalid_argument);
    MultiIndex mi = multi_index(two);
    EXPECT_EQ(mi.matrix.size(), 2u);
    EXPECT_EQ(mi.matrix[0][0], Rational(1));
    EXPECT_EQ(mi.matrix[1][0], Rational(1));
}

TEST(EmbeddingIndex, DiagonalSl2InTwoOrthogonalRootsIsTwo) {
    auto l = chev("D4");
    RootSystem rs = build_root_system(SimpleType::parse("D4"));
    SparseVector e = root_vector(l, rs, unit_coeffs(4, 0)) + root_vector(l, rs, unit_coeffs(4, 2));
    SparseVector f = root_vector(l, rs, unit_coeffs(4, 0, -1)) + root_vector(l, rs, unit_coeffs(4, 2, -1));
    Subalgebra s = generate_subalgebra(l, {e, f});
    ASSERT_EQ(s.dim(), 3u);
    EXPECT_EQ(embedding_index(s), Rational(2));
}

// ---------------------------------------------------------------- multi-indices

TEST(MultiIndex, CentralizerChainInD6IsOneOne) {
    auto d6 = chev("D6");
    Subalgebra c = theta_centralizer(d6);
    ASSERT_EQ(c.dim(), 31u);
    MultiIndex mi = multi_index(c);
    EXPECT_EQ(mi.str(), "D4+A1 -> D6 [[1], [1]]");
}

TEST(MultiIndex, IdentityOnReductiveIsIdentityMatrix) {
    auto e7 = chev("E7");
    RootSystem rs = build_root_system(SimpleType::parse("E7"));
    Subalgebra d6a1 = subsystem_subalgebra(e7, rs, {0, 2, 3, 4, 5, 6, 7});
    ASSERT_EQ(d6a1.dim(), 69u);
    MultiIndex mi = multi_index(identity_subalgebra(d6a1.induced));
    EXPECT_EQ(mi.str(), "D6+A1 -> D6+A1 [[1, 0], [0, 1]]");
    MultiIndex into = multi_index(d6a1);
    EXPECT_EQ(into.str(), "D6+A1 -> E7 [[1], [1]]");
}

TEST(MultiIndex, CompositionIsMatrixProduct) {
    auto e7 = chev("E7");
    Subalgebra d6 = theta_centralizer(e7);
    ASSERT_EQ(d6.dim(), 66u);
    Subalgebra d4a1 = theta_centralizer(d6.induced);
    ASSERT_EQ(d4a1.dim(), 31u);
    MultiIndex inner = multi_index(d4a1);
    MultiIndex outer = multi_index(d6);
    MultiIndex whole = multi_index(compose(d6, d4a1));
    EXPECT_EQ(whole.matrix, multiply(inner.matrix, outer.matrix));
    EXPECT_EQ(whole.str(), "D4+A1 -> E7 [[1], [1]]");

    // A diagonal sl2 of D6 gives a non-trivial factor on the same chain.
    FrameAnalysis fa = decompose(*d6.induced);
    const auto& comp = fa.components[0];
    std::vector<std::size_t> ortho;  // two orthogonal long simple roots of D6: nodes 1 and 3
    ortho.push_back(comp.simple[0]);
    ortho.push_back(comp.simple[2]);
    SparseVector e, f;
    for (auto k : ortho) {
        e = e + fa.frame.roots[k].vector;
        f = f + fa.frame.roots[fa.negative_of[k]].vector;
    }
    Subalgebra diag = generate_subalgebra(d6.induced, {e, f});
    ASSERT_EQ(diag.dim(), 3u);
    MultiIndex a = multi_index(diag);
    EXPECT_EQ(a.matrix[0][0], Rational(2));
    EXPECT_EQ(multi_index(compose(d6, diag)).matrix, multiply(a.matrix, outer.matrix));
}

TEST(MultiIndex, EntriesAreNonnegative) {
    auto e7 = chev("E7");
    RootSystem rs = build_root_system(SimpleType::parse("E7"));
    for (const auto& nodes : std::vector<std::vector<std::size_t>>{{0, 1, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 5, 6, 7}}) {
        MultiIndex mi = multi_index(subsystem_subalgebra(e7, rs, nodes));
        for (const auto& row : mi.matrix)
            for (const auto& x : row) EXPECT_GE(x, Rational(0));
    }
}

// ---------------------------------------------------------------- modules

TEST(Module, TrivialModuleHasZeroWeightOnce) {
    auto l = chev("A1");
    ModuleAction m{l, 1, std::vector<SparseMatrix>(3, SparseMatrix(1, std::vector<SparseVector>(1)))};
    EXPECT_FALSE(homomorphism_defect(m).has_value());
    auto w = module_weights(m, *l->frame());
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w.begin()->first, std::vector<Rational>{Rational(0)});
    EXPECT_EQ(w.begin()->second, 1u);
    auto parts = decompose_isotypic(m);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].highest, std::vector<long long>{0});
}

TEST(Module, A1AdjointWeights) {
    auto l = chev("A1");
    ModuleAction m = adjoint_module(l);
    auto w = module_weights(m, *l->frame());
    std::map<std::vector<Rational>, std::size_t> expected{{{Rational(-2)}, 1}, {{Rational(0)}, 1}, {{Rational(2)}, 1}};
    EXPECT_EQ(w, expected);
    auto parts = decompose_isotypic(m);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].highest, std::vector<long long>{2});
    EXPECT_EQ(parts[0].multiplicity, 1u);
}

TEST(Module, AdjointWeightsAreRootsInDynkinLabels) {
    // Oracle: the labels of a root sum c_i alpha_i are sum c_i (row i of the Cartan matrix).
    for (const char* name : {"A2", "C2", "G2", "B3", "D4", "F4"}) {
        SimpleType t = SimpleType::parse(name);
        auto l = chevalley_algebra(t);
        RootSystem rs = build_root_system(t);
        FrameAnalysis fa = decompose(*l);
        std::map<std::vector<long long>, std::size_t> oracle;
        oracle[std::vector<long long>(rs.rank, 0)] = rs.rank;
        for (const auto& c : rs.positive_coeffs) {
            std::vector<long long> lab(rs.rank, 0), neg(rs.rank, 0);
            for (std::size_t j = 0; j < rs.rank; ++j) {
                for (std::size_t i = 0; i < rs.rank; ++i) lab[j] += c[i] * rs.cartan[i][j];
                neg[j] = -lab[j];
            }
            oracle[lab] += 1;
            oracle[neg] += 1;
        }
        EXPECT_EQ(module_weight_labels(adjoint_module(l), fa), oracle) << name;
        auto parts = decompose_isotypic(adjoint_module(l), fa);
        ASSERT_EQ(parts.size(), 1u) << name;
        EXPECT_EQ(parts[0].highest, rs.adjoint_weight().coords) << name;
    }
}

TEST(Module, HomomorphismDefectDetected) {
    auto l = chev("A1");
    ModuleAction m = adjoint_module(l);
    EXPECT_FALSE(homomorphism_defect(m).has_value());
    // Doubling e keeps [h, e] = 2e consistent but breaks [e, f] = h.
    m.action[0] = m.action[0].scaled(2);
    auto d = homomorphism_defect(m);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(*d, std::make_pair(std::size_t{0}, std::size_t{2}));
}

TEST(Module, D6AdjointBranchesToCentralizer) {
    // so(12) restricted to so(8) + sl2 (centralizer of a long-root sl2): 28 + 3 + 3 trivial + 2 copies of 8 x 2.
    auto d6 = chev("D6");
    Subalgebra c = theta_centralizer(d6);
    ModuleAction m = subspace_module(c, Subspace::full(d6->dim()));
    EXPECT_FALSE(homomorphism_defect(restrict_module(adjoint_module(c.induced), identity_subalgebra(c.induced))).has_value());
    auto parts = decompose_isotypic(m);
    std::map<std::size_t, std::size_t> expected{{28, 1}, {16, 2}, {3, 1}, {1, 3}};
    EXPECT_EQ(dims_with_multiplicity(parts), expected);
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim * p.multiplicity;
    EXPECT_EQ(total, 66u);
}

TEST(Module, IsotypicSubspaceIsInvariantOfRightDimension) {
    auto d6 = chev("D6");
    Subalgebra c = theta_centralizer(d6);
    ModuleAction m = subspace_module(c, Subspace::full(d6->dim()));
    FrameAnalysis fa = decompose(*c.induced);
    for (const auto& p : decompose_isotypic(m, fa)) {
        Subspace s = isotypic_subspace(m, fa, p.highest);
        EXPECT_EQ(s.dim(), p.dim * p.multiplicity);
        ModuleAction sub = submodule(m, s);
        auto again = decompose_isotypic(sub, fa);
        ASSERT_EQ(again.size(), 1u);
        EXPECT_EQ(again[0].highest, p.highest);
    }
}

TEST(Module, SubmoduleRejectsNonInvariantSpace) {
    auto l = chev("A1");
    ModuleAction m = adjoint_module(l);
    EXPECT_THROW(submodule(m, Subspace::span(3, std::vector<SparseVector>{SparseVector::unit(0)})), std::invalid_argument);
}

TEST(Module, WeightMultisetMatchesFreudenthal) {
    // Oracle: Freudenthal multiplicities of the adjoint highest weight.
    auto g2 = chev("G2");
    RootSystem rs = build_root_system(SimpleType::parse("G2"));
    auto ref = weight_multiset(rs, rs.adjoint_weight());
    auto got = module_weight_labels(adjoint_module(g2), decompose(*g2));
    ASSERT_EQ(got.size(), ref.size());
    for (const auto& [w, m] : ref) EXPECT_EQ(got[w], static_cast<std::size_t>(m));
}
