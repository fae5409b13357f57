#include <gtest/gtest.h>

#include <random>

#include "tkk/constructions.hpp"

using namespace tkk;

namespace {

const E8Setting& setting() {
    static const E8Setting s = build_e8_setting();
    return s;
}

const FixingD4& fixing() {
    static const FixingD4 k = fixing_d4(setting());
    return k;
}

/// Chevalley involution e_i -> -f_i, f_i -> -e_i on the simple root vectors of a frame.
SparseMatrix chevalley_involution(const LieAlgebra& l, const FrameAnalysis& fa) {
    std::vector<SparseVector> gens, images;
    for (const auto& comp : fa.components)
        for (auto r : comp.simple) {
            Sl2Triple t = root_triple(l, fa, r);
            gens.push_back(t.e);
            images.push_back(-t.f);
            gens.push_back(t.f);
            images.push_back(-t.e);
        }
    return extend_homomorphism(l, gens, images);
}

}  // namespace

TEST(RootTriple, EveryRootOfG2AndF4GivesAnSl2Triple) {
    for (const char* name : {"G2", "F4"}) {
        auto l = chevalley_algebra(SimpleType::parse(name));
        FrameAnalysis fa = decompose(*l);
        for (auto r : fa.positive) EXPECT_TRUE(is_sl2_triple(*l, root_triple(*l, fa, r))) << name << " root " << r;
    }
}

TEST(ComponentRoot, RejectsUnknownCoefficients) {
    auto l = chevalley_algebra(SimpleType::parse("A2"));
    FrameAnalysis fa = decompose(*l);
    EXPECT_NO_THROW(component_root(fa, 0, {1, 1}));
    EXPECT_THROW(component_root(fa, 0, {2, 1}), std::invalid_argument);
}

TEST(FrameSubsystem, ExtendedDiagramOfE7WithoutNodeOneIsD6PlusA1) {
    auto l = chevalley_algebra(SimpleType::parse("E7"));
    FrameAnalysis fa = decompose(*l);
    Subalgebra s = frame_subsystem(l, fa, 0, {0, 2, 3, 4, 5, 6, 7});
    EXPECT_EQ(s.dim(), 66u + 3u);
    EXPECT_EQ(identify_type(*s.induced).str(), "D6+A1");
}

TEST(ExtendHomomorphism, IdentityImagesGiveIdentity) {
    auto l = chevalley_algebra(SimpleType::parse("B2"));
    FrameAnalysis fa = decompose(*l);
    std::vector<SparseVector> gens;
    for (auto r : fa.components[0].simple) {
        gens.push_back(fa.frame.roots[r].vector);
        gens.push_back(fa.frame.roots[fa.negative_of[r]].vector);
    }
    SparseMatrix s = extend_homomorphism(*l, gens, gens);
    for (std::size_t j = 0; j < l->dim(); ++j) EXPECT_EQ(s.column(j), SparseVector::unit(j));
}

TEST(ExtendHomomorphism, RejectsImagesThatBreakBrackets) {
    auto l = chevalley_algebra(SimpleType::parse("A1"));
    FrameAnalysis fa = decompose(*l);
    Sl2Triple t = root_triple(*l, fa, fa.positive[0]);
    EXPECT_THROW(extend_homomorphism(*l, {t.e, t.f}, {t.e, t.f.scaled(Rational(2))}), std::invalid_argument);
}

TEST(FixedSubalgebra, ChevalleyInvolutionFixesOnePositiveRootPerDimension) {
    // The fixed points of the Chevalley involution are spanned by e_a - f_a over positive roots.
    for (const char* name : {"A2", "B2", "G2", "A3"}) {
        auto l = chevalley_algebra(SimpleType::parse(name));
        FrameAnalysis fa = decompose(*l);
        SparseMatrix sigma = chevalley_involution(*l, fa);
        EXPECT_TRUE((sigma * sigma - SparseMatrix::identity(l->dim())).is_zero()) << name;
        Subalgebra k = fixed_subalgebra(l, sigma);
        EXPECT_EQ(k.dim(), fa.positive.size()) << name;
    }
}

TEST(CentralizerChain, DimensionsAndTypes) {
    CentralizerChain c = build_centralizer_chain();
    EXPECT_EQ(c.d6.dim(), 66u);
    EXPECT_EQ(c.d6_type.str(), "D6");
    EXPECT_EQ(c.d4a1.dim(), 31u);
    EXPECT_EQ(c.d4a1_type.str(), "D4+A1");
    EXPECT_EQ(c.three_a1.dim(), 9u);
    EXPECT_EQ(c.three_a1_type.str(), "3A1");
    EXPECT_EQ(c.d4.dim(), 28u);
    EXPECT_EQ(c.d4_type.str(), "D4");
}

TEST(E8Setting, L1BranchesToSpinorAndTwoVectors) {
    const E8Setting& s = setting();
    EXPECT_EQ(s.ex.fts.dim(), 56u);
    EXPECT_EQ(s.fa7.label.str(), "E7");
    EXPECT_EQ(s.fa6.label.str(), "D6");
    ASSERT_EQ(s.l1_branching.size(), 2u);
    EXPECT_EQ(s.l1_branching[0].highest, (std::vector<long long>{0, 0, 0, 0, 1, 0}));
    EXPECT_EQ(s.l1_branching[0].multiplicity, 1u);
    EXPECT_EQ(s.l1_branching[1].highest, (std::vector<long long>{1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(s.l1_branching[1].multiplicity, 2u);
    EXPECT_EQ(fts_subalgebra_closure(s.ex.fts, s.u1.basis()), s.u1);
}

TEST(E8Setting, EmbedLandsInDegreeOne) {
    const E8Setting& s = setting();
    const Subspace& l1 = s.ex.grading.components.at(1);
    for (std::size_t i = 0; i < s.ex.fts.dim(); i += 7) EXPECT_TRUE(l1.contains(s.embed(SparseVector::unit(i))));
}

TEST(IntersectionWitness, SingleRootMeetsAboveTheBound) {
    const E8Setting& s = setting();
    IntersectionWitness w = single_root_witness(s);
    EXPECT_NE(w.u2, s.u1);
    EXPECT_EQ(w.u2.dim(), 32u);
    EXPECT_GE(w.meet.dim(), 2 * 32u - 56u);
    EXPECT_TRUE(w.closed);
}

TEST(IntersectionWitness, FixingD4ContainsTheHighestRootAndFixesEightDimensions) {
    const E8Setting& s = setting();
    const FixingD4& k = fixing();
    EXPECT_EQ(k.fa.label.str(), "D4");
    EXPECT_EQ(k.fixed.dim(), 8u);
    EXPECT_TRUE(s.u1.contains(k.fixed));
    const SimpleComponent& e7 = s.fa7.components[0];
    EXPECT_TRUE(k.d4.space.contains(s.fa7.frame.roots[e7.highest].vector));
}

TEST(IntersectionWitness, GenericConjugatorsContainTheFixedSpaceProperty) {
    // Any element of the fixing group keeps its fixed space inside both U1 and g U1.
    const E8Setting& s = setting();
    const FixingD4& k = fixing();
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        IntersectionWitness w = generic_witness(s, k, seed, 1);
        EXPECT_TRUE(w.meet.contains(k.fixed)) << seed;
        EXPECT_GE(w.meet.dim(), 8u) << seed;
        EXPECT_TRUE(w.closed) << seed;
    }
}

TEST(IntersectionWitness, DefaultSeedGivesExactlyTheFixedSpace) {
    IntersectionWitness w = generic_witness(setting(), fixing(), 0);
    EXPECT_EQ(w.meet.dim(), 8u);
    EXPECT_EQ(w.meet, fixing().fixed);
}

TEST(EightDim, TkkIsD4AndInnerDerivationsAre3A1) {
    const E8Setting& s = setting();
    EightDimAnalysis a = analyze_eight(s, generic_witness(s, fixing(), 0));
    EXPECT_TRUE(a.axioms.all());
    EXPECT_TRUE(a.simple.simple);
    EXPECT_EQ(a.tkk_type.str(), "D4");
    EXPECT_EQ(a.inder_derived_type.str(), "3A1");
    EXPECT_EQ(a.d4.dim(), 28u);
    EXPECT_EQ(a.e7_prime_type.str(), "E7");
    EXPECT_EQ(a.d4_in_e7.str(), "D4 -> E7 [[1]]");
}

TEST(EightDim, RejectsNonClosedIntersections) {
    IntersectionWitness w = generic_witness(setting(), fixing(), 0);
    w.closed = false;
    EXPECT_THROW(analyze_eight(setting(), w), std::invalid_argument);
}

TEST(VectorBranching, ThreeDiagonalSl2sGiveThreeAdjointsAndThreeTrivials) {
    VectorBranching vb = branch_vector_to_three_a1(setting());
    EXPECT_EQ(vb.vector_module.dim(), 12u);
    EXPECT_EQ(vb.three_a1_type.str(), "3A1");
    EXPECT_EQ(vb.three_a1_in_d6.str(), "A1+A1+A1 -> D6 [[2], [2], [2]]");
    std::map<std::vector<long long>, std::size_t> parts;
    for (const auto& p : vb.parts) parts[p.highest] = p.multiplicity;
    std::map<std::vector<long long>, std::size_t> expected = {
        {{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{0, 0, 0}, 3}};
    EXPECT_EQ(parts, expected);
}

TEST(IndexTwoD4, TwoAdjointsAndTheThreeA1Refinement) {
    IndexTwoD4 d = build_index_two_d4(setting());
    EXPECT_EQ(d.a7_type.str(), "A7");
    EXPECT_EQ(d.d4_type.str(), "D4");
    EXPECT_EQ(d.d4_in_e7.str(), "D4 -> E7 [[2]]");
    ASSERT_EQ(d.l1_parts.size(), 1u);
    EXPECT_EQ(d.l1_parts[0].highest, (std::vector<long long>{0, 1, 0, 0}));
    EXPECT_EQ(d.l1_parts[0].multiplicity, 2u);
    std::size_t total = 0, adjoint = 0, tensor = 0, trivial = 0;
    for (const auto& p : d.l1_three_a1_parts) {
        total += p.dim * p.multiplicity;
        if (p.dim == 3) adjoint += p.dim * p.multiplicity;
        if (p.dim == 8) tensor += p.dim * p.multiplicity;
        if (p.dim == 1) trivial += p.multiplicity;
    }
    EXPECT_EQ(adjoint, 18u);
    EXPECT_EQ(tensor, 32u);
    EXPECT_EQ(trivial, 6u);
    EXPECT_EQ(total, 56u);
}
