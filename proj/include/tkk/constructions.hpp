#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkk/dynkin.hpp"
#include "tkk/fts.hpp"

namespace tkk {

/// Root vectors e_alpha, f_alpha of a frame root, scaled so that (e, [e, f], f) is an sl2 triple.
Sl2Triple root_triple(const LieAlgebra& l, const FrameAnalysis& fa, std::size_t root);
/// Frame root index of the root with the given coefficients in the simple roots of a component.
std::size_t component_root(const FrameAnalysis& fa, std::size_t component, const std::vector<int>& coeffs);
/// Subalgebra generated by the root triples of the chosen nodes of the extended diagram of a
/// component (node 0 is the lowest root, nodes 1..r the simple roots).
Subalgebra frame_subsystem(const LieAlgebraPtr& l, const FrameAnalysis& fa, std::size_t component,
                           const std::vector<std::size_t>& nodes);
/// Centralizer of the highest root triple of a component.
Subalgebra theta_centralizer(const LieAlgebraPtr& l, const FrameAnalysis& fa, std::size_t component = 0);

/// Linear map extending generator images to a Lie homomorphism l -> l (matrix in basis coordinates).
/// Throws std::invalid_argument when the generators do not span or the extension is not a homomorphism.
SparseMatrix extend_homomorphism(const LieAlgebra& l, const std::vector<SparseVector>& gens,
                                 const std::vector<SparseVector>& images);
/// Subalgebra of elements fixed by a linear automorphism.
Subalgebra fixed_subalgebra(const LieAlgebraPtr& l, const SparseMatrix& sigma);

// ---------------------------------------------------------------- centralizer chain in E7

/// E7 > D6 (centralizer of the highest root sl2) > D4 + A1 (centralizer in D6 of its highest
/// root sl2), the three commuting long-root sl2s and their centralizer D4.
struct CentralizerChain {
    LieAlgebraPtr e7;
    FrameAnalysis fa7;
    Subalgebra d6;          ///< in e7
    FrameAnalysis fa6;      ///< of d6.induced
    Subalgebra d4a1;        ///< in d6.induced
    Subalgebra three_a1;    ///< in e7
    Subalgebra d4;          ///< centralizer of three_a1 in e7
    TypeLabel d6_type, d4a1_type, three_a1_type, d4_type;
};
CentralizerChain build_centralizer_chain();

// ---------------------------------------------------------------- the 56-dimensional setting in E8

/// E8 with its extraspecial grading: L1 (56) as a ternary algebra, E7 = centralizer of the
/// highest root sl2 acting on L1, D6 inside E7, and the 32-dimensional D6-isotypic sub-algebra U1.
struct E8Setting {
    LieAlgebraPtr e8;
    FtsExtraction ex;
    Subalgebra e7;           ///< in e8
    FrameAnalysis fa7;       ///< of e7.induced
    Subalgebra d6;           ///< in e8
    FrameAnalysis fa6;       ///< of d6.induced
    ModuleAction l1_e7;      ///< E7 acting on L1 (coordinates of ex.l1)
    ModuleAction l1_d6;      ///< D6 acting on L1
    std::vector<IsotypicComponent> l1_branching;  ///< L1 restricted to D6
    Subspace u1;             ///< 32-dim isotypic piece (L1 coordinates)

    /// L1 coordinates -> element of e8.
    SparseVector embed(const SparseVector& coords) const;
};
E8Setting build_e8_setting();

/// Conjugate g U1 and the intersection with U1 for an element g of the E7 group acting on L1.
struct IntersectionWitness {
    std::string conjugator;   ///< description of g
    std::size_t attempts = 1; ///< candidates tried before this one was accepted
    Subspace u2;
    Subspace meet;
    bool closed = false;      ///< meet is closed under the ternary product
    std::size_t closure_dim = 0;
};
/// g = exp(ad e_alpha) for the first positive root (in frame order) of E7 whose root vector moves U1.
IntersectionWitness single_root_witness(const E8Setting& s);

/// D4 inside E7 containing the highest root sl2 of E7: the centralizer of the sl2s of the
/// orthogonal D6 roots e1+e2, e3+e4, e5-e6. It fixes an 8-dim subspace of U1 pointwise.
struct FixingD4 {
    Subalgebra d4;       ///< in s.e7.induced
    FrameAnalysis fa;    ///< of d4.induced
    Subspace fixed;      ///< common kernel on L1 (coordinates of L1)
};
FixingD4 fixing_d4(const E8Setting& s);

/// g = exp(ad u) exp(ad v) with u, v seeded integer combinations of the positive and negative root
/// vectors of the fixing D4. Candidates are drawn until the intersection has dimension 8
/// (at most max_attempts); the last candidate is returned otherwise.
IntersectionWitness generic_witness(const E8Setting& s, const FixingD4& k, std::uint64_t seed,
                                    std::size_t max_attempts = 64);

/// The 8-dimensional intersection: its ternary algebra, TKK type, derived inner derivation
/// algebra, and the D4 = TKK(U) inside the E7 generated by the sl2 and U1 in E8.
struct EightDimAnalysis {
    TernaryAlgebra fts;
    AxiomReport axioms;
    SimplicityReport simple;
    TypeLabel tkk_type;
    TypeLabel inder_derived_type;
    std::size_t inder_dim = 0;
    Subalgebra d4;             ///< in e8, generated by e, f and U
    Subalgebra e7_prime;       ///< in e8, generated by e, f and U1
    TypeLabel d4_type, e7_prime_type;
    MultiIndex d4_in_e7;       ///< multi-index of d4 inside e7_prime
};
EightDimAnalysis analyze_eight(const E8Setting& s, const IntersectionWitness& w);

/// Three pairwise commuting diagonal sl2s of D6 (one in each of three orthogonal so4 factors) and
/// the restriction of one 12-dim vector summand of L1 to them.
struct VectorBranching {
    Subalgebra three_a1;            ///< in s.d6.induced
    MultiIndex three_a1_in_d6;
    Subspace vector_module;         ///< 12-dim submodule of L1 (coordinates of L1)
    std::vector<IsotypicComponent> parts;
    TypeLabel three_a1_type;
};
VectorBranching branch_vector_to_three_a1(const E8Setting& s);

/// D4 of index 2: fixed points of the outer involution of the A7 subsystem of E7 that reverses the
/// chain and negates the middle node, with the restriction of L1 to it and to its 3A1.
struct IndexTwoD4 {
    Subalgebra a7;                  ///< in s.e7.induced
    Subalgebra d4;                  ///< in s.e7.induced
    TypeLabel a7_type, d4_type;
    MultiIndex d4_in_e7;
    std::vector<IsotypicComponent> l1_parts;
    TypeLabel three_a1_type;
    std::vector<IsotypicComponent> l1_three_a1_parts;
};
IndexTwoD4 build_index_two_d4(const E8Setting& s);

}  // namespace tkk
