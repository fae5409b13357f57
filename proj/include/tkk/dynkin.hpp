#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tkk/liealg.hpp"

namespace tkk {

/// Dynkin index (Lambda, Lambda + 2 rho) dim V / dim g of the irreducible module with highest
/// weight Lambda, under the normalization (theta, theta) = 2.
/// Throws std::invalid_argument for a non-dominant weight.
Rational rep_dynkin_index(const RootSystem& rs, const Weight& highest);

/// Invariant form on one simple ideal of a reductive algebra, scaled from the Killing form
/// so that the coroot of the highest root has squared length 2.
struct NormalizedForm {
    SimpleType type;
    Subspace ideal;
    Rational scale;  ///< (x, y) = scale * tr(ad x ad y restricted to the ideal)

    /// Form value for two elements of the ambient algebra, taken on the ideal.
    Rational operator()(const LieAlgebra& l, const SparseVector& x, const SparseVector& y) const;
};

/// tr(ad x ad y) restricted to an ad-invariant subspace.
Rational partial_killing(const LieAlgebra& l, const Subspace& ideal, const SparseVector& x, const SparseVector& y);

/// Normalized form of component `index` of the analysis. The scale is read from the long
/// coroot and compared with 1 / (2 h^vee); throws std::logic_error when they disagree.
NormalizedForm normalized_form(const LieAlgebra& l, const FrameAnalysis& fa, std::size_t index);
/// Gram matrix of the normalized form of a simple algebra.
Matrix normalized_gram(const LieAlgebra& l, const FrameAnalysis& fa, std::size_t index = 0);

/// Dynkin multi-index of an inclusion of reductive algebras: rows are the simple summands of the
/// source, columns those of the target, both in the order of their type labels.
struct MultiIndex {
    std::vector<SimpleType> source;
    std::vector<SimpleType> target;
    std::vector<std::vector<Rational>> matrix;
    /// Per entry, the ratios obtained from three evaluation pairs (all equal to the entry).
    std::vector<std::vector<std::vector<Rational>>> evaluations;

    std::string str() const;
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.source == b.source && a.target == b.target && a.matrix == b.matrix;
    }
};

/// Frame analyses of both sides may be supplied to avoid recomputing split Cartans.
/// Throws std::logic_error when the three evaluations of an entry disagree.
MultiIndex multi_index(const Subalgebra& f, const FrameAnalysis* source = nullptr, const FrameAnalysis* target = nullptr);
/// Single index of an inclusion of a simple algebra into a simple algebra.
/// Throws std::invalid_argument when either side is not simple.
Rational embedding_index(const Subalgebra& f, const FrameAnalysis* source = nullptr, const FrameAnalysis* target = nullptr);
/// Matrix product a * b (rows of a by columns of b).
std::vector<std::vector<Rational>> multiply(const std::vector<std::vector<Rational>>& a,
                                            const std::vector<std::vector<Rational>>& b);

// ---------------------------------------------------------------- modules

/// Representation of a Lie algebra by matrices, one per basis element.
struct ModuleAction {
    LieAlgebraPtr algebra;
    std::size_t space_dim = 0;
    std::vector<SparseMatrix> action;

    /// Matrix of an element given in algebra coordinates.
    SparseMatrix act(const SparseVector& x) const;
    SparseVector apply(const SparseVector& x, const SparseVector& v) const;
};

/// Adjoint module of an algebra.
ModuleAction adjoint_module(const LieAlgebraPtr& l);
/// Subalgebra acting by ad on an invariant subspace of its parent (basis = basis of `v`).
/// Throws std::invalid_argument when `v` is not invariant.
ModuleAction subspace_module(const Subalgebra& s, const Subspace& v);
/// Restriction along a subalgebra of the acting algebra.
ModuleAction restrict_module(const ModuleAction& m, const Subalgebra& s);
/// Invariant subspace of a module (basis = basis of `w`); throws std::invalid_argument otherwise.
ModuleAction submodule(const ModuleAction& m, const Subspace& w);
/// First basis pair (i, j) with act([b_i, b_j]) != [act(b_i), act(b_j)]; empty when a homomorphism.
std::optional<std::pair<std::size_t, std::size_t>> homomorphism_defect(const ModuleAction& m);

/// Joint eigenspaces of the given elements of the acting algebra, keyed by eigenvalue tuple.
/// Throws std::domain_error when some element does not act diagonalizably with integer spectrum.
std::map<std::vector<Rational>, Subspace> weight_spaces(const ModuleAction& m, const std::vector<SparseVector>& cartan);
/// Weight multiset with respect to the frame's Cartan basis.
std::map<std::vector<Rational>, std::size_t> module_weights(const ModuleAction& m, const CartanFrame& frame);
/// Weight multiset in Dynkin labels: eigenvalues of the simple coroots of all components,
/// concatenated in component order.
std::map<std::vector<long long>, std::size_t> module_weight_labels(const ModuleAction& m, const FrameAnalysis& fa);

/// Highest weight (Dynkin labels of all components, concatenated) with its multiplicity.
struct IsotypicComponent {
    std::vector<long long> highest;
    std::size_t multiplicity = 0;
    std::size_t dim = 0;  ///< dimension of one irreducible copy
};

/// Highest weights counted from vectors killed by all positive root vectors.
/// Throws std::logic_error when the multiplicities do not account for the whole module.
std::vector<IsotypicComponent> decompose_isotypic(const ModuleAction& m, const FrameAnalysis& fa);
/// Same, with the analysis computed from the acting algebra.
std::vector<IsotypicComponent> decompose_isotypic(const ModuleAction& m);

/// Dimension of the irreducible module of a reductive algebra with the given concatenated labels.
mpz_class irreducible_dim(const FrameAnalysis& fa, const std::vector<long long>& labels);

/// Smallest submodule containing the vectors (module coordinates).
Subspace generated_submodule(const ModuleAction& m, const std::vector<SparseVector>& vectors);
/// Vectors of weight `highest` killed by all simple root vectors.
Subspace highest_weight_vectors(const ModuleAction& m, const FrameAnalysis& fa, const std::vector<long long>& highest);

/// Subspace of a module spanned by the isotypic component of one highest weight.
Subspace isotypic_subspace(const ModuleAction& m, const FrameAnalysis& fa, const std::vector<long long>& highest);

}  // namespace tkk
