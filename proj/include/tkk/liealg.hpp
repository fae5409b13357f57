#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tkk/linalg.hpp"
#include "tkk/rootsys.hpp"

namespace tkk {

/// A root of a split Cartan: its weight (eigenvalues on the Cartan basis), a root
/// vector, and the value of a fixed linear functional deciding positivity.
struct FrameRoot {
    Vector weight;
    SparseVector vector;
    Rational key;
};

/// Split Cartan subalgebra with its root decomposition.
struct CartanFrame {
    std::vector<SparseVector> cartan;  ///< basis of the Cartan subalgebra
    std::vector<FrameRoot> roots;
};

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Finite-dimensional Lie algebra over Q given by structure constants.
class LieAlgebra {
public:
    /// table[i * dim + j] = [b_i, b_j]. Antisymmetry is checked.
    LieAlgebra(std::size_t dim, std::vector<SparseVector> table, std::vector<std::string> labels = {},
               std::optional<CartanFrame> frame = std::nullopt);
    /// Builds from brackets listed for i < j only.
    static LieAlgebra from_upper(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, SparseVector>>& brackets,
                                 std::vector<std::string> labels = {});
    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const SparseVector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
    /// ad(x) as a sparse matrix (column j = [x, b_j]).
    SparseMatrix ad(const SparseVector& x) const;
    SparseMatrix ad_basis(std::size_t i) const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<CartanFrame>& frame() const { return frame_; }
    LieAlgebra with_frame(std::optional<CartanFrame> frame) const;

    /// Number of nonzero structure constants c_{ij}^k over i < j.
    std::size_t nnz() const;

private:
    std::size_t dim_;
    std::vector<SparseVector> table_;
    std::vector<std::string> labels_;
    std::optional<CartanFrame> frame_;
};

/// Subalgebra of a parent algebra together with its induced structure constants.
struct Subalgebra {
    LieAlgebraPtr parent;
    Subspace space;
    LieAlgebraPtr induced;
    Matrix inclusion;  ///< parent_dim x sub_dim, columns are the basis of `space`

    std::size_t dim() const { return space.dim(); }
    /// Image in the parent of an element in sub-coordinates.
    SparseVector include(const SparseVector& x) const;
    /// Sub-coordinates of a parent element lying in the subalgebra (throws otherwise).
    SparseVector restrict(const SparseVector& x) const;
};

/// Builds the subalgebra on a bracket-closed subspace (throws std::invalid_argument otherwise).
/// When the parent has a frame and the subspace is spanned by its intersection with the
/// Cartan plus root vectors (closed under negation), the frame is inherited.
Subalgebra make_subalgebra(const LieAlgebraPtr& parent, const Subspace& space);
/// Subalgebra of `outer.induced` given by a subalgebra `inner` of the same parent.
Subalgebra nest_subalgebra(const Subalgebra& outer, const Subalgebra& inner);
/// Composes inclusions: inner (of outer.induced) followed by outer.
Subalgebra compose(const Subalgebra& outer, const Subalgebra& inner);
/// Whole algebra viewed as a subalgebra of itself.
Subalgebra identity_subalgebra(const LieAlgebraPtr& l);
/// Smallest subalgebra containing the generators.
Subalgebra generate_subalgebra(const LieAlgebraPtr& parent, const std::vector<SparseVector>& gens);

struct Sl2Triple {
    SparseVector e, h, f;
};
bool is_sl2_triple(const LieAlgebra& l, const Sl2Triple& t);

struct StructuralReport {
    bool antisym = true;
    bool jacobi = true;
    bool semisimple = false;
    bool perfect = false;
    std::size_t center_dim = 0;
    std::size_t killing_rank = 0;
    std::vector<std::size_t> jacobi_witness;  ///< first failing basis triple, if any
};

/// Antisymmetry and Jacobi on all basis triples (or `samples` seeded random triples when nonzero),
/// Killing-form semisimplicity, perfectness and center dimension.
StructuralReport structural_tests(const LieAlgebra& l, std::size_t samples = 0, std::uint64_t seed = 0);
/// First failing Jacobi triple in lexicographic order (empty if none).
std::vector<std::size_t> jacobi_check(const LieAlgebra& l);
std::vector<std::size_t> jacobi_check_sampled(const LieAlgebra& l, std::size_t samples, std::uint64_t seed);

Matrix killing_gram(const LieAlgebra& l);
/// kappa(x, y) = tr(ad x ad y) for two elements.
Rational killing(const LieAlgebra& l, const SparseVector& x, const SparseVector& y);
std::size_t sparse_rank(const std::vector<SparseVector>& rows, std::size_t ambient);

Subspace center(const LieAlgebra& l);
Subalgebra centralizer(const LieAlgebraPtr& l, const std::vector<SparseVector>& elements);
Subalgebra derived_subalgebra(const LieAlgebraPtr& l);

/// Lie algebra structure on an operator space closed under commutators.
/// Basis = the given subspace of flattened n x n matrices.
LieAlgebra operator_algebra(const Subspace& ops, std::size_t n);

// ---------------------------------------------------------------- split Cartan and types

struct SplitCartanOptions {
    std::size_t max_attempts = 4000;  ///< budget of Jacobson-Morozov attempts
};

/// Completes an sl2 triple (e, h, f) from an ad-nilpotent element, searching f in
/// `minus_space` when given. Empty if no triple exists there.
std::optional<Sl2Triple> sl2_from_nilpotent(const LieAlgebra& l, const SparseVector& e,
                                            const Subspace* minus_space = nullptr);
bool is_ad_nilpotent(const LieAlgebra& l, const SparseVector& x);
/// Eigenspaces of ad h on an ad h invariant subspace, by increasing eigenvalue.
/// Throws std::domain_error unless ad h is diagonalizable there with integer eigenvalues.
std::vector<std::pair<Rational, Subspace>> ad_eigenspaces(const LieAlgebra& l, const SparseVector& h, const Subspace& within);

/// Split Cartan subalgebra with root decomposition. Returns the stored frame when present.
CartanFrame split_cartan(const LieAlgebra& l, const std::vector<SparseVector>& seeds = {},
                         const SplitCartanOptions& opts = {});

/// Isomorphism type of a reductive algebra: simple summands plus a central torus.
struct TypeLabel {
    std::vector<SimpleType> summands;  ///< ordered by decreasing dimension, then family, then rank
    std::size_t center_dim = 0;

    std::string str() const;
    std::size_t dim() const;
    friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
        return a.summands == b.summands && a.center_dim == b.center_dim;
    }
    friend bool operator!=(const TypeLabel& a, const TypeLabel& b) { return !(a == b); }
};

/// A simple ideal identified from a frame.
struct SimpleComponent {
    SimpleType type;
    std::vector<std::size_t> simple;       ///< frame root indices of simple roots, Bourbaki order
    std::vector<std::size_t> roots;        ///< all frame root indices in the component
    std::vector<std::vector<int>> coeffs;  ///< per entry of `roots`: coefficients in `simple`
    std::size_t highest = 0;               ///< frame root index of the highest root
    std::vector<SparseVector> coroots;     ///< simple coroots, Bourbaki order
    SparseVector long_coroot;              ///< coroot of the highest root
    Subspace ideal;
    std::size_t long_roots = 0, short_roots = 0;
};

/// Root data of a reductive algebra read from a complete split frame.
struct FrameAnalysis {
    CartanFrame frame;
    std::vector<std::size_t> positive;     ///< frame root indices with positive key
    std::vector<std::size_t> negative_of;  ///< frame root index of -alpha for each root
    std::vector<SimpleComponent> components;
    Subspace center;
    TypeLabel label;

    /// Component index and position in its `roots` list for a frame root.
    std::pair<std::size_t, std::size_t> locate(std::size_t root) const;
};

/// Analyzes a frame of `l`; throws std::runtime_error when the frame is incomplete
/// or the root system cannot be matched to a standard type.
FrameAnalysis analyze_frame(const LieAlgebra& l, const CartanFrame& frame);
/// analyze_frame(l, split_cartan(l, seeds)).
FrameAnalysis decompose(const LieAlgebra& l, const std::vector<SparseVector>& seeds = {});
TypeLabel identify_type(const LieAlgebra& l, const std::vector<SparseVector>& seeds = {});

struct GenericRank {
    std::size_t rank = 0;
    bool stable = false;
    std::size_t samples = 0;
};
/// Minimal multiplicity of the eigenvalue 0 of ad(x) over seeded samples.
GenericRank generic_rank(const LieAlgebra& l, std::uint64_t seed = 0, std::size_t max_samples = 6);

/// Cartan matrix comparison against the standard model (used by identification).
std::optional<std::vector<std::size_t>> match_cartan(const std::vector<std::vector<int>>& cartan, const RootSystem& standard);

// ---------------------------------------------------------------- Chevalley algebras

/// Chevalley basis algebra: positive root vectors (root order), simple coroots h_1..h_r,
/// then negative root vectors in the same order. The frame uses the simple coroots.
LieAlgebraPtr chevalley_algebra(const RootSystem& rs);
LieAlgebraPtr chevalley_algebra(SimpleType type);

/// Basis index of the root vector for a signed root of a Chevalley algebra.
std::size_t chevalley_root_index(const RootSystem& rs, const std::vector<int>& coeffs);

/// Subalgebra generated by e_{+-gamma} for the chosen nodes of the extended diagram
/// (node 0 is the lowest root, nodes 1..r the simple roots).
Subalgebra subsystem_subalgebra(const LieAlgebraPtr& l, const RootSystem& rs, const std::vector<std::size_t>& nodes);

}  // namespace tkk
