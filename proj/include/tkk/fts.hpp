#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tkk/liealg.hpp"

namespace tkk {

/// Ternary algebra with a bilinear form: product tensor xyz and Gram matrix <x, y>.
class TernaryAlgebra {
public:
    TernaryAlgebra() = default;
    /// product[(i * dim + j) * dim + k] = b_i b_j b_k; gram must be dim x dim.
    TernaryAlgebra(std::size_t dim, std::vector<SparseVector> product, Matrix gram, std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    const SparseVector& product_basis(std::size_t i, std::size_t j, std::size_t k) const {
        return product_[(i * dim_ + j) * dim_ + k];
    }
    SparseVector product(const SparseVector& x, const SparseVector& y, const SparseVector& z) const;
    const Matrix& gram() const { return gram_; }
    Rational form(const SparseVector& x, const SparseVector& y) const;
    const std::vector<std::string>& labels() const { return labels_; }
    /// Number of nonzero coefficients in the product tensor.
    std::size_t nnz() const;

    /// Matrix of w -> x y w (left multiplication by the pair x, y).
    SparseMatrix pair_operator(const SparseVector& x, const SparseVector& y) const;

private:
    std::size_t dim_ = 0;
    std::vector<SparseVector> product_;
    Matrix gram_;
    std::vector<std::string> labels_;
};

/// Standard symplectic Gram matrix on F^(2m): <e_i, e_(m+i)> = 1 = -<e_(m+i), e_i>.
Matrix standard_symplectic(std::size_t dim);

/// Product xyz = a<x,y>z + b<y,z>x + c<z,x>y built from a bilinear form.
TernaryAlgebra form_product(const Matrix& form, const Rational& a, const Rational& b, const Rational& c);
/// Trivial product xyz = 1/2(<x,y>z + <y,z>x - <z,x>y) for an antisymmetric form.
/// Throws std::invalid_argument when the form is not antisymmetric.
TernaryAlgebra trivial_fts(const Matrix& form);

/// Coefficients (a, b, c) of form_product.
struct FormConvention {
    Rational a, b, c;
};
/// All coefficient triples in {-1, -1/2, 0, 1/2, 1}^3 for which form_product(form, a, b, c)
/// passes axioms 1-3, in lexicographic order of (a, b, c).
std::vector<FormConvention> passing_form_conventions(const Matrix& form);
/// Componentwise direct sum (products and forms between the summands vanish).
TernaryAlgebra direct_sum(const TernaryAlgebra& a, const TernaryAlgebra& b);
/// Induced algebra on a product-closed subspace (coordinates in the subspace basis).
TernaryAlgebra restrict_to(const TernaryAlgebra& a, const Subspace& u);

/// Products of all triples of the given vectors: out[(p * m + q) * m + r] = u_p u_q u_r.
std::vector<SparseVector> triple_products(const TernaryAlgebra& a, const std::vector<SparseVector>& u);

struct AxiomResult {
    bool pass = true;
    std::vector<std::size_t> witness;  ///< first violating basis index tuple
    SparseVector residual;             ///< lhs - rhs at the witness
};

struct AxiomReport {
    AxiomResult axiom[3];
    bool axiom3_exhaustive = true;
    std::size_t axiom3_tuples = 0;  ///< number of quintuples checked
    bool all() const { return axiom[0].pass && axiom[1].pass && axiom[2].pass; }
};

struct AxiomOptions {
    /// Axiom 3 runs over all basis quintuples up to this dimension, sampled above it.
    std::size_t exhaustive_limit = 20;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
};

/// Axioms 1 and 2 on all basis triples; axiom 3 on basis quintuples (exhaustive or seeded sample).
/// Witnesses are the first violations in lexicographic (resp. sample) order.
AxiomReport check_bsta_axioms(const TernaryAlgebra& a, const AxiomOptions& opts = {});

// ---------------------------------------------------------------- gradings and extraction

/// Eigenspace decomposition of ad h by integer eigenvalue.
struct Grading {
    SparseVector element;
    std::map<int, Subspace> components;

    std::size_t dim(int i) const;
    /// Dimensions of the components -2..2.
    std::vector<std::size_t> five_dims() const;
    bool is_extraspecial() const;
};

/// Throws std::domain_error if ad h is not diagonalizable with integer spectrum and
/// std::logic_error if the grading law fails.
Grading grading_by(const LieAlgebra& l, const SparseVector& h);

/// (e_theta, theta coroot, f_theta) for the highest root of a simple split algebra.
Sl2Triple extraspecial_sl2(const LieAlgebra& l);

/// L1 of the grading with its ternary structure, plus the data used to rebuild it.
struct FtsExtraction {
    TernaryAlgebra fts;
    Grading grading;
    Sl2Triple triple;
    std::vector<SparseVector> l1;  ///< basis of L1 in the ambient algebra (basis of `fts`)
};

/// Ternary product on L1 given by xyz = [[[f, z], y], x], with the form [x, y] = <x, y> e.
/// Throws std::invalid_argument when the grading is not extraspecial.
FtsExtraction extract(const LieAlgebra& l, const Sl2Triple& t);
TernaryAlgebra extract_fts(const LieAlgebra& l, const Sl2Triple& t);

// ---------------------------------------------------------------- Lie triple systems and TKK

/// Trilinear bracket [a, b, c] on a vector space.
struct LieTripleSystem {
    std::size_t dim = 0;
    std::vector<SparseVector> triple;  ///< triple[(a * dim + b) * dim + c]

    const SparseVector& bracket_basis(std::size_t a, std::size_t b, std::size_t c) const {
        return triple[(a * dim + b) * dim + c];
    }
    /// Operator [a, b, -] as a matrix.
    SparseMatrix inner_map(std::size_t a, std::size_t b) const;
};

/// Lie triple system on A + A: basis (b_i, 0) then (0, b_i). The displayed product P is
/// antisymmetric in its last two slots; the bracket is [a, b, c] = P(c, a, b).
LieTripleSystem lts_from_fts(const TernaryAlgebra& a);

struct LtsReport {
    bool antisym = true;
    bool cyclic = true;
    bool derivation = true;
    std::vector<std::size_t> witness;
    bool all() const { return antisym && cyclic && derivation; }
};
/// Antisymmetry in the first two slots, the cyclic identity and the derivation identity on basis tuples.
LtsReport check_lts(const LieTripleSystem& m);

/// Span of the inner maps [a, b, -] as flattened dim x dim matrices.
Subspace inder(const LieTripleSystem& m);
/// Span of the operators w -> wxy + wyx (flattened). These are derivations of the product.
Subspace ternary_inder(const TernaryAlgebra& a);

struct TkkAlgebra {
    LieAlgebraPtr algebra;            ///< basis: A + A (2 dim A vectors) then the inner derivations
    std::size_t fts_dim = 0;
    std::size_t inder_dim = 0;
    std::optional<SparseVector> grading;  ///< element acting by +1 on (A, 0) and -1 on (0, A)
};

/// Embedding Lie algebra M + Inder(M) of the triple system M = lts_from_fts(a), with
/// [(m1, D1), (m2, D2)] = (D1 m2 - D2 m1, [D1, D2] + [m1, m2, -]).
TkkAlgebra tkk_construct(const TernaryAlgebra& a);
LieAlgebraPtr tkk(const TernaryAlgebra& a);
/// identify_type seeded with the grading element when available.
TypeLabel identify_tkk(const TkkAlgebra& t);

// ---------------------------------------------------------------- subalgebras, ideals, simplicity

/// Smallest product-closed subspace containing the seeds.
Subspace fts_subalgebra_closure(const TernaryAlgebra& a, const std::vector<SparseVector>& seeds);
/// Smallest ideal (closed under products with an argument in it, in any slot) containing the vectors.
Subspace ideal_closure(const TernaryAlgebra& a, const std::vector<SparseVector>& vectors);

struct SimplicityReport {
    bool simple = false;
    bool exact = false;      ///< decided by the radical argument rather than by search
    Subspace witness;        ///< a proper nonzero ideal when not simple
};
/// Simplicity under the three-slot ideal notion. When axiom 1 holds on the basis, any ideal
/// containing a vector outside the radical of the form is everything, so the answer is decided
/// exactly by the largest ideal inside the radical. Otherwise ideals generated by basis vectors
/// and seeded random vectors are searched.
SimplicityReport fts_is_simple(const TernaryAlgebra& a, std::uint64_t seed = 0);

// ---------------------------------------------------------------- split gift

struct GiftReport {
    bool pass = true;
    std::size_t l1_dim = 0;
    std::size_t module_dim = 0;  ///< dim of F^2 (x) L1
    std::size_t pairs = 0;
    std::vector<std::size_t> witness;  ///< first failing basis pair (u, v)
};

/// Rebuilds the triple product of L1 + L-1 = F^2 (x) L1 from the maps pi and phi and
/// compares D(u, v) with [[u, v], -] on all basis pairs.
/// Throws std::invalid_argument when the form on L1 is degenerate.
GiftReport split_gift_verify(const LieAlgebra& l, const Sl2Triple& t);

}  // namespace tkk
