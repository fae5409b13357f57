#pragma once

#include <functional>

#include <optional>
#include <string>
#include <vector>

#include "tkk/matrix.hpp"
#include "tkk/sparse.hpp"

namespace tkk {

/// Linear subspace of Q^n represented by its reduced row echelon basis.
///
/// The representation is canonical, so two subspaces are equal exactly when
/// their stored bases are identical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<SparseVector>& vectors);
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    /// Wraps rows already in reduced echelon form (unit pivots, pivot columns cleared); validated.
    static Subspace from_rref(std::size_t ambient, std::vector<SparseVector> rows);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }
    const std::vector<SparseVector>& basis() const { return rows_; }
    const SparseVector& basis(std::size_t i) const { return rows_[i]; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }
    Matrix matrix() const { return Matrix::from_sparse_rows(rows_, ambient_); }

    /// v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
    SparseVector residual(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return residual(v).is_zero(); }
    bool contains(const Subspace& o) const;
    /// Coordinates of v with respect to basis(); empty when v is not in the subspace.
    std::optional<Vector> coordinates(const SparseVector& v) const;
    /// Coordinates without the membership check (caller guarantees membership).
    Vector coordinates_unchecked(const SparseVector& v) const;
    /// Element with the given coordinates.
    SparseVector element(const Vector& coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    std::vector<SparseVector> rows_;
    std::vector<std::uint32_t> pivots_;
    std::vector<std::int32_t> pivot_row_;  // column -> row index or -1
};

/// Incremental sparse elimination over Q with optional tracking of linear relations.
class Echelon {
public:
    explicit Echelon(std::size_t ambient, bool track = false);

    /// Inserts v. Returns true when v was independent of the previous insertions.
    /// With tracking enabled and a dependent v, relation() afterwards holds coefficients
    /// c over insertion indices with sum c_k v_k = 0 and coefficient 1 on v itself.
    bool insert(const SparseVector& v);
    /// Reduces v against the stored rows (leading-term reduction).
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
    /// With tracking: coefficients c over insertion indices with sum c_k v_k = v, if v is in the span.
    std::optional<SparseVector> combination(const SparseVector& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    std::size_t inserted() const { return inserted_; }
    const SparseVector& relation() const { return relation_; }
    /// Insertion indices of the independent vectors, in insertion order.
    const std::vector<std::size_t>& independent() const { return independent_; }

    Subspace subspace() const;

private:
    std::size_t ambient_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<SparseVector> rows_;
    std::vector<SparseVector> combos_;
    std::vector<std::int32_t> pivot_row_;
    std::vector<std::size_t> independent_;
    SparseVector relation_;
};

struct RrefResult {
    Matrix rref;                          ///< reduced row echelon form (zero rows dropped)
    std::vector<std::size_t> pivots;      ///< pivot column of each row
};

/// Reduced row echelon form via fraction-free (Bareiss) elimination followed by normalization.
RrefResult rref(const Matrix& m);

struct RankKernel {
    std::size_t rank = 0;
    Subspace kernel;
    Subspace rowspace;
};

RankKernel rref_rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Kernel of the linear map whose columns are given (ambient of the result = number of columns).
Subspace kernel_of_columns(const std::vector<SparseVector>& columns, std::size_t rows);
Subspace kernel(const SparseMatrix& m);
/// Some x with sum_j x_j columns[j] = rhs (free variables zero), or empty when inconsistent.
std::optional<SparseVector> solve_columns(const std::vector<SparseVector>& columns, std::size_t rows, const SparseVector& rhs);
/// Image (column space) of a sparse matrix.
Subspace image(const SparseMatrix& m);

/// Some x with A x = b, choosing zero for free variables; empty when inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Coefficients c_0..c_n (ascending powers) of the monic characteristic polynomial det(x I - M).
std::vector<Rational> char_poly(const Matrix& m);

/// Eigenspaces of a linear operator on an invariant subspace, by increasing eigenvalue.
/// Throws std::invalid_argument when the subspace is not invariant and std::domain_error
/// unless the operator is diagonalizable there with integer eigenvalues.
std::vector<std::pair<Rational, Subspace>> integer_eigenspaces(const std::function<SparseVector(const SparseVector&)>& op,
                                                               const Subspace& within);

struct MeetJoin {
    Subspace intersection;
    Subspace sum;
};
MeetJoin subspace_meet_join(const Subspace& u, const Subspace& v);

/// exp(N) = sum N^k / k! for nilpotent N; throws std::domain_error when N^dim != 0.
Matrix exp_nilpotent(const Matrix& n);
SparseMatrix exp_nilpotent(const SparseMatrix& n);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Human-readable polynomial in x from ascending coefficients.
std::string poly_str(const std::vector<Rational>& coeffs);

}  // namespace tkk
