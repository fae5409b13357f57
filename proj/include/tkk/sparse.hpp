#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tkk/rational.hpp"

namespace tkk {

using Vector = std::vector<Rational>;

struct SparseEntry {
    std::uint32_t index;
    Rational value;
    friend bool operator==(const SparseEntry& a, const SparseEntry& b) { return a.index == b.index && a.value == b.value; }
};

/// Sparse vector: entries sorted by strictly increasing index, all values nonzero.
class SparseVector {
public:
    SparseVector() = default;

    static SparseVector unit(std::size_t i, Rational value = 1);
    static SparseVector from_dense(const Vector& v);
    /// Builds from arbitrary (index, value) pairs; duplicates are summed and zeros dropped.
    static SparseVector from_pairs(std::vector<SparseEntry> pairs);

    const std::vector<SparseEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    Rational get(std::size_t i) const;
    /// Smallest index with a nonzero value; requires a nonzero vector.
    std::uint32_t lead() const { return entries_.front().index; }
    const Rational& lead_value() const { return entries_.front().value; }
    /// One past the largest nonzero index (0 for the zero vector).
    std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().index + 1; }

    Vector to_dense(std::size_t n) const;

    /// this += c * x
    void axpy(const Rational& c, const SparseVector& x);
    SparseVector scaled(const Rational& c) const;
    void scale(const Rational& c);
    /// Appends an entry; index must exceed every stored index and value must be nonzero.
    void push_back(std::uint32_t index, Rational value) { entries_.push_back({index, std::move(value)}); }

    Rational dot(const Vector& dense) const;
    Rational dot(const SparseVector& o) const;

    friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }
    friend bool operator<(const SparseVector& a, const SparseVector& b);

    friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator*(const Rational& c, const SparseVector& a) { return a.scaled(c); }
    SparseVector operator-() const { return scaled(Rational(-1)); }

    std::string str() const;

private:
    std::vector<SparseEntry> entries_;
};

/// Dense scratch accumulator for summing many sparse contributions.
class Accumulator {
public:
    explicit Accumulator(std::size_t n) : values_(n), used_(n, 0) {}

    void add(std::uint32_t i, const Rational& v);
    void add_scaled(const SparseVector& x, const Rational& c);
    void add(const SparseVector& x) { add_scaled(x, Rational(1)); }
    /// Returns the accumulated vector and resets the accumulator.
    SparseVector take();
    std::size_t size() const { return values_.size(); }

private:
    std::vector<Rational> values_;
    std::vector<char> used_;
    std::vector<std::uint32_t> touched_;
};

/// Sparse matrix stored by columns.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    SparseMatrix(std::size_t rows, std::vector<SparseVector> columns)
        : rows_(rows), cols_(columns.size()), columns_(std::move(columns)) {}

    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVector& column(std::size_t j) const { return columns_[j]; }
    SparseVector& column(std::size_t j) { return columns_[j]; }
    const std::vector<SparseVector>& columns() const { return columns_; }

    SparseVector apply(const SparseVector& v) const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& c) const;
    SparseMatrix transpose() const;
    bool is_zero() const;
    Rational trace() const;
    /// Trace of this * o without forming the product.
    Rational trace_product(const SparseMatrix& o) const;
    /// Column-major flattening (index = col * rows + row).
    SparseVector flatten() const;
    static SparseMatrix unflatten(const SparseVector& v, std::size_t rows, std::size_t cols);

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> columns_ = std::vector<SparseVector>(cols_);
};

}  // namespace tkk
