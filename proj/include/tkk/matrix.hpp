#pragma once

#include <string>
#include <vector>

#include "tkk/rational.hpp"
#include "tkk/sparse.hpp"

namespace tkk {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
    /// Row-list initializer; all rows must have equal length.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_sparse_rows(const std::vector<SparseVector>& rows, std::size_t cols);
    static Matrix from_sparse(const SparseMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Rational>& data() const { return data_; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    SparseVector sparse_row(std::size_t i) const;
    SparseMatrix to_sparse() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;
    bool is_zero() const;
    bool is_antisymmetric() const;
    bool is_symmetric() const;

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace tkk
