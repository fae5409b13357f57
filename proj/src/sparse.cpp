#include "tkk/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkk {

SparseVector SparseVector::unit(std::size_t i, Rational value) {
    SparseVector v;
    if (!value.is_zero()) v.entries_.push_back({static_cast<std::uint32_t>(i), std::move(value)});
    return v;
}

SparseVector SparseVector::from_dense(const Vector& d) {
    SparseVector v;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) v.entries_.push_back({static_cast<std::uint32_t>(i), d[i]});
    return v;
}

SparseVector SparseVector::from_pairs(std::vector<SparseEntry> pairs) {
    std::stable_sort(pairs.begin(), pairs.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVector v;
    for (auto& p : pairs) {
        if (!v.entries_.empty() && v.entries_.back().index == p.index) {
            v.entries_.back().value += p.value;
            if (v.entries_.back().value.is_zero()) v.entries_.pop_back();
        } else if (!p.value.is_zero()) {
            v.entries_.push_back(std::move(p));
        }
    }
    return v;
}

Rational SparseVector::get(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const SparseEntry& e, std::size_t k) { return e.index < k; });
    if (it != entries_.end() && it->index == i) return it->value;
    return Rational(0);
}

Vector SparseVector::to_dense(std::size_t n) const {
    Vector d(n);
    for (const auto& e : entries_) {
        if (e.index >= n) throw std::out_of_range("SparseVector::to_dense: index beyond length");
        d[e.index] = e.value;
    }
    return d;
}

void SparseVector::axpy(const Rational& c, const SparseVector& x) {
    if (c.is_zero() || x.entries_.empty()) return;
    std::vector<SparseEntry> out;
    out.reserve(entries_.size() + x.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = x.entries_.begin(), be = x.entries_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->index < b->index)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == ae || b->index < a->index) {
            out.push_back({b->index, c * b->value});
            ++b;
        } else {
            Rational v = a->value + c * b->value;
            if (!v.is_zero()) out.push_back({a->index, std::move(v)});
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

SparseVector SparseVector::scaled(const Rational& c) const {
    SparseVector r;
    if (c.is_zero()) return r;
    r.entries_.reserve(entries_.size());
    for (const auto& e : entries_) r.entries_.push_back({e.index, e.value * c});
    return r;
}

void SparseVector::scale(const Rational& c) {
    if (c.is_zero()) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.value *= c;
}

Rational SparseVector::dot(const Vector& dense) const {
    Rational s;
    for (const auto& e : entries_) s += e.value * dense.at(e.index);
    return s;
}

Rational SparseVector::dot(const SparseVector& o) const {
    Rational s;
    auto a = entries_.begin(), ae = entries_.end();
    auto b = o.entries_.begin(), be = o.entries_.end();
    while (a != ae && b != be) {
        if (a->index < b->index) {
            ++a;
        } else if (b->index < a->index) {
            ++b;
        } else {
            s += a->value * b->value;
            ++a;
            ++b;
        }
    }
    return s;
}

bool operator<(const SparseVector& a, const SparseVector& b) {
    std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.entries_[i];
        const auto& y = b.entries_[i];
        if (x.index != y.index) return x.index < y.index;
        if (x.value != y.value) return x.value < y.value;
    }
    return a.entries_.size() < b.entries_.size();
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
    SparseVector r = a;
    r.axpy(Rational(1), b);
    return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
    SparseVector r = a;
    r.axpy(Rational(-1), b);
    return r;
}

std::string SparseVector::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(entries_[i].index) + ":" + entries_[i].value.short_str();
    }
    return s + "}";
}

void Accumulator::add(std::uint32_t i, const Rational& v) {
    if (v.is_zero()) return;
    if (!used_[i]) {
        used_[i] = 1;
        touched_.push_back(i);
        values_[i] = v;
    } else {
        values_[i] += v;
    }
}

void Accumulator::add_scaled(const SparseVector& x, const Rational& c) {
    if (c.is_zero()) return;
    if (c.is_one()) {
        for (const auto& e : x.entries()) add(e.index, e.value);
    } else {
        for (const auto& e : x.entries()) add(e.index, e.value * c);
    }
}

SparseVector Accumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector r;
    for (auto i : touched_) {
        if (!values_[i].is_zero()) r.push_back(i, std::move(values_[i]));
        values_[i] = Rational(0);
        used_[i] = 0;
    }
    touched_.clear();
    return r;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
    return m;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    if (v.extent() > cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
    Accumulator acc(rows_);
    for (const auto& e : v.entries()) acc.add_scaled(columns_[e.index], e.value);
    return acc.take();
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("SparseMatrix::operator*: dimension mismatch");
    SparseMatrix r(rows_, o.cols_);
    Accumulator acc(rows_);
    for (std::size_t j = 0; j < o.cols_; ++j) {
        for (const auto& e : o.columns_[j].entries()) acc.add_scaled(columns_[e.index], e.value);
        r.columns_[j] = acc.take();
    }
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SparseMatrix::operator+: dimension mismatch");
    SparseMatrix r = *this;
    for (std::size_t j = 0; j < cols_; ++j) r.columns_[j].axpy(Rational(1), o.columns_[j]);
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SparseMatrix::operator-: dimension mismatch");
    SparseMatrix r = *this;
    for (std::size_t j = 0; j < cols_; ++j) r.columns_[j].axpy(Rational(-1), o.columns_[j]);
    return r;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    SparseMatrix r(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.columns_[j] = columns_[j].scaled(c);
    return r;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<std::vector<SparseEntry>> rows(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& e : columns_[j].entries()) rows[e.index].push_back({static_cast<std::uint32_t>(j), e.value});
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        SparseVector v;
        for (auto& e : rows[i]) v.push_back(e.index, std::move(e.value));
        t.columns_[i] = std::move(v);
    }
    return t;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : columns_)
        if (!c.is_zero()) return false;
    return true;
}

Rational SparseMatrix::trace() const {
    Rational t;
    for (std::size_t j = 0; j < std::min(rows_, cols_); ++j) t += columns_[j].get(j);
    return t;
}

Rational SparseMatrix::trace_product(const SparseMatrix& o) const {
    // tr(A B) = sum_{i,k} A[i][k] B[k][i]
    if (cols_ != o.rows_ || rows_ != o.cols_) throw std::invalid_argument("SparseMatrix::trace_product: dimension mismatch");
    Rational t;
    for (std::size_t k = 0; k < cols_; ++k)
        for (const auto& e : columns_[k].entries()) {
            Rational b = o.columns_[e.index].get(k);
            if (!b.is_zero()) t += e.value * b;
        }
    return t;
}

SparseVector SparseMatrix::flatten() const {
    SparseVector v;
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& e : columns_[j].entries())
            v.push_back(static_cast<std::uint32_t>(j * rows_ + e.index), e.value);
    return v;
}

SparseMatrix SparseMatrix::unflatten(const SparseVector& v, std::size_t rows, std::size_t cols) {
    SparseMatrix m(rows, cols);
    for (const auto& e : v.entries()) {
        std::size_t j = e.index / rows, i = e.index % rows;
        if (j >= cols) throw std::invalid_argument("SparseMatrix::unflatten: index out of range");
        m.columns_[j].push_back(static_cast<std::uint32_t>(i), e.value);
    }
    return m;
}

}  // namespace tkk
