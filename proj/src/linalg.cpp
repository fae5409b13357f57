#include "tkk/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tkk {

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t ambient) {
    std::vector<SparseVector> rows;
    rows.reserve(ambient);
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(SparseVector::unit(i));
    return from_rref(ambient, std::move(rows));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVector>& vectors) {
    Echelon e(ambient);
    for (const auto& v : vectors) e.insert(v);
    return e.subspace();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Echelon e(ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: vector length mismatch");
        e.insert(SparseVector::from_dense(v));
    }
    return e.subspace();
}

Subspace Subspace::from_rref(std::size_t ambient, std::vector<SparseVector> rows) {
    Subspace s(ambient);
    s.pivot_row_.assign(ambient, -1);
    std::int64_t last = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.is_zero() || !r.lead_value().is_one()) throw std::invalid_argument("Subspace::from_rref: rows must have unit pivots");
        if (r.extent() > ambient) throw std::invalid_argument("Subspace::from_rref: index beyond ambient dimension");
        if (static_cast<std::int64_t>(r.lead()) <= last) throw std::invalid_argument("Subspace::from_rref: pivots must increase");
        last = r.lead();
        s.pivots_.push_back(r.lead());
        s.pivot_row_[r.lead()] = static_cast<std::int32_t>(i);
    }
    for (const auto& r : rows)
        for (std::size_t k = 1; k < r.nnz(); ++k)
            if (s.pivot_row_[r.entries()[k].index] >= 0)
                throw std::invalid_argument("Subspace::from_rref: pivot columns must be cleared");
    s.rows_ = std::move(rows);
    return s;
}

SparseVector Subspace::residual(const SparseVector& v) const {
    if (v.extent() > ambient_) throw std::invalid_argument("Subspace: vector beyond ambient dimension");
    if (rows_.empty()) return v;
    Accumulator acc(ambient_);
    acc.add(v);
    for (const auto& e : v.entries()) {
        std::int32_t r = pivot_row_[e.index];
        if (r >= 0) acc.add_scaled(rows_[r], -e.value);
    }
    return acc.take();
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    for (const auto& r : o.rows_)
        if (!contains(r)) return false;
    return true;
}

std::optional<Vector> Subspace::coordinates(const SparseVector& v) const {
    if (!contains(v)) return std::nullopt;
    return coordinates_unchecked(v);
}

Vector Subspace::coordinates_unchecked(const SparseVector& v) const {
    Vector c(rows_.size());
    for (const auto& e : v.entries()) {
        if (e.index >= ambient_) throw std::invalid_argument("Subspace: vector beyond ambient dimension");
        std::int32_t r = pivot_row_[e.index];
        if (r >= 0) c[r] = e.value;
    }
    return c;
}

SparseVector Subspace::element(const Vector& coords) const {
    if (coords.size() != rows_.size()) throw std::invalid_argument("Subspace::element: coordinate count mismatch");
    Accumulator acc(ambient_);
    for (std::size_t i = 0; i < coords.size(); ++i) acc.add_scaled(rows_[i], coords[i]);
    return acc.take();
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(std::size_t ambient, bool track) : ambient_(ambient), track_(track), pivot_row_(ambient, -1) {}

SparseVector Echelon::reduce(SparseVector v) const {
    std::size_t pos = 0;
    while (pos < v.nnz()) {
        const auto& e = v.entries()[pos];
        std::int32_t r = pivot_row_[e.index];
        if (r >= 0) {
            Rational c = e.value;
            v.axpy(-c, rows_[r]);
        } else {
            ++pos;
        }
    }
    return v;
}

bool Echelon::insert(const SparseVector& input) {
    if (input.extent() > ambient_) throw std::invalid_argument("Echelon::insert: vector beyond ambient dimension");
    std::size_t idx = inserted_++;
    SparseVector v = input;
    SparseVector combo;
    if (track_) combo = SparseVector::unit(idx);
    std::size_t pos = 0;
    while (pos < v.nnz()) {
        const auto& e = v.entries()[pos];
        std::int32_t r = pivot_row_[e.index];
        if (r >= 0) {
            Rational c = e.value;
            v.axpy(-c, rows_[r]);
            if (track_) combo.axpy(-c, combos_[r]);
        } else {
            ++pos;
        }
    }
    if (v.is_zero()) {
        if (track_) relation_ = std::move(combo);
        return false;
    }
    Rational inv = Rational(1) / v.lead_value();
    v.scale(inv);
    if (track_) {
        combo.scale(inv);
        combos_.push_back(std::move(combo));
    }
    pivot_row_[v.lead()] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    independent_.push_back(idx);
    return true;
}

std::optional<SparseVector> Echelon::combination(const SparseVector& input) const {
    if (!track_) throw std::logic_error("Echelon::combination requires tracking");
    SparseVector v = input;
    Accumulator acc(inserted_);
    std::size_t pos = 0;
    while (pos < v.nnz()) {
        const auto& e = v.entries()[pos];
        std::int32_t r = pivot_row_[e.index];
        if (r >= 0) {
            Rational c = e.value;
            v.axpy(-c, rows_[r]);
            acc.add_scaled(combos_[r], c);
        } else {
            ++pos;
        }
    }
    if (!v.is_zero()) return std::nullopt;
    return acc.take();
}

Subspace Echelon::subspace() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].lead() < rows_[b].lead(); });
    std::vector<SparseVector> rows(rows_.size());
    std::vector<std::int32_t> prow(ambient_, -1);
    for (std::size_t k = 0; k < order.size(); ++k) prow[rows_[order[k]].lead()] = static_cast<std::int32_t>(k);
    // Back substitution from the last pivot upwards: later rows are fully reduced first.
    for (std::size_t kk = order.size(); kk-- > 0;) {
        const SparseVector& src = rows_[order[kk]];
        Accumulator acc(ambient_);
        acc.add(src);
        for (std::size_t t = 1; t < src.nnz(); ++t) {
            const auto& e = src.entries()[t];
            std::int32_t r = prow[e.index];
            if (r >= 0) acc.add_scaled(rows[r], -e.value);
        }
        rows[kk] = acc.take();
    }
    return Subspace::from_rref(ambient_, std::move(rows));
}

// ---------------------------------------------------------------- dense elimination

RrefResult rref(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    // Scale each row to integers so the elimination below stays fraction-free.
    Matrix a(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            if (!m(i, j).is_integer()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        Rational scale(l);
        for (std::size_t j = 0; j < nc; ++j) a(i, j) = m(i, j) * scale;
    }
    std::vector<std::size_t> pivots;
    Rational prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a(p, c).is_zero()) ++p;
        if (p == nr) continue;
        a.swap_rows(p, r);
        const Rational piv = a(r, c);
        for (std::size_t i = r + 1; i < nr; ++i) {
            const Rational f = a(i, c);
            for (std::size_t j = c + 1; j < nc; ++j) {
                Rational v = piv * a(i, j);
                if (!f.is_zero() && !a(r, j).is_zero()) v -= f * a(r, j);
                a(i, j) = v.is_zero() ? v : v / prev;
            }
            a(i, c) = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    // Normalize pivots and clear above them.
    Matrix out(r, nc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(i, j);
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = pivots[i];
        const Rational inv = Rational(1) / out(i, pc);
        for (std::size_t j = pc; j < nc; ++j)
            if (!out(i, j).is_zero()) out(i, j) *= inv;
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = out(k, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < nc; ++j)
                if (!out(i, j).is_zero()) out(k, j) -= f * out(i, j);
        }
    }
    return {std::move(out), std::move(pivots)};
}

RankKernel rref_rank_kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t nc = m.cols();
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < rr.rref.rows(); ++i) rows.push_back(rr.rref.sparse_row(i));
    std::vector<char> is_pivot(nc, 0);
    for (auto p : rr.pivots) is_pivot[p] = 1;
    std::vector<SparseVector> kern;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseEntry> ent;
        ent.push_back({static_cast<std::uint32_t>(f), Rational(1)});
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            const Rational& x = rr.rref(i, f);
            if (!x.is_zero()) ent.push_back({static_cast<std::uint32_t>(rr.pivots[i]), -x});
        }
        kern.push_back(SparseVector::from_pairs(std::move(ent)));
    }
    RankKernel res;
    res.rank = rr.pivots.size();
    res.rowspace = Subspace::from_rref(nc, std::move(rows));
    res.kernel = Subspace::span(nc, kern);
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace kernel_of_columns(const std::vector<SparseVector>& columns, std::size_t rows) {
    Echelon e(rows, true);
    std::vector<SparseVector> rel;
    for (const auto& c : columns)
        if (!e.insert(c)) rel.push_back(e.relation());
    return Subspace::span(columns.size(), rel);
}

std::optional<SparseVector> solve_columns(const std::vector<SparseVector>& columns, std::size_t rows, const SparseVector& rhs) {
    Echelon e(rows, true);
    for (const auto& c : columns) e.insert(c);
    auto comb = e.combination(rhs);
    if (!comb) return std::nullopt;
    // Express through the independent columns only (free variables zero).
    return comb;
}

Subspace kernel(const SparseMatrix& m) { return kernel_of_columns(m.columns(), m.rows()); }

Subspace image(const SparseMatrix& m) { return Subspace::span(m.rows(), m.columns()); }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rows(A) != len(b)");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    Vector x(a.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == a.cols()) return std::nullopt;
        x[rr.pivots[i]] = rr.rref(i, a.cols());
    }
    return x;
}

std::vector<Rational> char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
    const std::size_t n = m.rows();
    Matrix h = m;
    // Reduce to upper Hessenberg form by similarity transformations.
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t piv = col + 1;
        while (piv < n && h(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            h.swap_rows(piv, col + 1);
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
        }
        const Rational inv = Rational(1) / h(col + 1, col);
        for (std::size_t j = col + 2; j < n; ++j) {
            if (h(j, col).is_zero()) continue;
            const Rational u = h(j, col) * inv;
            for (std::size_t k = 0; k < n; ++k)
                if (!h(col + 1, k).is_zero()) h(j, k) -= u * h(col + 1, k);
            for (std::size_t k = 0; k < n; ++k)
                if (!h(k, j).is_zero()) h(k, col + 1) += u * h(k, j);
        }
    }
    // Characteristic polynomials of leading principal blocks (ascending coefficients).
    std::vector<std::vector<Rational>> p(n + 1);
    p[0] = {Rational(1)};
    for (std::size_t mm = 1; mm <= n; ++mm) {
        const std::size_t i0 = mm - 1;
        std::vector<Rational> cur(mm + 1);
        for (std::size_t k = 0; k < p[mm - 1].size(); ++k) {
            cur[k + 1] += p[mm - 1][k];
            cur[k] -= h(i0, i0) * p[mm - 1][k];
        }
        Rational t = 1;
        for (std::size_t i = mm - 1; i-- > 0;) {
            t *= h(i + 1, i);
            if (t.is_zero()) break;
            const Rational f = h(i, i0) * t;
            if (f.is_zero()) continue;
            for (std::size_t k = 0; k < p[i].size(); ++k) cur[k] -= f * p[i][k];
        }
        p[mm] = std::move(cur);
    }
    return p[n];
}

MeetJoin subspace_meet_join(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("subspace_meet_join: ambient dimension mismatch");
    std::vector<SparseVector> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    MeetJoin r;
    r.sum = Subspace::span(u.ambient(), all);
    // x in U and V: sum a_i u_i - sum b_j v_j = 0.
    std::vector<SparseVector> cols = u.basis();
    for (const auto& b : v.basis()) cols.push_back(-b);
    Subspace rel = kernel_of_columns(cols, u.ambient());
    std::vector<SparseVector> meet;
    for (const auto& k : rel.basis()) {
        Accumulator acc(u.ambient());
        for (const auto& e : k.entries())
            if (e.index < u.dim()) acc.add_scaled(u.basis(e.index), e.value);
        meet.push_back(acc.take());
    }
    r.intersection = Subspace::span(u.ambient(), meet);
    return r;
}

Matrix exp_nilpotent(const Matrix& n) {
    if (!n.is_square()) throw std::invalid_argument("exp_nilpotent: matrix must be square");
    const std::size_t d = n.rows();
    Matrix result = Matrix::identity(d);
    Matrix term = Matrix::identity(d);
    for (std::size_t k = 1; k <= d + 1; ++k) {
        term = (term * n).scaled(Rational(1) / Rational(static_cast<long long>(k)));
        if (term.is_zero()) return result;
        if (k == d + 1) break;
        result = result + term;
    }
    throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

SparseMatrix exp_nilpotent(const SparseMatrix& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("exp_nilpotent: matrix must be square");
    const std::size_t d = n.rows();
    SparseMatrix result = SparseMatrix::identity(d);
    SparseMatrix term = SparseMatrix::identity(d);
    for (std::size_t k = 1; k <= d + 1; ++k) {
        term = (term * n).scaled(Rational(1) / Rational(static_cast<long long>(k)));
        if (term.is_zero()) return result;
        if (k == d + 1) break;
        result = result + term;
    }
    throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.rref(i, n + j);
    return inv;
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    auto cp = char_poly(m);
    return (m.rows() % 2 == 0) ? cp[0] : -cp[0];
}

std::string poly_str(const std::vector<Rational>& c) {
    std::string s;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        Rational a = c[k];
        bool neg = a.sign() < 0;
        if (neg) a = -a;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        bool unit = a.is_one();
        if (k == 0 || !unit) s += a.short_str();
        if (k > 0) s += (unit ? "" : "*") + std::string("x") + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- eigenspaces

namespace {

Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational v;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

}  // namespace

std::vector<std::pair<Rational, Subspace>> integer_eigenspaces(const std::function<SparseVector(const SparseVector&)>& op, const Subspace& v) {
    const std::size_t k = v.dim();
    const std::size_t n = v.ambient();
    std::vector<SparseVector> cols(k);
    bool diagonal = true;
    for (std::size_t j = 0; j < k; ++j) {
        auto c = v.coordinates(op(v.basis(j)));
        if (!c) throw std::invalid_argument("integer_eigenspaces: subspace is not invariant");
        cols[j] = SparseVector::from_dense(*c);
        if (cols[j].nnz() > 1 || (cols[j].nnz() == 1 && cols[j].lead() != j)) diagonal = false;
    }
    std::vector<std::pair<Rational, Subspace>> out;
    if (diagonal) {
        std::map<Rational, std::vector<SparseVector>> groups;
        for (std::size_t j = 0; j < k; ++j) groups[cols[j].get(j)].push_back(v.basis(j));
        for (auto& [lam, vecs] : groups) {
            if (!lam.is_integer()) throw std::domain_error("integer_eigenspaces: non-integral eigenvalue");
            out.emplace_back(lam, Subspace::span(n, vecs));
        }
        return out;
    }
    Matrix a(k, k);
    Rational bound;
    for (std::size_t j = 0; j < k; ++j) {
        Rational s;
        for (const auto& e : cols[j].entries()) {
            a(e.index, j) = e.value;
            s += abs(e.value);
        }
        if (s > bound) bound = s;
    }
    const long long b = static_cast<long long>(bound.to_double()) + 1;
    std::vector<Rational> poly = char_poly(a);
    std::size_t total = 0;
    for (long long lam = -b; lam <= b && total < k; ++lam) {
        Rational x(lam);
        if (!horner(poly, x).is_zero()) continue;
        std::vector<SparseVector> shifted = cols;
        for (std::size_t j = 0; j < k; ++j) shifted[j].axpy(-x, SparseVector::unit(j));
        Subspace ker = kernel_of_columns(shifted, k);
        std::vector<SparseVector> vecs;
        for (const auto& c : ker.basis()) vecs.push_back(v.element(c.to_dense(k)));
        total += vecs.size();
        out.emplace_back(x, Subspace::span(n, vecs));
    }
    if (total != k) throw std::domain_error("integer_eigenspaces: operator is not diagonalizable with integer spectrum");
    return out;
}

}  // namespace tkk
