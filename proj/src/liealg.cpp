#include "tkk/liealg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "tkk/parallel.hpp"

namespace tkk {

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<SparseVector> table, std::vector<std::string> labels,
                       std::optional<CartanFrame> frame)
    : dim_(dim), table_(std::move(table)), labels_(std::move(labels)), frame_(std::move(frame)) {
    if (table_.size() != dim_ * dim_) throw std::invalid_argument("LieAlgebra: table size must be dim^2");
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!table_[i * dim_ + i].is_zero()) throw std::invalid_argument("LieAlgebra: [b_i, b_i] must vanish");
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const auto& a = table_[i * dim_ + j];
            if (a.extent() > dim_) throw std::invalid_argument("LieAlgebra: bracket index out of range");
            if (table_[j * dim_ + i] != -a) throw std::invalid_argument("LieAlgebra: table is not antisymmetric");
        }
    }
    if (labels_.empty())
        for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    if (labels_.size() != dim_) throw std::invalid_argument("LieAlgebra: label count must equal dim");
}

LieAlgebra LieAlgebra::from_upper(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, SparseVector>>& brackets,
                                  std::vector<std::string> labels) {
    std::vector<SparseVector> table(dim * dim);
    for (const auto& [i, j, v] : brackets) {
        if (i >= j || j >= dim) throw std::invalid_argument("LieAlgebra::from_upper: need i < j < dim");
        table[i * dim + j] = v;
        table[j * dim + i] = -v;
    }
    return LieAlgebra(dim, std::move(table), std::move(labels));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, std::vector<SparseVector>(dim * dim)); }

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
    Accumulator acc(dim_);
    for (const auto& a : x.entries())
        for (const auto& b : y.entries()) {
            const auto& c = table_[a.index * dim_ + b.index];
            if (!c.is_zero()) acc.add_scaled(c, a.value * b.value);
        }
    return acc.take();
}

SparseMatrix LieAlgebra::ad(const SparseVector& x) const {
    SparseMatrix m(dim_, dim_);
    Accumulator acc(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        for (const auto& a : x.entries()) {
            const auto& c = table_[a.index * dim_ + j];
            if (!c.is_zero()) acc.add_scaled(c, a.value);
        }
        m.column(j) = acc.take();
    }
    return m;
}

SparseMatrix LieAlgebra::ad_basis(std::size_t i) const {
    SparseMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.column(j) = table_[i * dim_ + j];
    return m;
}

LieAlgebra LieAlgebra::with_frame(std::optional<CartanFrame> frame) const {
    return LieAlgebra(dim_, table_, labels_, std::move(frame));
}

std::size_t LieAlgebra::nnz() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) n += table_[i * dim_ + j].nnz();
    return n;
}

// ---------------------------------------------------------------- Subalgebra

SparseVector Subalgebra::include(const SparseVector& x) const {
    Accumulator acc(space.ambient());
    for (const auto& e : x.entries()) acc.add_scaled(space.basis(e.index), e.value);
    return acc.take();
}

SparseVector Subalgebra::restrict(const SparseVector& x) const {
    auto c = space.coordinates(x);
    if (!c) throw std::invalid_argument("Subalgebra::restrict: element is not in the subalgebra");
    return SparseVector::from_dense(*c);
}

namespace {

std::optional<CartanFrame> inherit_frame(const LieAlgebra& parent, const Subspace& space) {
    if (!parent.frame()) return std::nullopt;
    const CartanFrame& pf = *parent.frame();
    const std::size_t n = parent.dim();
    Subspace h = Subspace::span(n, pf.cartan);
    if (h.dim() != pf.cartan.size()) return std::nullopt;
    MeetJoin mj = subspace_meet_join(space, h);
    std::vector<std::size_t> inside;
    std::map<Vector, std::size_t> by_weight;
    for (std::size_t k = 0; k < pf.roots.size(); ++k) {
        by_weight[pf.roots[k].weight] = k;
        if (space.contains(pf.roots[k].vector)) inside.push_back(k);
    }
    if (mj.intersection.dim() + inside.size() != space.dim()) return std::nullopt;
    for (auto k : inside) {
        Vector neg = pf.roots[k].weight;
        for (auto& x : neg) x = -x;
        auto it = by_weight.find(neg);
        if (it == by_weight.end() || !space.contains(pf.roots[it->second].vector)) return std::nullopt;
    }
    // Coordinates of the new Cartan basis in terms of the parent Cartan basis.
    Echelon ech(n, true);
    for (const auto& c : pf.cartan) ech.insert(c);
    CartanFrame f;
    std::vector<Vector> coords;
    for (const auto& g : mj.intersection.basis()) {
        auto comb = ech.combination(g);
        if (!comb) return std::nullopt;
        coords.push_back(comb->to_dense(pf.cartan.size()));
        f.cartan.push_back(SparseVector::from_dense(*space.coordinates(g)));
    }
    for (auto k : inside) {
        FrameRoot r;
        for (const auto& a : coords) {
            Rational v;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (!a[i].is_zero()) v += a[i] * pf.roots[k].weight[i];
            r.weight.push_back(v);
        }
        r.vector = SparseVector::from_dense(*space.coordinates(pf.roots[k].vector));
        r.key = pf.roots[k].key;
        f.roots.push_back(std::move(r));
    }
    return f;
}

}  // namespace

Subalgebra make_subalgebra(const LieAlgebraPtr& parent, const Subspace& space) {
    if (space.ambient() != parent->dim()) throw std::invalid_argument("make_subalgebra: ambient dimension mismatch");
    const std::size_t d = space.dim();
    std::vector<SparseVector> table(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            SparseVector br = parent->bracket(space.basis(a), space.basis(b));
            auto c = space.coordinates(br);
            if (!c) throw std::invalid_argument("make_subalgebra: subspace is not closed under the bracket");
            table[a * d + b] = SparseVector::from_dense(*c);
            table[b * d + a] = -table[a * d + b];
        }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a) {
        const auto& v = space.basis(a);
        labels.push_back(v.nnz() == 1 && v.lead_value().is_one() ? parent->labels()[v.lead()] : "s" + std::to_string(a));
    }
    Subalgebra s;
    s.parent = parent;
    s.space = space;
    s.induced = std::make_shared<const LieAlgebra>(d, std::move(table), std::move(labels), inherit_frame(*parent, space));
    s.inclusion = Matrix(parent->dim(), d);
    for (std::size_t a = 0; a < d; ++a)
        for (const auto& e : space.basis(a).entries()) s.inclusion(e.index, a) = e.value;
    return s;
}

Subalgebra nest_subalgebra(const Subalgebra& outer, const Subalgebra& inner) {
    if (inner.parent != outer.parent) throw std::invalid_argument("nest_subalgebra: different parents");
    std::vector<SparseVector> v;
    for (const auto& b : inner.space.basis()) v.push_back(outer.restrict(b));
    return make_subalgebra(outer.induced, Subspace::span(outer.dim(), v));
}

Subalgebra compose(const Subalgebra& outer, const Subalgebra& inner) {
    if (inner.parent != outer.induced) throw std::invalid_argument("compose: inner must live in outer's induced algebra");
    std::vector<SparseVector> v;
    for (const auto& b : inner.space.basis()) v.push_back(outer.include(b));
    return make_subalgebra(outer.parent, Subspace::span(outer.parent->dim(), v));
}

Subalgebra identity_subalgebra(const LieAlgebraPtr& l) { return make_subalgebra(l, Subspace::full(l->dim())); }

Subalgebra generate_subalgebra(const LieAlgebraPtr& parent, const std::vector<SparseVector>& gens) {
    Echelon e(parent->dim());
    std::vector<SparseVector> queue;
    for (const auto& g : gens)
        if (e.insert(g)) queue.push_back(g);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens) {
            SparseVector b = parent->bracket(g, queue[q]);
            if (!b.is_zero() && e.insert(b)) queue.push_back(std::move(b));
        }
    return make_subalgebra(parent, e.subspace());
}

bool is_sl2_triple(const LieAlgebra& l, const Sl2Triple& t) {
    return !t.e.is_zero() && l.bracket(t.e, t.f) == t.h && l.bracket(t.h, t.e) == t.e.scaled(2) &&
           l.bracket(t.h, t.f) == t.f.scaled(-2);
}

// ---------------------------------------------------------------- structural tests

namespace {

SparseVector jacobi_residual(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k, Accumulator& acc) {
    const std::size_t n = l.dim();
    auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
        for (const auto& e : l.bracket_basis(a, b).entries()) acc.add_scaled(l.bracket_basis(e.index, c), e.value);
    };
    (void)n;
    add(i, j, k);
    add(j, k, i);
    add(k, i, j);
    return acc.take();
}

}  // namespace

std::vector<std::size_t> jacobi_check(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<std::vector<std::size_t>> found(n);
    parallel_for(n, [&](std::size_t i, std::size_t) {
        Accumulator acc(n);
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!jacobi_residual(l, i, j, k, acc).is_zero()) {
                    found[i] = {i, j, k};
                    return;
                }
    });
    for (auto& f : found)
        if (!f.empty()) return f;
    return {};
}

std::vector<std::size_t> jacobi_check_sampled(const LieAlgebra& l, std::size_t samples, std::uint64_t seed) {
    const std::size_t n = l.dim();
    if (n < 3) return jacobi_check(l);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    Accumulator acc(n);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t t[3] = {d(rng), d(rng), d(rng)};
        if (!jacobi_residual(l, t[0], t[1], t[2], acc).is_zero()) return {t[0], t[1], t[2]};
    }
    return {};
}

std::size_t sparse_rank(const std::vector<SparseVector>& rows, std::size_t ambient) {
    Echelon e(ambient);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

Matrix killing_gram(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    // rev[l * n + k] lists (j, c_{j l}^k); kappa(i, j) = sum_{k, l} c_{i k}^l c_{j l}^k.
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rev(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m)
            for (const auto& e : l.bracket_basis(j, m).entries()) rev[m * n + e.index].push_back({static_cast<std::uint32_t>(j), e.value});
    Matrix g(n, n);
    std::vector<Vector> rows(n);
    parallel_for(n, [&](std::size_t i, std::size_t) {
        Vector row(n);
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& e : l.bracket_basis(i, k).entries())
                for (const auto& [j, v] : rev[e.index * n + k]) row[j] += e.value * v;
        rows[i] = std::move(row);
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rows[i][j];
    return g;
}

Rational killing(const LieAlgebra& l, const SparseVector& x, const SparseVector& y) {
    SparseMatrix ax = l.ad(x);
    if (x == y) return ax.trace_product(ax);
    return ax.trace_product(l.ad(y));
}

Subspace center(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<SparseVector> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVector c;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : l.bracket_basis(i, j).entries()) c.push_back(static_cast<std::uint32_t>(j * n + e.index), e.value);
        cols[i] = std::move(c);
    }
    return kernel_of_columns(cols, n * n);
}

Subalgebra centralizer(const LieAlgebraPtr& l, const std::vector<SparseVector>& elements) {
    const std::size_t n = l->dim();
    std::vector<SparseVector> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVector c;
        SparseVector bi = SparseVector::unit(i);
        for (std::size_t m = 0; m < elements.size(); ++m) {
            const SparseVector br = l->bracket(bi, elements[m]);
            for (const auto& e : br.entries())
                c.push_back(static_cast<std::uint32_t>(m * n + e.index), e.value);
        }
        cols[i] = std::move(c);
    }
    return make_subalgebra(l, kernel_of_columns(cols, std::max<std::size_t>(1, n * elements.size())));
}

Subalgebra derived_subalgebra(const LieAlgebraPtr& l) {
    const std::size_t n = l->dim();
    Echelon e(n);
    for (std::size_t i = 0; i < n && e.rank() < n; ++i)
        for (std::size_t j = i + 1; j < n && e.rank() < n; ++j) e.insert(l->bracket_basis(i, j));
    return make_subalgebra(l, e.subspace());
}

StructuralReport structural_tests(const LieAlgebra& l, std::size_t samples, std::uint64_t seed) {
    StructuralReport r;
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n && r.antisym; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (l.bracket_basis(i, j) != -l.bracket_basis(j, i)) {
                r.antisym = false;
                break;
            }
    r.jacobi_witness = samples ? jacobi_check_sampled(l, samples, seed) : jacobi_check(l);
    r.jacobi = r.jacobi_witness.empty();
    Matrix g = killing_gram(l);
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(g.sparse_row(i));
    r.killing_rank = sparse_rank(rows, n);
    r.semisimple = r.killing_rank == n;
    Echelon e(n);
    for (std::size_t i = 0; i < n && e.rank() < n; ++i)
        for (std::size_t j = i + 1; j < n && e.rank() < n; ++j) e.insert(l.bracket_basis(i, j));
    r.perfect = e.rank() == n;
    r.center_dim = center(l).dim();
    return r;
}

LieAlgebra operator_algebra(const Subspace& ops, std::size_t n) {
    const std::size_t d = ops.dim();
    std::vector<SparseMatrix> mats;
    for (const auto& b : ops.basis()) mats.push_back(SparseMatrix::unflatten(b, n, n));
    std::vector<SparseVector> table(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            SparseMatrix c = mats[a] * mats[b] - mats[b] * mats[a];
            auto co = ops.coordinates(c.flatten());
            if (!co) throw std::invalid_argument("operator_algebra: span is not closed under commutators");
            table[a * d + b] = SparseVector::from_dense(*co);
            table[b * d + a] = -table[a * d + b];
        }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a) labels.push_back("d" + std::to_string(a));
    return LieAlgebra(d, std::move(table), std::move(labels));
}

}  // namespace tkk
