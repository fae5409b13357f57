#include "tkk/fts.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>

#include "tkk/parallel.hpp"

namespace tkk {

// ---------------------------------------------------------------- TernaryAlgebra

TernaryAlgebra::TernaryAlgebra(std::size_t dim, std::vector<SparseVector> product, Matrix gram, std::vector<std::string> labels)
    : dim_(dim), product_(std::move(product)), gram_(std::move(gram)), labels_(std::move(labels)) {
    if (product_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("TernaryAlgebra: product tensor must have dim^3 entries");
    if (gram_.rows() != dim_ || gram_.cols() != dim_) throw std::invalid_argument("TernaryAlgebra: gram must be dim x dim");
    for (const auto& v : product_)
        if (v.extent() > dim_) throw std::invalid_argument("TernaryAlgebra: product index out of range");
    if (labels_.empty())
        for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("a" + std::to_string(i));
    if (labels_.size() != dim_) throw std::invalid_argument("TernaryAlgebra: label count must equal dim");
}

SparseVector TernaryAlgebra::product(const SparseVector& x, const SparseVector& y, const SparseVector& z) const {
    Accumulator acc(dim_);
    for (const auto& a : x.entries())
        for (const auto& b : y.entries()) {
            const Rational ab = a.value * b.value;
            for (const auto& c : z.entries()) {
                const auto& t = product_basis(a.index, b.index, c.index);
                if (!t.is_zero()) acc.add_scaled(t, ab * c.value);
            }
        }
    return acc.take();
}

Rational TernaryAlgebra::form(const SparseVector& x, const SparseVector& y) const {
    Rational s;
    for (const auto& a : x.entries())
        for (const auto& b : y.entries()) s += a.value * b.value * gram_(a.index, b.index);
    return s;
}

std::size_t TernaryAlgebra::nnz() const {
    std::size_t s = 0;
    for (const auto& v : product_) s += v.nnz();
    return s;
}

SparseMatrix TernaryAlgebra::pair_operator(const SparseVector& x, const SparseVector& y) const {
    SparseMatrix m(dim_, dim_);
    Accumulator acc(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        for (const auto& a : x.entries())
            for (const auto& b : y.entries()) {
                const auto& t = product_basis(a.index, b.index, k);
                if (!t.is_zero()) acc.add_scaled(t, a.value * b.value);
            }
        m.column(k) = acc.take();
    }
    return m;
}

Matrix standard_symplectic(std::size_t dim) {
    if (dim % 2 != 0) throw std::invalid_argument("standard_symplectic: dimension must be even");
    Matrix s(dim, dim);
    const std::size_t m = dim / 2;
    for (std::size_t i = 0; i < m; ++i) {
        s(i, m + i) = 1;
        s(m + i, i) = -1;
    }
    return s;
}

TernaryAlgebra form_product(const Matrix& form, const Rational& a, const Rational& b, const Rational& c) {
    if (!form.is_square()) throw std::invalid_argument("form_product: form must be square");
    const std::size_t n = form.rows();
    std::vector<SparseVector> prod(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                std::vector<SparseEntry> e;
                if (!form(x, y).is_zero()) e.push_back({static_cast<std::uint32_t>(z), a * form(x, y)});
                if (!form(y, z).is_zero()) e.push_back({static_cast<std::uint32_t>(x), b * form(y, z)});
                if (!form(z, x).is_zero()) e.push_back({static_cast<std::uint32_t>(y), c * form(z, x)});
                prod[(x * n + y) * n + z] = SparseVector::from_pairs(std::move(e));
            }
    return TernaryAlgebra(n, std::move(prod), form);
}

TernaryAlgebra trivial_fts(const Matrix& form) {
    if (!form.is_square() || !form.is_antisymmetric()) throw std::invalid_argument("trivial_fts: form must be antisymmetric");
    const Rational half(1, 2);
    return form_product(form, half, half, -half);
}

std::vector<FormConvention> passing_form_conventions(const Matrix& form) {
    std::vector<Rational> grid;
    for (int k = -2; k <= 2; ++k) grid.push_back(Rational(k, 2));
    std::vector<FormConvention> out;
    for (const auto& a : grid)
        for (const auto& b : grid)
            for (const auto& c : grid)
                if (check_bsta_axioms(form_product(form, a, b, c)).all()) out.push_back({a, b, c});
    return out;
}

TernaryAlgebra direct_sum(const TernaryAlgebra& a, const TernaryAlgebra& b) {
    const std::size_t n = a.dim(), m = b.dim(), d = n + m;
    std::vector<SparseVector> prod(d * d * d);
    auto shift = [&](const SparseVector& v) {
        SparseVector out;
        for (const auto& e : v.entries()) out.push_back(static_cast<std::uint32_t>(e.index + n), e.value);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) prod[(i * d + j) * d + k] = a.product_basis(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) prod[((n + i) * d + n + j) * d + n + k] = shift(b.product_basis(i, j, k));
    Matrix g(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
    std::vector<std::string> labels = a.labels();
    for (const auto& s : b.labels()) labels.push_back(s + "'");
    return TernaryAlgebra(d, std::move(prod), std::move(g), std::move(labels));
}

std::vector<SparseVector> triple_products(const TernaryAlgebra& a, const std::vector<SparseVector>& u) {
    const std::size_t n = a.dim(), m = u.size();
    std::vector<SparseVector> out(m * m * m);
    parallel_for(m, [&](std::size_t p, std::size_t) {
        Accumulator acc(n);
        // Contract the first slot with u_p, then the second with u_q, then the third with u_r.
        std::vector<SparseVector> first(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& e : u[p].entries()) {
                    const auto& t = a.product_basis(e.index, j, k);
                    if (!t.is_zero()) acc.add_scaled(t, e.value);
                }
                first[j * n + k] = acc.take();
            }
        std::vector<SparseVector> second(n);
        for (std::size_t q = 0; q < m; ++q) {
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& e : u[q].entries()) {
                    const auto& t = first[e.index * n + k];
                    if (!t.is_zero()) acc.add_scaled(t, e.value);
                }
                second[k] = acc.take();
            }
            for (std::size_t r = 0; r < m; ++r) {
                for (const auto& e : u[r].entries())
                    if (!second[e.index].is_zero()) acc.add_scaled(second[e.index], e.value);
                out[(p * m + q) * m + r] = acc.take();
            }
        }
    });
    return out;
}

TernaryAlgebra restrict_to(const TernaryAlgebra& a, const Subspace& u) {
    if (u.ambient() != a.dim()) throw std::invalid_argument("restrict_to: ambient dimension mismatch");
    const std::size_t m = u.dim();
    std::vector<SparseVector> prods = triple_products(a, u.basis());
    for (auto& v : prods) {
        auto c = u.coordinates(v);
        if (!c) throw std::invalid_argument("restrict_to: subspace is not closed under the product");
        v = SparseVector::from_dense(*c);
    }
    Matrix g(m, m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) g(p, q) = a.form(u.basis(p), u.basis(q));
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < m; ++p) {
        const auto& b = u.basis(p);
        labels.push_back(b.nnz() == 1 && b.lead_value().is_one() ? a.labels()[b.lead()] : "u" + std::to_string(p));
    }
    return TernaryAlgebra(m, std::move(prods), std::move(g), std::move(labels));
}

// ---------------------------------------------------------------- axioms

namespace {

void add_term(Accumulator& acc, const SparseVector& coeffs, const Rational& scale,
              const std::function<const SparseVector&(std::uint32_t)>& image) {
    for (const auto& e : coeffs.entries()) {
        const auto& t = image(e.index);
        if (!t.is_zero()) acc.add_scaled(t, e.value * scale);
    }
}

// (xyz)vw - (xvw)yz - x(yvw)z - xy(zwv) on basis elements.
SparseVector axiom3_residual(const TernaryAlgebra& a, std::size_t x, std::size_t y, std::size_t z, std::size_t v,
                             std::size_t w, Accumulator& acc) {
    const Rational one(1), minus(-1);
    add_term(acc, a.product_basis(x, y, z), one, [&](std::uint32_t i) -> const SparseVector& { return a.product_basis(i, v, w); });
    add_term(acc, a.product_basis(x, v, w), minus, [&](std::uint32_t i) -> const SparseVector& { return a.product_basis(i, y, z); });
    add_term(acc, a.product_basis(y, v, w), minus, [&](std::uint32_t i) -> const SparseVector& { return a.product_basis(x, i, z); });
    add_term(acc, a.product_basis(z, w, v), minus, [&](std::uint32_t i) -> const SparseVector& { return a.product_basis(x, y, i); });
    return acc.take();
}

// axiom 1: xyz - yxz - <x,y>z; axiom 2: xyz - xzy - <y,z>x.
SparseVector axiom12_residual(const TernaryAlgebra& a, int which, std::size_t x, std::size_t y, std::size_t z) {
    const auto& g = a.gram();
    if (which == 1) {
        SparseVector r = a.product_basis(x, y, z) - a.product_basis(y, x, z);
        r.axpy(-g(x, y), SparseVector::unit(z));
        return r;
    }
    SparseVector r = a.product_basis(x, y, z) - a.product_basis(x, z, y);
    r.axpy(-g(y, z), SparseVector::unit(x));
    return r;
}

AxiomResult check_axiom12(const TernaryAlgebra& a, int which) {
    const std::size_t n = a.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                SparseVector r = axiom12_residual(a, which, x, y, z);
                if (!r.is_zero()) return {false, {x, y, z}, std::move(r)};
            }
    return {};
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

AxiomReport check_bsta_axioms(const TernaryAlgebra& a, const AxiomOptions& opts) {
    AxiomReport rep;
    rep.axiom[0] = check_axiom12(a, 1);
    rep.axiom[1] = check_axiom12(a, 2);
    const std::size_t n = a.dim();
    if (n == 0) return rep;

    if (n <= opts.exhaustive_limit) {
        rep.axiom3_exhaustive = true;
        rep.axiom3_tuples = n * n * n * n * n;
        // First failure per leading index, then the smallest leading index wins.
        std::vector<std::vector<std::size_t>> first(n);
        std::vector<SparseVector> residual(n);
        parallel_for(n, [&](std::size_t x, std::size_t) {
            Accumulator acc(n);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (std::size_t v = 0; v < n; ++v)
                        for (std::size_t w = 0; w < n; ++w) {
                            SparseVector r = axiom3_residual(a, x, y, z, v, w, acc);
                            if (!r.is_zero()) {
                                first[x] = {x, y, z, v, w};
                                residual[x] = std::move(r);
                                return;
                            }
                        }
        });
        for (std::size_t x = 0; x < n; ++x)
            if (!first[x].empty()) {
                rep.axiom[2] = {false, first[x], residual[x]};
                break;
            }
        return rep;
    }

    rep.axiom3_exhaustive = false;
    rep.axiom3_tuples = opts.samples;
    std::mt19937_64 rng(opts.seed);
    std::vector<std::array<std::size_t, 5>> tuples(opts.samples);
    for (auto& t : tuples)
        for (auto& i : t) i = static_cast<std::size_t>(rng() % n);
    const std::size_t chunks = std::min<std::size_t>(opts.samples, 256);
    std::vector<std::size_t> first(chunks, kNone);
    std::vector<SparseVector> residual(chunks);
    parallel_for(chunks, [&](std::size_t c, std::size_t) {
        Accumulator acc(n);
        const std::size_t lo = c * opts.samples / chunks, hi = (c + 1) * opts.samples / chunks;
        for (std::size_t s = lo; s < hi; ++s) {
            const auto& t = tuples[s];
            SparseVector r = axiom3_residual(a, t[0], t[1], t[2], t[3], t[4], acc);
            if (!r.is_zero()) {
                first[c] = s;
                residual[c] = std::move(r);
                return;
            }
        }
    });
    for (std::size_t c = 0; c < chunks; ++c)
        if (first[c] != kNone) {
            const auto& t = tuples[first[c]];
            rep.axiom[2] = {false, {t[0], t[1], t[2], t[3], t[4]}, residual[c]};
            break;
        }
    return rep;
}

// ---------------------------------------------------------------- gradings

std::size_t Grading::dim(int i) const {
    auto it = components.find(i);
    return it == components.end() ? 0 : it->second.dim();
}

std::vector<std::size_t> Grading::five_dims() const { return {dim(-2), dim(-1), dim(0), dim(1), dim(2)}; }

bool Grading::is_extraspecial() const {
    for (const auto& [i, s] : components)
        if (i < -2 || i > 2) return false;
    return dim(2) == 1 && dim(-2) == 1;
}

Grading grading_by(const LieAlgebra& l, const SparseVector& h) {
    Grading g;
    g.element = h;
    for (auto& [ev, space] : ad_eigenspaces(l, h, Subspace::full(l.dim()))) {
        if (!ev.is_integer()) throw std::domain_error("grading_by: ad h has a non-integral eigenvalue");
        g.components.emplace(static_cast<int>(ev.to_int()), std::move(space));
    }
    for (const auto& [i, si] : g.components)
        for (const auto& [j, sj] : g.components) {
            if (j < i) continue;
            auto target = g.components.find(i + j);
            for (const auto& x : si.basis())
                for (const auto& y : sj.basis()) {
                    const SparseVector br = l.bracket(x, y);
                    if (br.is_zero()) continue;
                    if (target == g.components.end() || !target->second.contains(br))
                        throw std::logic_error("grading_by: grading law fails");
                }
        }
    return g;
}

Sl2Triple extraspecial_sl2(const LieAlgebra& l) {
    FrameAnalysis fa = decompose(l);
    if (fa.components.size() != 1 || fa.center.dim() != 0)
        throw std::invalid_argument("extraspecial_sl2: algebra is not simple");
    const auto& comp = fa.components[0];
    Sl2Triple t;
    t.e = fa.frame.roots[comp.highest].vector;
    t.h = comp.long_coroot;
    t.f = fa.frame.roots[fa.negative_of[comp.highest]].vector;
    const SparseVector ef = l.bracket(t.e, t.f);
    const Rational c = ef.get(t.h.lead()) / t.h.lead_value();
    t.f = t.f.scaled(Rational(1) / c);
    if (!is_sl2_triple(l, t)) throw std::logic_error("extraspecial_sl2: failed to build the highest root triple");
    return t;
}

FtsExtraction extract(const LieAlgebra& l, const Sl2Triple& t) {
    if (!is_sl2_triple(l, t)) throw std::invalid_argument("extract: not an sl2 triple");
    FtsExtraction ex;
    ex.triple = t;
    ex.grading = grading_by(l, t.h);
    if (!ex.grading.is_extraspecial()) throw std::invalid_argument("extract: grading is not extraspecial");
    const Subspace& l1 = ex.grading.components.at(1);
    ex.l1 = l1.basis();
    const std::size_t n = l1.dim();

    std::vector<SparseVector> prod(n * n * n);
    Matrix gram(n, n);
    std::vector<std::string> labels;
    for (const auto& x : ex.l1)
        labels.push_back(x.nnz() == 1 && x.lead_value().is_one() ? l.labels()[x.lead()] : "u" + std::to_string(labels.size()));

    const std::uint32_t e_lead = t.e.lead();
    parallel_for(n, [&](std::size_t i, std::size_t) {
        const SparseVector fx = l.bracket(t.f, ex.l1[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVector xy = l.bracket(ex.l1[i], ex.l1[j]);
            const Rational c = xy.get(e_lead) / t.e.lead_value();
            if (xy != t.e.scaled(c)) throw std::logic_error("extract: [L1, L1] is not contained in L2");
            gram(i, j) = c;
            const SparseVector fxy = l.bracket(fx, ex.l1[j]);
            for (std::size_t k = 0; k < n; ++k) {
                const SparseVector p = l.bracket(fxy, ex.l1[k]);
                auto co = l1.coordinates(p);
                if (!co) throw std::logic_error("extract: product leaves L1");
                prod[(k * n + j) * n + i] = SparseVector::from_dense(*co);
            }
        }
    });
    ex.fts = TernaryAlgebra(n, std::move(prod), std::move(gram), std::move(labels));
    return ex;
}

TernaryAlgebra extract_fts(const LieAlgebra& l, const Sl2Triple& t) { return extract(l, t).fts; }

// ---------------------------------------------------------------- Lie triple systems

SparseMatrix LieTripleSystem::inner_map(std::size_t a, std::size_t b) const {
    SparseMatrix m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) m.column(c) = bracket_basis(a, b, c);
    return m;
}

LieTripleSystem lts_from_fts(const TernaryAlgebra& a) {
    const std::size_t n = a.dim(), d = 2 * n;
    LieTripleSystem m;
    m.dim = d;
    m.triple.resize(d * d * d);
    // A term of the displayed product: sign * (s0 s1 s2) where slot k contributes its
    // x part (side 0) or y part (side 1); the result lands on side `out`.
    struct Term {
        int sign;
        int slot[3];
        int side[3];
        int out;
    };
    static const Term terms[] = {
        {+1, {0, 1, 2}, {0, 0, 1}, 0}, {-1, {0, 2, 1}, {0, 0, 1}, 0}, {+1, {2, 1, 0}, {0, 0, 1}, 0},
        {-1, {1, 2, 0}, {0, 0, 1}, 0}, {-1, {0, 1, 2}, {1, 1, 0}, 1}, {+1, {0, 2, 1}, {1, 1, 0}, 1},
        {-1, {2, 1, 0}, {1, 1, 0}, 1}, {+1, {1, 2, 0}, {1, 1, 0}, 1},
    };
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (std::size_t r = 0; r < d; ++r) {
                // [p, q, r] = P(r, p, q)
                const std::size_t args[3] = {r, p, q};
                SparseVector acc;
                for (const auto& t : terms) {
                    std::size_t idx[3];
                    bool match = true;
                    for (int k = 0; k < 3 && match; ++k) {
                        const std::size_t b = args[t.slot[k]];
                        match = static_cast<int>(b / n) == t.side[k];
                        idx[k] = b % n;
                    }
                    if (!match) continue;
                    const auto& v = a.product_basis(idx[0], idx[1], idx[2]);
                    for (const auto& e : v.entries())
                        acc = acc + SparseVector::unit(e.index + t.out * n, e.value * t.sign);
                }
                m.triple[(p * d + q) * d + r] = std::move(acc);
            }
    return m;
}

namespace {

// D[u,v,w] - [Du,v,w] - [u,Dv,w] - [u,v,Dw] for an operator D.
SparseVector derivation_residual(const LieTripleSystem& m, const SparseMatrix& d, std::size_t u, std::size_t v, std::size_t w,
                                 Accumulator& acc) {
    acc.add(d.apply(m.bracket_basis(u, v, w)));
    for (const auto& e : d.column(u).entries()) acc.add_scaled(m.bracket_basis(e.index, v, w), -e.value);
    for (const auto& e : d.column(v).entries()) acc.add_scaled(m.bracket_basis(u, e.index, w), -e.value);
    for (const auto& e : d.column(w).entries()) acc.add_scaled(m.bracket_basis(u, v, e.index), -e.value);
    return acc.take();
}

}  // namespace

LtsReport check_lts(const LieTripleSystem& m) {
    LtsReport rep;
    const std::size_t d = m.dim;
    for (std::size_t a = 0; a < d && rep.antisym; ++a)
        for (std::size_t b = 0; b < d && rep.antisym; ++b)
            for (std::size_t c = 0; c < d; ++c)
                if (m.bracket_basis(a, b, c) != -m.bracket_basis(b, a, c)) {
                    rep.antisym = false;
                    rep.witness = {a, b, c};
                    break;
                }
    for (std::size_t a = 0; a < d && rep.cyclic; ++a)
        for (std::size_t b = 0; b < d && rep.cyclic; ++b)
            for (std::size_t c = 0; c < d; ++c)
                if (!(m.bracket_basis(a, b, c) + m.bracket_basis(b, c, a) + m.bracket_basis(c, a, b)).is_zero()) {
                    rep.cyclic = false;
                    if (rep.witness.empty()) rep.witness = {a, b, c};
                    break;
                }
    // The identity is linear in D, so a spanning set of inner maps suffices.
    Echelon span(d * d);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<SparseMatrix> maps;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            SparseMatrix im = m.inner_map(a, b);
            if (span.insert(im.flatten())) {
                pairs.emplace_back(a, b);
                maps.push_back(std::move(im));
            }
        }
    std::vector<std::vector<std::size_t>> first(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i, std::size_t) {
        Accumulator acc(d);
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < d; ++v)
                for (std::size_t w = 0; w < d; ++w)
                    if (!derivation_residual(m, maps[i], u, v, w, acc).is_zero()) {
                        first[i] = {pairs[i].first, pairs[i].second, u, v, w};
                        return;
                    }
    });
    for (const auto& f : first)
        if (!f.empty()) {
            rep.derivation = false;
            if (rep.witness.empty()) rep.witness = f;
            break;
        }
    return rep;
}

Subspace inder(const LieTripleSystem& m) {
    const std::size_t d = m.dim;
    Echelon e(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) e.insert(m.inner_map(a, b).flatten());
    return e.subspace();
}

Subspace ternary_inder(const TernaryAlgebra& a) {
    const std::size_t n = a.dim();
    Echelon e(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            SparseMatrix op(n, n);
            for (std::size_t w = 0; w < n; ++w) op.column(w) = a.product_basis(w, x, y) + a.product_basis(w, y, x);
            e.insert(op.flatten());
        }
    return e.subspace();
}

// ---------------------------------------------------------------- TKK

TkkAlgebra tkk_construct(const TernaryAlgebra& a) {
    const LieTripleSystem m = lts_from_fts(a);
    const std::size_t d = m.dim;
    const Subspace ops = inder(m);
    const std::size_t k = ops.dim(), dim = d + k;

    std::vector<SparseMatrix> mats;
    for (const auto& b : ops.basis()) mats.push_back(SparseMatrix::unflatten(b, d, d));
    auto op_coords = [&](const SparseVector& flat) {
        auto c = ops.coordinates(flat);
        if (!c) throw std::logic_error("tkk_construct: inner derivations are not closed");
        SparseVector out;
        for (std::size_t i = 0; i < k; ++i)
            if (!(*c)[i].is_zero()) out.push_back(static_cast<std::uint32_t>(d + i), (*c)[i]);
        return out;
    };

    std::vector<SparseVector> table(dim * dim);
    parallel_for(d, [&](std::size_t p, std::size_t) {
        for (std::size_t q = 0; q < d; ++q) table[p * dim + q] = op_coords(m.inner_map(p, q).flatten());
    });
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t p = 0; p < d; ++p) {
            table[(d + i) * dim + p] = mats[i].column(p);
            table[p * dim + d + i] = -mats[i].column(p);
        }
    parallel_for(k, [&](std::size_t i, std::size_t) {
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) table[(d + i) * dim + d + j] = op_coords((mats[i] * mats[j] - mats[j] * mats[i]).flatten());
    });

    std::vector<std::string> labels;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) labels.push_back("y" + std::to_string(i));
    for (std::size_t i = 0; i < k; ++i) labels.push_back("d" + std::to_string(i));

    TkkAlgebra t;
    t.algebra = std::make_shared<const LieAlgebra>(dim, std::move(table), std::move(labels));
    t.fts_dim = n;
    t.inder_dim = k;
    SparseMatrix sign(d, d);
    for (std::size_t i = 0; i < d; ++i) sign.column(i) = SparseVector::unit(i, i < n ? 1 : -1);
    const SparseVector flat = sign.flatten();
    if (n > 0 && ops.contains(flat)) t.grading = op_coords(flat);
    return t;
}

LieAlgebraPtr tkk(const TernaryAlgebra& a) { return tkk_construct(a).algebra; }

TypeLabel identify_tkk(const TkkAlgebra& t) {
    std::vector<SparseVector> seeds;
    if (t.grading) seeds.push_back(*t.grading);
    return identify_type(*t.algebra, seeds);
}

// ---------------------------------------------------------------- closure, ideals, simplicity

Subspace fts_subalgebra_closure(const TernaryAlgebra& a, const std::vector<SparseVector>& seeds) {
    Echelon e(a.dim());
    for (const auto& s : seeds) e.insert(s);
    while (true) {
        const std::size_t before = e.rank();
        const Subspace cur = e.subspace();
        for (const auto& p : triple_products(a, cur.basis())) e.insert(p);
        if (e.rank() == before) return e.subspace();
    }
}

namespace {

// Images of v under all single-slot products with basis elements in the other two slots.
std::vector<SparseVector> slot_images(const TernaryAlgebra& a, const SparseVector& v) {
    const std::size_t n = a.dim();
    std::vector<SparseVector> out;
    out.reserve(3 * n * n);
    Accumulator acc(n);
    for (int slot = 0; slot < 3; ++slot)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                for (const auto& e : v.entries()) {
                    const auto& t = slot == 0 ? a.product_basis(e.index, p, q)
                                    : slot == 1 ? a.product_basis(p, e.index, q)
                                                : a.product_basis(p, q, e.index);
                    if (!t.is_zero()) acc.add_scaled(t, e.value);
                }
                out.push_back(acc.take());
            }
    return out;
}

}  // namespace

Subspace ideal_closure(const TernaryAlgebra& a, const std::vector<SparseVector>& vectors) {
    Echelon e(a.dim());
    std::deque<SparseVector> queue;
    for (const auto& v : vectors)
        if (e.insert(v)) queue.push_back(v);
    while (!queue.empty() && e.rank() < a.dim()) {
        const SparseVector v = queue.front();
        queue.pop_front();
        for (auto& img : slot_images(a, v))
            if (e.insert(img)) queue.push_back(std::move(img));
    }
    return e.subspace();
}

SimplicityReport fts_is_simple(const TernaryAlgebra& a, std::uint64_t seed) {
    const std::size_t n = a.dim();
    SimplicityReport rep;
    rep.witness = Subspace(n);
    if (n == 0) {
        rep.exact = true;
        return rep;
    }
    if (check_axiom12(a, 1).pass) {
        std::vector<SparseVector> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(a.gram().sparse_row(i));
        Subspace j = kernel_of_columns(rows, n);
        if (j.dim() < n) {
            // Shrink the radical to the largest ideal it contains.
            while (!j.is_zero()) {
                std::vector<SparseVector> cols;
                for (const auto& b : j.basis()) {
                    std::vector<SparseEntry> entries;
                    const auto imgs = slot_images(a, b);
                    for (std::size_t s = 0; s < imgs.size(); ++s)
                        for (const auto& e : j.residual(imgs[s]).entries())
                            entries.push_back({static_cast<std::uint32_t>(s * n + e.index), e.value});
                    cols.push_back(SparseVector::from_pairs(std::move(entries)));
                }
                const Subspace keep = kernel_of_columns(cols, 3 * n * n * n);
                if (keep.dim() == j.dim()) break;
                std::vector<SparseVector> next;
                for (const auto& c : keep.basis()) {
                    SparseVector v;
                    for (const auto& e : c.entries()) v.axpy(e.value, j.basis(e.index));
                    next.push_back(std::move(v));
                }
                j = Subspace::span(n, next);
            }
            rep.exact = true;
            rep.simple = j.is_zero();
            if (!rep.simple) rep.witness = j;
            return rep;
        }
    }
    std::vector<SparseVector> candidates;
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(SparseVector::unit(i));
    std::mt19937_64 rng(seed);
    for (int r = 0; r < 8; ++r) {
        Vector v(n);
        for (auto& x : v) x = Rational(static_cast<long long>(rng() % 7) - 3);
        candidates.push_back(SparseVector::from_dense(v));
    }
    for (const auto& c : candidates) {
        if (c.is_zero()) continue;
        Subspace i = ideal_closure(a, {c});
        if (i.dim() < n) {
            rep.witness = i;
            return rep;
        }
    }
    rep.simple = true;
    return rep;
}

// ---------------------------------------------------------------- split gift

namespace {

// J^{-1} for the standard form on F^2.
const int kJinv[2][2] = {{0, -1}, {1, 0}};

// phi(a (x) x, b (x) y) = <x, y> a b^T J^{-1} as a 2x2 matrix, for basis vectors of F^2 (x) L1.
Matrix phi(const Matrix& gram, std::size_t n, std::size_t u, std::size_t v) {
    const std::size_t a = u / n, i = u % n, b = v / n, j = v % n;
    Matrix m(2, 2);
    for (std::size_t c = 0; c < 2; ++c) m(a, c) = gram(i, j) * kJinv[b][c];
    return m;
}

// pi(X) = sum_{a,b} (X G^{-T})_{ba} T_{ab} with T_{ab}(w) = w x_b x_a, so that pi(<., u> v) = (w -> w v u).
SparseMatrix pi(const TernaryAlgebra& fts, const SparseMatrix& x, const SparseMatrix& g_inv_t) {
    const std::size_t n = fts.dim();
    const SparseMatrix xg = x * g_inv_t;
    SparseMatrix out(n, n);
    Accumulator acc(n);
    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& e : xg.column(a).entries()) {
                const auto& t = fts.product_basis(w, e.index, a);
                if (!t.is_zero()) acc.add_scaled(t, e.value);
            }
        out.column(w) = acc.take();
    }
    return out;
}

}  // namespace

GiftReport split_gift_verify(const LieAlgebra& l, const Sl2Triple& t) {
    const FtsExtraction ex = extract(l, t);
    const std::size_t n = ex.fts.dim(), d = 2 * n;
    const Matrix& gram = ex.fts.gram();
    if (determinant(gram).is_zero()) throw std::invalid_argument("split_gift_verify: form on L1 is degenerate");
    const SparseMatrix g_inv_t = inverse(gram).transpose().to_sparse();

    // Basis of F^2 (x) L1 inside L: e1 (x) x -> x, e2 (x) x -> [f, x].
    std::vector<SparseVector> image;
    for (std::size_t i = 0; i < n; ++i) image.push_back(ex.l1[i]);
    for (std::size_t i = 0; i < n; ++i) image.push_back(l.bracket(t.f, ex.l1[i]));
    Echelon coords(l.dim(), true);
    for (const auto& v : image) coords.insert(v);

    GiftReport rep;
    rep.l1_dim = n;
    rep.module_dim = d;
    rep.pairs = d * d;
    std::vector<std::vector<std::size_t>> first(d);
    parallel_for(d, [&](std::size_t u, std::size_t) {
        for (std::size_t v = 0; v < d; ++v) {
            // phi(., u) v - phi(., v) u acts as Id (x) X on F^2 (x) L1.
            const std::size_t i = u % n, j = v % n, a1 = u / n, a2 = v / n;
            SparseMatrix x(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                SparseVector col;
                col.axpy(gram(k, i) * kJinv[a1][a2], SparseVector::unit(j));
                col.axpy(-gram(k, j) * kJinv[a2][a1], SparseVector::unit(i));
                x.column(k) = col;
            }
            const SparseMatrix p = pi(ex.fts, x, g_inv_t);
            const Matrix q = phi(gram, n, v, u) - phi(gram, n, u, v);
            const Rational half(1, 2);
            const SparseVector uv = l.bracket(image[u], image[v]);
            for (std::size_t w = 0; w < d; ++w) {
                const std::size_t b = w / n, k = w % n;
                SparseVector lhs;
                for (const auto& e : p.column(k).entries()) lhs.axpy(half * e.value, SparseVector::unit(b * n + e.index));
                for (std::size_t c = 0; c < 2; ++c)
                    if (!q(c, b).is_zero()) lhs.axpy(half * q(c, b), SparseVector::unit(c * n + k));
                const auto rhs = coords.combination(l.bracket(uv, image[w]));
                if (!rhs || *rhs != lhs) {
                    first[u] = {u, v};
                    return;
                }
            }
        }
    });
    for (const auto& f : first)
        if (!f.empty()) {
            rep.pass = false;
            rep.witness = f;
            break;
        }
    return rep;
}

}  // namespace tkk
