#include "tkk/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tkk {

Rational rep_dynkin_index(const RootSystem& rs, const Weight& highest) {
    if (highest.coords.size() != rs.rank || !highest.dominant())
        throw std::invalid_argument("rep_dynkin_index: highest weight must be dominant of the right rank");
    Rational dim(weyl_dimension(rs, highest));
    return casimir_pairing(rs, highest) * dim / Rational(static_cast<long long>(rs.algebra_dim()));
}

Rational partial_killing(const LieAlgebra& l, const Subspace& ideal, const SparseVector& x, const SparseVector& y) {
    Rational t;
    const auto& piv = ideal.pivots();
    for (std::size_t k = 0; k < ideal.dim(); ++k) {
        SparseVector w = l.bracket(x, l.bracket(y, ideal.basis(k)));
        t += w.get(piv[k]);
    }
    return t;
}

Rational NormalizedForm::operator()(const LieAlgebra& l, const SparseVector& x, const SparseVector& y) const {
    return scale * partial_killing(l, ideal, x, y);
}

NormalizedForm normalized_form(const LieAlgebra& l, const FrameAnalysis& fa, std::size_t index) {
    if (index >= fa.components.size()) throw std::out_of_range("normalized_form: component index");
    const SimpleComponent& c = fa.components[index];
    Rational t = partial_killing(l, c.ideal, c.long_coroot, c.long_coroot);
    if (t.is_zero()) throw std::logic_error("normalized_form: long coroot is isotropic");
    NormalizedForm nf{c.type, c.ideal, Rational(2) / t};
    Rational expected(1, 2 * static_cast<long long>(c.type.dual_coxeter_table()));
    if (nf.scale != expected)
        throw std::logic_error("normalized_form: scale " + nf.scale.str() + " disagrees with 1/(2 h^vee) for " + c.type.name());
    return nf;
}

Matrix normalized_gram(const LieAlgebra& l, const FrameAnalysis& fa, std::size_t index) {
    NormalizedForm nf = normalized_form(l, fa, index);
    const std::size_t n = l.dim();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational v = nf(l, SparseVector::unit(i), SparseVector::unit(j));
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    auto names = [](const std::vector<SimpleType>& ts) {
        std::string s;
        for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? "+" : "") + ts[i].name();
        return s.empty() ? std::string("0") : s;
    };
    os << names(source) << " -> " << names(target) << " [";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        os << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < matrix[i].size(); ++j) os << (j ? ", " : "") << matrix[i][j].short_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

MultiIndex multi_index(const Subalgebra& f, const FrameAnalysis* source, const FrameAnalysis* target) {
    const LieAlgebra& src = *f.induced;
    const LieAlgebra& tgt = *f.parent;
    std::optional<FrameAnalysis> own_src, own_tgt;
    if (!source) source = &own_src.emplace(decompose(src));
    if (!target) target = &own_tgt.emplace(decompose(tgt));
    MultiIndex mi;
    std::vector<NormalizedForm> sforms, tforms;
    for (std::size_t i = 0; i < source->components.size(); ++i) {
        mi.source.push_back(source->components[i].type);
        sforms.push_back(normalized_form(src, *source, i));
    }
    for (std::size_t j = 0; j < target->components.size(); ++j) {
        mi.target.push_back(target->components[j].type);
        tforms.push_back(normalized_form(tgt, *target, j));
    }
    for (std::size_t i = 0; i < source->components.size(); ++i) {
        const SimpleComponent& c = source->components[i];
        const auto& fr = source->frame;
        SparseVector csum;
        for (const auto& h : c.coroots) csum = csum + h;
        std::vector<std::pair<SparseVector, SparseVector>> pairs = {
            {c.long_coroot, c.long_coroot},
            {fr.roots[c.highest].vector, fr.roots[source->negative_of[c.highest]].vector},
            {csum, csum}};
        std::vector<Rational> row;
        std::vector<std::vector<Rational>> evrow;
        for (std::size_t j = 0; j < target->components.size(); ++j) {
            std::vector<Rational> ev;
            for (const auto& [x, y] : pairs) {
                Rational s = sforms[i](src, x, y);
                if (s.is_zero()) throw std::logic_error("multi_index: evaluation pair is isotropic");
                ev.push_back(tforms[j](tgt, f.include(x), f.include(y)) / s);
            }
            for (const auto& r : ev)
                if (r != ev.front())
                    throw std::logic_error("multi_index: evaluations disagree for " + c.type.name() + " -> " +
                                           target->components[j].type.name());
            row.push_back(ev.front());
            evrow.push_back(std::move(ev));
        }
        mi.matrix.push_back(std::move(row));
        mi.evaluations.push_back(std::move(evrow));
    }
    return mi;
}

Rational embedding_index(const Subalgebra& f, const FrameAnalysis* source, const FrameAnalysis* target) {
    MultiIndex mi = multi_index(f, source, target);
    if (mi.source.size() != 1 || mi.target.size() != 1)
        throw std::invalid_argument("embedding_index: source and target must be simple, got " + mi.str());
    return mi.matrix[0][0];
}

std::vector<std::vector<Rational>> multiply(const std::vector<std::vector<Rational>>& a,
                                            const std::vector<std::vector<Rational>>& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    std::vector<std::vector<Rational>> out(a.size(), std::vector<Rational>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
    return out;
}

// ---------------------------------------------------------------- modules

SparseMatrix ModuleAction::act(const SparseVector& x) const {
    std::vector<Accumulator> cols;
    cols.reserve(space_dim);
    for (std::size_t j = 0; j < space_dim; ++j) cols.emplace_back(space_dim);
    for (const auto& e : x.entries())
        for (std::size_t j = 0; j < space_dim; ++j) cols[j].add_scaled(action[e.index].column(j), e.value);
    std::vector<SparseVector> out;
    out.reserve(space_dim);
    for (auto& c : cols) out.push_back(c.take());
    return SparseMatrix(space_dim, std::move(out));
}

SparseVector ModuleAction::apply(const SparseVector& x, const SparseVector& v) const {
    Accumulator acc(space_dim);
    for (const auto& e : x.entries()) acc.add_scaled(action[e.index].apply(v), e.value);
    return acc.take();
}

ModuleAction adjoint_module(const LieAlgebraPtr& l) {
    ModuleAction m{l, l->dim(), {}};
    for (std::size_t i = 0; i < l->dim(); ++i) m.action.push_back(l->ad_basis(i));
    return m;
}

namespace {

SparseMatrix restricted_operator(const std::function<SparseVector(const SparseVector&)>& op, const Subspace& v,
                                 const char* who) {
    std::vector<SparseVector> cols;
    cols.reserve(v.dim());
    for (const auto& b : v.basis()) {
        auto c = v.coordinates(op(b));
        if (!c) throw std::invalid_argument(std::string(who) + ": subspace is not invariant");
        cols.push_back(SparseVector::from_dense(*c));
    }
    return SparseMatrix(v.dim(), std::move(cols));
}

std::vector<long long> integral_labels(const std::vector<Rational>& w) {
    std::vector<long long> out;
    for (const auto& x : w) {
        if (!x.is_integer()) throw std::domain_error("module weight is not integral on the coroots");
        out.push_back(x.numerator().get_si());
    }
    return out;
}

std::vector<SparseVector> all_coroots(const FrameAnalysis& fa) {
    std::vector<SparseVector> out;
    for (const auto& c : fa.components)
        for (const auto& h : c.coroots) out.push_back(h);
    return out;
}

/// Vectors of a weight space killed by all simple root vectors (in module coordinates).
Subspace highest_vectors(const std::vector<SparseMatrix>& raising, const Subspace& w, std::size_t n) {
    if (raising.empty()) return w;
    std::vector<SparseVector> cols;
    for (const auto& v : w.basis()) {
        SparseVector stacked;
        for (std::size_t s = 0; s < raising.size(); ++s) {
            SparseVector img = raising[s].apply(v);
            for (const auto& e : img.entries())
                stacked.push_back(static_cast<std::uint32_t>(s * n + e.index), e.value);
        }
        cols.push_back(std::move(stacked));
    }
    Subspace ker = kernel_of_columns(cols, raising.size() * n);
    std::vector<SparseVector> vecs;
    for (const auto& c : ker.basis()) vecs.push_back(w.element(c.to_dense(w.dim())));
    return Subspace::span(n, vecs);
}

std::vector<SparseMatrix> simple_raising(const ModuleAction& m, const FrameAnalysis& fa) {
    std::vector<SparseMatrix> out;
    for (const auto& c : fa.components)
        for (auto k : c.simple) out.push_back(m.act(fa.frame.roots[k].vector));
    return out;
}

}  // namespace

ModuleAction subspace_module(const Subalgebra& s, const Subspace& v) {
    ModuleAction m{s.induced, v.dim(), {}};
    for (std::size_t j = 0; j < s.dim(); ++j) {
        SparseVector x = s.space.basis(j);
        m.action.push_back(restricted_operator([&](const SparseVector& b) { return s.parent->bracket(x, b); }, v,
                                               "subspace_module"));
    }
    return m;
}

ModuleAction restrict_module(const ModuleAction& m, const Subalgebra& s) {
    if (s.parent->dim() != m.algebra->dim()) throw std::invalid_argument("restrict_module: subalgebra of another algebra");
    ModuleAction r{s.induced, m.space_dim, {}};
    for (std::size_t j = 0; j < s.dim(); ++j) r.action.push_back(m.act(s.space.basis(j)));
    return r;
}

ModuleAction submodule(const ModuleAction& m, const Subspace& w) {
    ModuleAction r{m.algebra, w.dim(), {}};
    for (const auto& a : m.action)
        r.action.push_back(restricted_operator([&](const SparseVector& b) { return a.apply(b); }, w, "submodule"));
    return r;
}

std::optional<std::pair<std::size_t, std::size_t>> homomorphism_defect(const ModuleAction& m) {
    const std::size_t n = m.algebra->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseMatrix lhs = m.act(m.algebra->bracket_basis(i, j));
            SparseMatrix rhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
            if (!(lhs - rhs).is_zero()) return std::make_pair(i, j);
        }
    return std::nullopt;
}

std::map<std::vector<Rational>, Subspace> weight_spaces(const ModuleAction& m, const std::vector<SparseVector>& cartan) {
    std::map<std::vector<Rational>, Subspace> cur;
    cur.emplace(std::vector<Rational>{}, Subspace::full(m.space_dim));
    for (const auto& h : cartan) {
        SparseMatrix a = m.act(h);
        std::map<std::vector<Rational>, Subspace> next;
        for (const auto& [w, space] : cur)
            for (auto& [lam, part] : integer_eigenspaces([&](const SparseVector& v) { return a.apply(v); }, space)) {
                std::vector<Rational> key = w;
                key.push_back(lam);
                next.emplace(std::move(key), std::move(part));
            }
        cur = std::move(next);
    }
    return cur;
}

std::map<std::vector<Rational>, std::size_t> module_weights(const ModuleAction& m, const CartanFrame& frame) {
    std::map<std::vector<Rational>, std::size_t> out;
    for (const auto& [w, s] : weight_spaces(m, frame.cartan)) out[w] = s.dim();
    return out;
}

std::map<std::vector<long long>, std::size_t> module_weight_labels(const ModuleAction& m, const FrameAnalysis& fa) {
    std::map<std::vector<long long>, std::size_t> out;
    for (const auto& [w, s] : weight_spaces(m, all_coroots(fa))) out[integral_labels(w)] += s.dim();
    return out;
}

mpz_class irreducible_dim(const FrameAnalysis& fa, const std::vector<long long>& labels) {
    mpz_class d = 1;
    std::size_t pos = 0;
    for (const auto& c : fa.components) {
        const auto r = static_cast<std::size_t>(c.type.rank);
        if (pos + r > labels.size()) throw std::invalid_argument("irreducible_dim: too few labels");
        Weight w{std::vector<long long>(labels.begin() + pos, labels.begin() + pos + r)};
        d *= weyl_dimension(build_root_system(c.type), w);
        pos += r;
    }
    if (pos != labels.size()) throw std::invalid_argument("irreducible_dim: too many labels");
    return d;
}

std::vector<IsotypicComponent> decompose_isotypic(const ModuleAction& m, const FrameAnalysis& fa) {
    std::vector<SparseMatrix> raising = simple_raising(m, fa);
    std::vector<IsotypicComponent> out;
    mpz_class total = 0;
    for (const auto& [w, space] : weight_spaces(m, all_coroots(fa))) {
        Subspace hv = highest_vectors(raising, space, m.space_dim);
        if (hv.is_zero()) continue;
        IsotypicComponent ic;
        ic.highest = integral_labels(w);
        ic.multiplicity = hv.dim();
        for (auto x : ic.highest)
            if (x < 0) throw std::logic_error("decompose_isotypic: highest weight is not dominant");
        mpz_class d = irreducible_dim(fa, ic.highest);
        ic.dim = d.get_ui();
        total += d * static_cast<unsigned long>(ic.multiplicity);
        out.push_back(std::move(ic));
    }
    if (total != static_cast<unsigned long>(m.space_dim))
        throw std::logic_error("decompose_isotypic: multiplicities account for " + total.get_str() + " of " +
                               std::to_string(m.space_dim) + " dimensions");
    std::sort(out.begin(), out.end(), [](const IsotypicComponent& a, const IsotypicComponent& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.highest > b.highest;
    });
    return out;
}

std::vector<IsotypicComponent> decompose_isotypic(const ModuleAction& m) {
    return decompose_isotypic(m, decompose(*m.algebra));
}

Subspace generated_submodule(const ModuleAction& m, const std::vector<SparseVector>& vectors) {
    Echelon ech(m.space_dim);
    std::vector<SparseVector> queue;
    for (const auto& v : vectors)
        if (ech.insert(v)) queue.push_back(v);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& a : m.action) {
            SparseVector img = a.apply(queue[q]);
            if (ech.insert(img)) queue.push_back(std::move(img));
        }
    return ech.subspace();
}

Subspace highest_weight_vectors(const ModuleAction& m, const FrameAnalysis& fa, const std::vector<long long>& highest) {
    std::vector<Rational> key(highest.begin(), highest.end());
    auto spaces = weight_spaces(m, all_coroots(fa));
    auto it = spaces.find(key);
    if (it == spaces.end()) return Subspace::zero(m.space_dim);
    return highest_vectors(simple_raising(m, fa), it->second, m.space_dim);
}

Subspace isotypic_subspace(const ModuleAction& m, const FrameAnalysis& fa, const std::vector<long long>& highest) {
    return generated_submodule(m, highest_weight_vectors(m, fa, highest).basis());
}

}  // namespace tkk
