#include "tkk/constructions.hpp"

#include <random>
#include <stdexcept>

namespace tkk {

Sl2Triple root_triple(const LieAlgebra& l, const FrameAnalysis& fa, std::size_t root) {
    Sl2Triple t;
    t.e = fa.frame.roots[root].vector;
    t.f = fa.frame.roots[fa.negative_of[root]].vector;
    SparseVector h = l.bracket(t.e, t.f);
    SparseVector he = l.bracket(h, t.e);
    if (he.is_zero()) throw std::logic_error("root_triple: [e, f] does not act on e");
    Rational c = he.get(t.e.lead()) / t.e.lead_value();
    t.f = t.f.scaled(Rational(2) / c);
    t.h = l.bracket(t.e, t.f);
    if (!is_sl2_triple(l, t)) throw std::logic_error("root_triple: not an sl2 triple");
    return t;
}

std::size_t component_root(const FrameAnalysis& fa, std::size_t component, const std::vector<int>& coeffs) {
    const SimpleComponent& c = fa.components.at(component);
    for (std::size_t k = 0; k < c.roots.size(); ++k)
        if (c.coeffs[k] == coeffs) return c.roots[k];
    throw std::invalid_argument("component_root: no root with these coefficients");
}

Subalgebra frame_subsystem(const LieAlgebraPtr& l, const FrameAnalysis& fa, std::size_t component,
                           const std::vector<std::size_t>& nodes) {
    const SimpleComponent& c = fa.components.at(component);
    std::vector<SparseVector> gens;
    for (auto node : nodes) {
        if (node > c.simple.size()) throw std::invalid_argument("frame_subsystem: node out of range");
        std::size_t root = node == 0 ? fa.negative_of[c.highest] : c.simple[node - 1];
        gens.push_back(fa.frame.roots[root].vector);
        gens.push_back(fa.frame.roots[fa.negative_of[root]].vector);
    }
    return generate_subalgebra(l, gens);
}

Subalgebra theta_centralizer(const LieAlgebraPtr& l, const FrameAnalysis& fa, std::size_t component) {
    const SimpleComponent& c = fa.components.at(component);
    return centralizer(l, {fa.frame.roots[c.highest].vector, fa.frame.roots[fa.negative_of[c.highest]].vector});
}

SparseMatrix extend_homomorphism(const LieAlgebra& l, const std::vector<SparseVector>& gens,
                                 const std::vector<SparseVector>& images) {
    if (gens.size() != images.size()) throw std::invalid_argument("extend_homomorphism: size mismatch");
    const std::size_t n = l.dim();
    Echelon ech(n);
    std::vector<SparseVector> elems, imgs;
    auto add = [&](const SparseVector& v, const SparseVector& w) {
        if (ech.insert(v)) {
            elems.push_back(v);
            imgs.push_back(w);
        }
    };
    for (std::size_t g = 0; g < gens.size(); ++g) add(gens[g], images[g]);
    for (std::size_t q = 0; q < elems.size() && elems.size() < n; ++q)
        for (std::size_t g = 0; g < gens.size() && elems.size() < n; ++g)
            add(l.bracket(gens[g], elems[q]), l.bracket(images[g], imgs[q]));
    if (elems.size() != n) throw std::invalid_argument("extend_homomorphism: generators do not span");
    Matrix v(n, n), w(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& e : elems[j].entries()) v(e.index, j) = e.value;
        for (const auto& e : imgs[j].entries()) w(e.index, j) = e.value;
    }
    Matrix sigma = w * inverse(v);
    SparseMatrix s = sigma.to_sparse();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s.apply(l.bracket_basis(i, j)) != l.bracket(s.column(i), s.column(j)))
                throw std::invalid_argument("extend_homomorphism: images do not define a homomorphism");
    return s;
}

Subalgebra fixed_subalgebra(const LieAlgebraPtr& l, const SparseMatrix& sigma) {
    const std::size_t n = l->dim();
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(sigma.column(j) - SparseVector::unit(j));
    return make_subalgebra(l, kernel_of_columns(cols, n));
}

// ---------------------------------------------------------------- centralizer chain

CentralizerChain build_centralizer_chain() {
    CentralizerChain c;
    c.e7 = chevalley_algebra(SimpleType::parse("E7"));
    c.fa7 = decompose(*c.e7);
    c.d6 = theta_centralizer(c.e7, c.fa7);
    c.fa6 = decompose(*c.d6.induced);
    c.d6_type = c.fa6.label;
    c.d4a1 = theta_centralizer(c.d6.induced, c.fa6);
    FrameAnalysis fa41 = decompose(*c.d4a1.induced);
    c.d4a1_type = fa41.label;
    std::optional<std::size_t> a1;
    for (std::size_t k = 0; k < fa41.components.size(); ++k)
        if (fa41.components[k].type == SimpleType::parse("A1")) a1 = k;
    if (!a1) throw std::logic_error("build_centralizer_chain: no A1 summand in the D6 centralizer");
    Sl2Triple theta = root_triple(*c.e7, c.fa7, c.fa7.components[0].highest);
    Sl2Triple beta = root_triple(*c.d6.induced, c.fa6, c.fa6.components[0].highest);
    Sl2Triple gamma = root_triple(*c.d4a1.induced, fa41, fa41.components[*a1].highest);
    Subalgebra d4a1_in_e7 = compose(c.d6, c.d4a1);
    std::vector<SparseVector> six = {theta.e,
                                     theta.f,
                                     c.d6.include(beta.e),
                                     c.d6.include(beta.f),
                                     d4a1_in_e7.include(gamma.e),
                                     d4a1_in_e7.include(gamma.f)};
    c.three_a1 = generate_subalgebra(c.e7, six);
    c.three_a1_type = identify_type(*c.three_a1.induced);
    c.d4 = centralizer(c.e7, six);
    c.d4_type = identify_type(*c.d4.induced);
    return c;
}

// ---------------------------------------------------------------- E8 setting

SparseVector E8Setting::embed(const SparseVector& coords) const {
    Accumulator acc(e8->dim());
    for (const auto& e : coords.entries()) acc.add_scaled(ex.l1[e.index], e.value);
    return acc.take();
}

E8Setting build_e8_setting() {
    E8Setting s;
    s.e8 = chevalley_algebra(SimpleType::parse("E8"));
    Sl2Triple t = extraspecial_sl2(*s.e8);
    s.ex = extract(*s.e8, t);
    s.e7 = centralizer(s.e8, {t.e, t.f});
    s.fa7 = decompose(*s.e7.induced);
    s.d6 = compose(s.e7, theta_centralizer(s.e7.induced, s.fa7));
    s.fa6 = decompose(*s.d6.induced);
    const Subspace& l1 = s.ex.grading.components.at(1);
    s.l1_e7 = subspace_module(s.e7, l1);
    s.l1_d6 = subspace_module(s.d6, l1);
    s.l1_branching = decompose_isotypic(s.l1_d6, s.fa6);
    for (const auto& p : s.l1_branching)
        if (p.dim == 32 && p.multiplicity == 1) s.u1 = isotypic_subspace(s.l1_d6, s.fa6, p.highest);
    if (s.u1.dim() != 32) throw std::logic_error("build_e8_setting: no 32-dim isotypic summand");
    return s;
}

namespace {

IntersectionWitness witness_for(const E8Setting& s, const SparseMatrix& g, std::string name) {
    IntersectionWitness w;
    w.conjugator = std::move(name);
    std::vector<SparseVector> img;
    for (const auto& b : s.u1.basis()) img.push_back(g.apply(b));
    w.u2 = Subspace::span(s.u1.ambient(), img);
    w.meet = subspace_meet_join(s.u1, w.u2).intersection;
    w.closure_dim = fts_subalgebra_closure(s.ex.fts, w.meet.basis()).dim();
    w.closed = w.closure_dim == w.meet.dim();
    return w;
}

std::string coeff_str(const std::vector<int>& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + ")";
}

}  // namespace

IntersectionWitness single_root_witness(const E8Setting& s) {
    const SimpleComponent& comp = s.fa7.components[0];
    for (std::size_t k = 0; k < comp.roots.size(); ++k) {
        const std::size_t root = comp.roots[k];
        if (s.fa7.frame.roots[root].key <= Rational(0)) continue;
        SparseMatrix a = s.l1_e7.act(s.fa7.frame.roots[root].vector);
        bool moves = false;
        for (const auto& b : s.u1.basis())
            if (!s.u1.contains(a.apply(b))) {
                moves = true;
                break;
            }
        if (!moves) continue;
        return witness_for(s, exp_nilpotent(a), "exp(ad e) for the E7 root " + coeff_str(comp.coeffs[k]));
    }
    throw std::logic_error("single_root_witness: every positive root vector normalizes U1");
}

FixingD4 fixing_d4(const E8Setting& s) {
    const LieAlgebraPtr& e7 = s.e7.induced;
    Subalgebra d6 = theta_centralizer(e7, s.fa7);
    FrameAnalysis fa6 = decompose(*d6.induced);
    // e1 + e2, e3 + e4 and e5 - e6 in simple-root coordinates of D6.
    const std::vector<std::vector<int>> roots = {{1, 2, 2, 2, 1, 1}, {0, 0, 1, 2, 1, 1}, {0, 0, 0, 0, 1, 0}};
    std::vector<SparseVector> gens;
    for (const auto& c : roots) {
        Sl2Triple t = root_triple(*d6.induced, fa6, component_root(fa6, 0, c));
        gens.push_back(d6.include(t.e));
        gens.push_back(d6.include(t.f));
    }
    FixingD4 k;
    k.d4 = centralizer(e7, gens);
    k.fa = decompose(*k.d4.induced);
    ModuleAction m = restrict_module(s.l1_e7, k.d4);
    const std::size_t n = m.space_dim;
    std::vector<SparseVector> cols(n);
    for (std::size_t a = 0; a < m.action.size(); ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : m.action[a].column(j).entries())
                cols[j].push_back(static_cast<std::uint32_t>(a * n + e.index), e.value);
    k.fixed = kernel_of_columns(cols, n * m.action.size());
    return k;
}

IntersectionWitness generic_witness(const E8Setting& s, const FixingD4& k, std::uint64_t seed, std::size_t max_attempts) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    IntersectionWitness w;
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        SparseVector u, v;
        for (auto r : k.fa.positive) {
            u = u + k.d4.include(k.fa.frame.roots[r].vector).scaled(Rational(coeff(rng)));
            v = v + k.d4.include(k.fa.frame.roots[k.fa.negative_of[r]].vector).scaled(Rational(coeff(rng)));
        }
        SparseMatrix g = exp_nilpotent(s.l1_e7.act(u)) * exp_nilpotent(s.l1_e7.act(v));
        w = witness_for(s, g,
                        "exp(ad u) exp(ad v), u and v seeded integer combinations of the positive and negative root "
                        "vectors of the D4 fixing an 8-dim subspace of U1 (seed " +
                            std::to_string(seed) + ")");
        w.attempts = attempt;
        if (w.meet.dim() == 8) break;
    }
    return w;
}

EightDimAnalysis analyze_eight(const E8Setting& s, const IntersectionWitness& w) {
    if (!w.closed) throw std::invalid_argument("analyze_eight: intersection is not a subalgebra");
    EightDimAnalysis a;
    a.fts = restrict_to(s.ex.fts, w.meet);
    a.axioms = check_bsta_axioms(a.fts);
    a.simple = fts_is_simple(a.fts);
    TkkAlgebra t = tkk_construct(a.fts);
    a.tkk_type = identify_tkk(t);
    Subspace inder = ternary_inder(a.fts);
    a.inder_dim = inder.dim();
    auto ops = std::make_shared<const LieAlgebra>(operator_algebra(inder, a.fts.dim()));
    a.inder_derived_type = identify_type(*derived_subalgebra(ops).induced);

    const Sl2Triple& tr = s.ex.triple;
    std::vector<SparseVector> gens = {tr.e, tr.f}, gens1 = {tr.e, tr.f};
    for (const auto& b : w.meet.basis()) gens.push_back(s.embed(b));
    for (const auto& b : s.u1.basis()) gens1.push_back(s.embed(b));
    a.d4 = generate_subalgebra(s.e8, gens);
    a.e7_prime = generate_subalgebra(s.e8, gens1);
    FrameAnalysis fd4 = decompose(*a.d4.induced);
    FrameAnalysis fe7 = decompose(*a.e7_prime.induced);
    a.d4_type = fd4.label;
    a.e7_prime_type = fe7.label;
    Subalgebra inner = nest_subalgebra(a.e7_prime, a.d4);
    FrameAnalysis finner = decompose(*inner.induced);
    a.d4_in_e7 = multi_index(inner, &finner, &fe7);
    return a;
}

VectorBranching branch_vector_to_three_a1(const E8Setting& s) {
    VectorBranching vb;
    std::vector<long long> vec;
    for (const auto& p : s.l1_branching)
        if (p.dim == 12) vec = p.highest;
    if (vec.empty()) throw std::logic_error("branch_vector_to_three_a1: no 12-dim summand");
    Subspace hv = highest_weight_vectors(s.l1_d6, s.fa6, vec);
    vb.vector_module = generated_submodule(s.l1_d6, {hv.basis(0)});
    ModuleAction m = submodule(s.l1_d6, vb.vector_module);

    // Orthogonal pairs e1 -+ e2, e3 -+ e4, e5 -+ e6 of D6 in simple-root coordinates.
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
        {{1, 0, 0, 0, 0, 0}, {1, 2, 2, 2, 1, 1}},
        {{0, 0, 1, 0, 0, 0}, {0, 0, 1, 2, 1, 1}},
        {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}};
    const LieAlgebra& d6 = *s.d6.induced;
    std::vector<SparseVector> gens;
    for (const auto& [a, b] : pairs) {
        Sl2Triple ta = root_triple(d6, s.fa6, component_root(s.fa6, 0, a));
        Sl2Triple tb = root_triple(d6, s.fa6, component_root(s.fa6, 0, b));
        gens.push_back(ta.e + tb.e);
        gens.push_back(ta.f + tb.f);
    }
    vb.three_a1 = generate_subalgebra(s.d6.induced, gens);
    FrameAnalysis fa = decompose(*vb.three_a1.induced);
    vb.three_a1_type = fa.label;
    vb.three_a1_in_d6 = multi_index(vb.three_a1, &fa, &s.fa6);
    vb.parts = decompose_isotypic(restrict_module(m, vb.three_a1), fa);
    return vb;
}

IndexTwoD4 build_index_two_d4(const E8Setting& s) {
    IndexTwoD4 r;
    const LieAlgebraPtr& e7 = s.e7.induced;
    const SimpleComponent& comp = s.fa7.components[0];
    // Extended E7 diagram without node 2 is the chain 0 - 1 - 3 - 4 - 5 - 6 - 7 of type A7.
    const std::vector<std::size_t> chain = {0, 1, 3, 4, 5, 6, 7};
    r.a7 = frame_subsystem(e7, s.fa7, 0, chain);
    r.a7_type = identify_type(*r.a7.induced);
    std::vector<Sl2Triple> tri;
    for (auto node : chain)
        tri.push_back(root_triple(*e7, s.fa7, node == 0 ? s.fa7.negative_of[comp.highest] : comp.simple[node - 1]));
    const std::size_t m = chain.size();
    std::vector<SparseVector> gens, images;
    for (std::size_t i = 0; i < m; ++i) {
        const Rational sign = i == m / 2 ? Rational(-1) : Rational(1);
        const Sl2Triple& mirror = tri[m - 1 - i];
        gens.push_back(r.a7.restrict(tri[i].e));
        images.push_back(r.a7.restrict(mirror.e).scaled(sign));
        gens.push_back(r.a7.restrict(tri[i].f));
        images.push_back(r.a7.restrict(mirror.f).scaled(sign));
    }
    SparseMatrix sigma = extend_homomorphism(*r.a7.induced, gens, images);
    r.d4 = compose(r.a7, fixed_subalgebra(r.a7.induced, sigma));
    FrameAnalysis fd4 = decompose(*r.d4.induced);
    r.d4_type = fd4.label;
    r.d4_in_e7 = multi_index(r.d4, &fd4, &s.fa7);
    ModuleAction l1 = restrict_module(s.l1_e7, r.d4);
    r.l1_parts = decompose_isotypic(l1, fd4);
    Subalgebra three = theta_centralizer(r.d4.induced, fd4);
    FrameAnalysis f3 = decompose(*three.induced);
    r.three_a1_type = f3.label;
    r.l1_three_a1_parts = decompose_isotypic(restrict_module(l1, three), f3);
    return r;
}

}  // namespace tkk
