#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tkk/liealg.hpp"

namespace tkk {

namespace {

struct WeightSpace {
    Vector weight;
    Subspace space;
};

bool is_zero_weight(const Vector& w) {
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector negated(Vector w) {
    for (auto& x : w) x = -x;
    return w;
}

/// Elements sum c_j basis_j for the coefficient vectors of a kernel.
std::vector<SparseVector> combine(const Subspace& coeffs, const std::vector<SparseVector>& basis, std::size_t n) {
    std::vector<SparseVector> out;
    for (const auto& c : coeffs.basis()) {
        Accumulator acc(n);
        for (const auto& e : c.entries()) acc.add_scaled(basis[e.index], e.value);
        out.push_back(acc.take());
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rational, Subspace>> ad_eigenspaces(const LieAlgebra& l, const SparseVector& h, const Subspace& v) {
    return integer_eigenspaces([&](const SparseVector& x) { return l.bracket(h, x); }, v);
}

bool is_ad_nilpotent(const LieAlgebra& l, const SparseVector& x) {
    const std::size_t n = l.dim();
    SparseMatrix m = l.ad(x);
    Subspace cur = image(m);
    for (std::size_t it = 0; it <= n && !cur.is_zero(); ++it) {
        std::vector<SparseVector> imgs;
        for (const auto& b : cur.basis()) imgs.push_back(m.apply(b));
        Subspace next = Subspace::span(n, imgs);
        if (next.dim() == cur.dim()) return false;
        cur = std::move(next);
    }
    return true;
}

std::optional<Sl2Triple> sl2_from_nilpotent(const LieAlgebra& l, const SparseVector& e, const Subspace* minus_space) {
    const std::size_t n = l.dim();
    if (e.is_zero()) return std::nullopt;
    std::vector<SparseVector> search;
    if (minus_space)
        search = minus_space->basis();
    else
        for (std::size_t i = 0; i < n; ++i) search.push_back(SparseVector::unit(i));
    // z with [e, [e, z]] = -2 e.
    std::vector<SparseVector> ad1(search.size()), ad2(search.size());
    for (std::size_t j = 0; j < search.size(); ++j) {
        ad1[j] = l.bracket(e, search[j]);
        ad2[j] = l.bracket(e, ad1[j]);
    }
    auto zc = solve_columns(ad2, n, e.scaled(-2));
    if (!zc) return std::nullopt;
    SparseVector z;
    {
        Accumulator acc(n);
        for (const auto& t : zc->entries()) acc.add_scaled(search[t.index], t.value);
        z = acc.take();
    }
    SparseVector h = l.bracket(e, z);
    // Correct z by u in ker ad e with [h, u] + 2 u = [h, z] + 2 z.
    std::vector<SparseVector> cent = combine(kernel_of_columns(ad1, n), search, n);
    SparseVector rhs = l.bracket(h, z) + z.scaled(2);
    SparseVector f = z;
    if (!rhs.is_zero()) {
        std::vector<SparseVector> cols;
        for (const auto& c : cent) cols.push_back(l.bracket(h, c) + c.scaled(2));
        auto uc = solve_columns(cols, n, rhs);
        if (!uc) return std::nullopt;
        for (const auto& t : uc->entries()) f.axpy(-t.value, cent[t.index]);
    }
    Sl2Triple t{e, h, f};
    if (!is_sl2_triple(l, t)) return std::nullopt;
    return t;
}

CartanFrame split_cartan(const LieAlgebra& l, const std::vector<SparseVector>& seeds, const SplitCartanOptions& opts) {
    if (l.frame()) return *l.frame();
    const std::size_t n = l.dim();
    std::vector<SparseVector> torus;
    Echelon span(n);
    std::vector<WeightSpace> spaces{{Vector{}, Subspace::full(n)}};
    auto add_toral = [&](const SparseVector& h) {
        if (span.contains(h)) return false;
        std::vector<WeightSpace> next;
        for (const auto& ws : spaces)
            for (auto& [lam, part] : ad_eigenspaces(l, h, ws.space)) {
                Vector w = ws.weight;
                w.push_back(lam);
                next.push_back({std::move(w), std::move(part)});
            }
        span.insert(h);
        torus.push_back(h);
        spaces = std::move(next);
        return true;
    };
    const Subspace z = center(l);
    for (const auto& c : z.basis()) add_toral(c);
    for (const auto& s : seeds) add_toral(s);

    std::size_t attempts = 0;
    auto try_element = [&](const SparseVector& x, const Subspace& minus) {
        if (++attempts > opts.max_attempts) throw std::runtime_error("split_cartan: attempt budget exhausted");
        auto t = sl2_from_nilpotent(l, x, &minus);
        return t && add_toral(t->h);
    };
    while (true) {
        const WeightSpace* zero = nullptr;
        for (const auto& ws : spaces)
            if (is_zero_weight(ws.weight)) zero = &ws;
        if (zero && zero->space.dim() == torus.size()) break;
        bool grown = false;
        std::map<Vector, std::size_t> index;
        for (std::size_t i = 0; i < spaces.size(); ++i) index[spaces[i].weight] = i;
        for (std::size_t i = 0; i < spaces.size() && !grown; ++i) {
            if (is_zero_weight(spaces[i].weight)) continue;
            auto it = index.find(negated(spaces[i].weight));
            if (it == index.end()) continue;
            const Subspace minus = spaces[it->second].space;
            const std::vector<SparseVector> xs = spaces[i].space.basis();
            for (const auto& x : xs)
                if (try_element(x, minus)) {
                    grown = true;
                    break;
                }
        }
        if (!grown && zero) {
            const Subspace l0 = zero->space;
            for (const auto& x : l0.basis())
                if (!span.contains(x) && is_ad_nilpotent(l, x) && try_element(x, l0)) {
                    grown = true;
                    break;
                }
        }
        if (!grown) throw std::runtime_error("split_cartan: no further toral element found; the algebra is not split reductive");
    }

    CartanFrame f;
    f.cartan = torus;
    Rational bound;
    for (const auto& ws : spaces)
        for (const auto& x : ws.weight)
            if (abs(x) > bound) bound = abs(x);
    const Rational base = bound * Rational(2) + Rational(1);
    for (const auto& ws : spaces) {
        if (is_zero_weight(ws.weight)) continue;
        Rational key, power(1);
        for (const auto& x : ws.weight) {
            key += x * power;
            power *= base;
        }
        for (const auto& v : ws.space.basis()) f.roots.push_back({ws.weight, v, key});
    }
    std::stable_sort(f.roots.begin(), f.roots.end(), [](const FrameRoot& a, const FrameRoot& b) { return a.key > b.key; });
    return f;
}

// ---------------------------------------------------------------- type labels

std::string TypeLabel::str() const {
    std::string out;
    for (std::size_t i = 0; i < summands.size();) {
        std::size_t j = i;
        while (j < summands.size() && summands[j] == summands[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        out += summands[i].name();
        i = j;
    }
    if (center_dim > 0) {
        if (!out.empty()) out += "+";
        out += "T" + std::to_string(center_dim);
    }
    return out.empty() ? "0" : out;
}

std::size_t TypeLabel::dim() const {
    std::size_t d = center_dim;
    for (const auto& s : summands) d += s.algebra_dim();
    return d;
}

std::optional<std::vector<std::size_t>> match_cartan(const std::vector<std::vector<int>>& cartan, const RootSystem& standard) {
    const std::size_t r = cartan.size();
    if (r != standard.rank) return std::nullopt;
    std::vector<std::size_t> perm(r);
    std::vector<char> used(r, 0);
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == r) return true;
        for (std::size_t c = 0; c < r; ++c) {
            if (used[c]) continue;
            bool ok = cartan[c][c] == standard.cartan[k][k];
            for (std::size_t a = 0; a < k && ok; ++a)
                ok = cartan[perm[a]][c] == standard.cartan[a][k] && cartan[c][perm[a]] == standard.cartan[k][a];
            if (!ok) continue;
            perm[k] = c;
            used[c] = 1;
            if (self(self, k + 1)) return true;
            used[c] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return perm;
}

std::pair<std::size_t, std::size_t> FrameAnalysis::locate(std::size_t root) const {
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& rs = components[c].roots;
        auto it = std::find(rs.begin(), rs.end(), root);
        if (it != rs.end()) return {c, static_cast<std::size_t>(it - rs.begin())};
    }
    throw std::out_of_range("FrameAnalysis::locate: root not in any component");
}

namespace {

const RootSystem& cached_root_system(SimpleType t) {
    static std::mutex m;
    static std::map<std::pair<int, int>, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[{static_cast<int>(t.family), t.rank}];
    if (!slot) slot = std::make_unique<RootSystem>(build_root_system(t));
    return *slot;
}

/// Coroot in [L_a, L_-a] normalized by a(h) = 2.
SparseVector normalized_coroot(const LieAlgebra& l, const SparseVector& ea, const SparseVector& fa) {
    SparseVector c = l.bracket(ea, fa);
    if (c.is_zero()) throw std::runtime_error("analyze_frame: root vectors of opposite roots commute");
    SparseVector act = l.bracket(c, ea);
    if (act.is_zero()) throw std::runtime_error("analyze_frame: degenerate root pairing");
    Rational ratio = act.get(ea.lead()) / ea.lead_value();
    return c.scaled(Rational(2) / ratio);
}

}  // namespace

FrameAnalysis analyze_frame(const LieAlgebra& l, const CartanFrame& frame) {
    const std::size_t n = l.dim();
    const std::size_t r = frame.cartan.size();
    const std::size_t R = frame.roots.size();
    if (r + R != n) throw std::runtime_error("analyze_frame: frame is incomplete (weight spaces are not one-dimensional)");
    FrameAnalysis fa;
    fa.frame = frame;
    std::map<Vector, std::size_t> by_weight;
    for (std::size_t k = 0; k < R; ++k) {
        const auto& root = frame.roots[k];
        if (root.weight.size() != r || is_zero_weight(root.weight)) throw std::runtime_error("analyze_frame: invalid root weight");
        if (root.key.is_zero()) throw std::runtime_error("analyze_frame: root with zero key");
        if (!by_weight.emplace(root.weight, k).second) throw std::runtime_error("analyze_frame: repeated root");
        for (std::size_t i = 0; i < r; ++i)
            if (l.bracket(frame.cartan[i], root.vector) != root.vector.scaled(root.weight[i]))
                throw std::runtime_error("analyze_frame: root vector is not a weight vector");
    }
    fa.negative_of.resize(R);
    for (std::size_t k = 0; k < R; ++k) {
        auto it = by_weight.find(negated(frame.roots[k].weight));
        if (it == by_weight.end()) throw std::runtime_error("analyze_frame: root system not closed under negation");
        fa.negative_of[k] = it->second;
        if (frame.roots[k].key > Rational(0)) fa.positive.push_back(k);
    }
    auto add_weights = [&](std::size_t a, std::size_t b) {
        Vector w = frame.roots[a].weight;
        for (std::size_t i = 0; i < r; ++i) w[i] += frame.roots[b].weight[i];
        auto it = by_weight.find(w);
        return it == by_weight.end() ? -1L : static_cast<long>(it->second);
    };
    // Simple roots: positive roots that are not sums of two positive roots.
    std::vector<char> decomposable(R, 0);
    for (std::size_t a = 0; a < fa.positive.size(); ++a)
        for (std::size_t b = a; b < fa.positive.size(); ++b) {
            long s = add_weights(fa.positive[a], fa.positive[b]);
            if (s >= 0) decomposable[static_cast<std::size_t>(s)] = 1;
        }
    std::vector<std::size_t> simple;
    for (auto p : fa.positive)
        if (!decomposable[p]) simple.push_back(p);
    const std::size_t s = simple.size();
    // Cartan integers <alpha_i, alpha_j^vee> = -q for the alpha_j-string through alpha_i.
    std::vector<std::vector<int>> cartan(s, std::vector<int>(s, 2));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (i == j) continue;
            int q = 0;
            long cur = static_cast<long>(simple[i]);
            while ((cur = add_weights(static_cast<std::size_t>(cur), simple[j])) >= 0) ++q;
            cartan[i][j] = -q;
        }
    // Coefficients of every positive root, by adding simple roots.
    std::vector<std::vector<int>> coeff(R);
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < s; ++i) {
        coeff[simple[i]].assign(s, 0);
        coeff[simple[i]][i] = 1;
        queue.push_back(simple[i]);
    }
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (std::size_t i = 0; i < s; ++i) {
            long t = add_weights(queue[q], simple[i]);
            if (t < 0 || !coeff[static_cast<std::size_t>(t)].empty()) continue;
            coeff[static_cast<std::size_t>(t)] = coeff[queue[q]];
            coeff[static_cast<std::size_t>(t)][i] += 1;
            queue.push_back(static_cast<std::size_t>(t));
        }
    if (queue.size() != fa.positive.size()) throw std::runtime_error("analyze_frame: positive roots are not generated by simple roots");
    // Connected components of the Dynkin diagram.
    std::vector<std::size_t> parent(s);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (cartan[i][j] != 0) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < s; ++i) groups[find(i)].push_back(i);

    for (const auto& [rep, nodes] : groups) {
        (void)rep;
        const std::size_t m = nodes.size();
        std::vector<std::vector<int>> sub(m, std::vector<int>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) sub[a][b] = cartan[nodes[a]][nodes[b]];
        std::vector<std::size_t> pos_roots;
        for (auto p : fa.positive) {
            bool inside = false;
            for (auto nd : nodes) inside |= coeff[p][nd] != 0;
            if (inside) pos_roots.push_back(p);
        }
        SimpleComponent comp;
        std::optional<std::vector<std::size_t>> perm;
        for (const auto& t : all_simple_types()) {
            if (t.rank != static_cast<int>(m) || t.root_count() != 2 * pos_roots.size()) continue;
            if (t.family == Family::B && t.rank == 2) continue;
            perm = match_cartan(sub, cached_root_system(t));
            if (perm) {
                comp.type = t;
                break;
            }
        }
        if (!perm) throw std::runtime_error("analyze_frame: component does not match a standard root system");
        const RootSystem& rs = cached_root_system(comp.type);
        for (std::size_t k = 0; k < m; ++k) comp.simple.push_back(simple[nodes[(*perm)[k]]]);
        Rational best;
        bool first = true;
        Rational max_len;
        std::vector<Rational> lens;
        for (auto p : pos_roots) {
            std::vector<int> c(m);
            for (std::size_t k = 0; k < m; ++k) c[k] = coeff[p][nodes[(*perm)[k]]];
            Vector ev = rs.from_coeffs(c);
            Rational len = rs.euclid(ev, ev);
            lens.push_back(len);
            if (len > max_len) max_len = len;
            comp.roots.push_back(p);
            comp.coeffs.push_back(c);
            if (first || frame.roots[p].key > best) {
                best = frame.roots[p].key;
                comp.highest = p;
                first = false;
            }
        }
        for (std::size_t k = 0; k < pos_roots.size(); ++k) {
            const std::size_t p = pos_roots[k];
            comp.roots.push_back(fa.negative_of[p]);
            std::vector<int> c = comp.coeffs[k];
            for (auto& x : c) x = -x;
            comp.coeffs.push_back(c);
            if (lens[k] == max_len)
                comp.long_roots += 2;
            else
                comp.short_roots += 2;
        }
        std::vector<SparseVector> ideal;
        for (auto sidx : comp.simple)
            comp.coroots.push_back(normalized_coroot(l, frame.roots[sidx].vector, frame.roots[fa.negative_of[sidx]].vector));
        comp.long_coroot =
            normalized_coroot(l, frame.roots[comp.highest].vector, frame.roots[fa.negative_of[comp.highest]].vector);
        for (auto k : comp.roots) ideal.push_back(frame.roots[k].vector);
        for (const auto& c : comp.coroots) ideal.push_back(c);
        comp.ideal = Subspace::span(n, ideal);
        fa.components.push_back(std::move(comp));
    }
    std::sort(fa.components.begin(), fa.components.end(), [](const SimpleComponent& a, const SimpleComponent& b) {
        if (a.type.algebra_dim() != b.type.algebra_dim()) return a.type.algebra_dim() > b.type.algebra_dim();
        if (a.type.family != b.type.family) return a.type.family < b.type.family;
        if (a.type.rank != b.type.rank) return a.type.rank < b.type.rank;
        return a.ideal.pivots().front() < b.ideal.pivots().front();
    });
    // Center: common kernel of all root weights on the Cartan.
    std::vector<SparseVector> cols(r);
    for (std::size_t i = 0; i < r; ++i) {
        SparseVector c;
        for (std::size_t k = 0; k < R; ++k)
            if (!frame.roots[k].weight[i].is_zero()) c.push_back(static_cast<std::uint32_t>(k), frame.roots[k].weight[i]);
        cols[i] = std::move(c);
    }
    fa.center = Subspace::span(n, combine(kernel_of_columns(cols, std::max<std::size_t>(R, 1)), frame.cartan, n));
    for (const auto& c : fa.components) fa.label.summands.push_back(c.type);
    fa.label.center_dim = fa.center.dim();
    if (fa.label.dim() != n) throw std::runtime_error("analyze_frame: dimension count mismatch");
    return fa;
}

FrameAnalysis decompose(const LieAlgebra& l, const std::vector<SparseVector>& seeds) {
    return analyze_frame(l, split_cartan(l, seeds));
}

TypeLabel identify_type(const LieAlgebra& l, const std::vector<SparseVector>& seeds) { return decompose(l, seeds).label; }

GenericRank generic_rank(const LieAlgebra& l, std::uint64_t seed, std::size_t max_samples) {
    const std::size_t n = l.dim();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    GenericRank g;
    g.rank = n;
    std::size_t hits = 0;
    for (std::size_t s = 0; s < max_samples; ++s) {
        Vector x(n);
        for (auto& v : x) v = Rational(d(rng));
        SparseMatrix m = l.ad(SparseVector::from_dense(x));
        Subspace cur = image(m);
        std::size_t prev = n;
        while (cur.dim() < prev) {
            prev = cur.dim();
            std::vector<SparseVector> imgs;
            for (const auto& b : cur.basis()) imgs.push_back(m.apply(b));
            cur = Subspace::span(n, imgs);
        }
        const std::size_t nullity = n - cur.dim();
        ++g.samples;
        if (nullity < g.rank) {
            g.rank = nullity;
            hits = 1;
        } else if (nullity == g.rank) {
            ++hits;
        }
        if (hits >= 2) break;
    }
    g.stable = hits >= 2;
    return g;
}

}  // namespace tkk
