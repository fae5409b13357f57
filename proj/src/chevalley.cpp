#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "tkk/liealg.hpp"

namespace tkk {

namespace {

std::string coeff_label(const std::vector<int>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

}  // namespace

LieAlgebraPtr chevalley_algebra(const RootSystem& rs) {
    const std::size_t P = rs.num_positive();
    const std::size_t r = rs.rank;
    const std::size_t n = 2 * P + r;
    ChevalleyConstants cc(rs);
    // Root id (positive k, negative P + k) -> basis index.
    auto index_of = [&](std::size_t id) { return id < P ? id : id + r; };
    // Coroot h_alpha = sum_i c_i (alpha_i, alpha_i) / (alpha, alpha) h_i for a positive root.
    std::vector<SparseVector> coroot(P);
    for (std::size_t k = 0; k < P; ++k) {
        const auto& c = rs.positive_coeffs[k];
        const Rational len = rs.euclid(rs.positive_roots[k], rs.positive_roots[k]);
        SparseVector h;
        for (std::size_t i = 0; i < r; ++i)
            if (c[i] != 0)
                h.push_back(static_cast<std::uint32_t>(P + i),
                            Rational(c[i]) * rs.euclid(rs.simple_roots[i], rs.simple_roots[i]) / len);
        coroot[k] = std::move(h);
    }
    // Weight of a root on h_i: <alpha, alpha_i^vee> = sum_j c_j cartan[j][i].
    auto weight_on = [&](const std::vector<int>& c, std::size_t i) {
        long long w = 0;
        for (std::size_t j = 0; j < r; ++j) w += static_cast<long long>(c[j]) * rs.cartan[j][i];
        return w;
    };
    std::vector<SparseVector> table(n * n);
    auto set = [&](std::size_t a, std::size_t b, SparseVector v) {
        table[b * n + a] = -v;
        table[a * n + b] = std::move(v);
    };
    const std::size_t ids = 2 * P;
    for (std::size_t a = 0; a < ids; ++a) {
        const auto ca = cc.coeffs(a);
        for (std::size_t b = a + 1; b < ids; ++b) {
            if (b == cc.negate(a)) {
                set(index_of(a), index_of(b), a < P ? coroot[a] : -coroot[a - P]);
                continue;
            }
            long long N = cc.N(a, b);
            if (N == 0) continue;
            const auto cb = cc.coeffs(b);
            std::vector<int> s(r);
            for (std::size_t i = 0; i < r; ++i) s[i] = ca[i] + cb[i];
            long sid = cc.find(s);
            if (sid < 0) throw std::logic_error("chevalley_algebra: nonzero constant for a non-root sum");
            set(index_of(a), index_of(b), SparseVector::unit(index_of(static_cast<std::size_t>(sid)), Rational(N)));
        }
        for (std::size_t i = 0; i < r; ++i) {
            long long w = weight_on(ca, i);
            if (w != 0) set(P + i, index_of(a), SparseVector::unit(index_of(a), Rational(w)));
        }
    }
    std::vector<std::string> labels(n);
    CartanFrame frame;
    for (std::size_t i = 0; i < r; ++i) {
        labels[P + i] = "h" + std::to_string(i + 1);
        frame.cartan.push_back(SparseVector::unit(P + i));
    }
    for (std::size_t a = 0; a < ids; ++a) {
        const auto ca = cc.coeffs(a);
        labels[index_of(a)] = std::string(a < P ? "e" : "f") + coeff_label(rs.positive_coeffs[a % P]);
        FrameRoot fr;
        long long height = 0;
        for (std::size_t i = 0; i < r; ++i) {
            fr.weight.push_back(Rational(weight_on(ca, i)));
            height += ca[i];
        }
        fr.vector = SparseVector::unit(index_of(a));
        fr.key = Rational(height);
        frame.roots.push_back(std::move(fr));
    }
    return std::make_shared<const LieAlgebra>(n, std::move(table), std::move(labels), std::move(frame));
}

LieAlgebraPtr chevalley_algebra(SimpleType type) {
    static std::mutex m;
    static std::map<std::pair<int, int>, LieAlgebraPtr> cache;
    type.validate();
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({static_cast<int>(type.family), type.rank});
        if (it != cache.end()) return it->second;
    }
    LieAlgebraPtr l = chevalley_algebra(build_root_system(type));
    std::lock_guard<std::mutex> lock(m);
    cache[{static_cast<int>(type.family), type.rank}] = l;
    return l;
}

std::size_t chevalley_root_index(const RootSystem& rs, const std::vector<int>& coeffs) {
    std::vector<int> c = coeffs;
    bool negative = false;
    for (int x : c)
        if (x < 0) negative = true;
    if (negative)
        for (auto& x : c) x = -x;
    long k = rs.find_positive(c);
    if (k < 0) throw std::invalid_argument("chevalley_root_index: not a root");
    return negative ? rs.num_positive() + rs.rank + static_cast<std::size_t>(k) : static_cast<std::size_t>(k);
}

Subalgebra subsystem_subalgebra(const LieAlgebraPtr& l, const RootSystem& rs, const std::vector<std::size_t>& nodes) {
    std::vector<SparseVector> gens;
    for (auto node : nodes) {
        std::vector<int> c(rs.rank, 0);
        if (node == 0)
            c = rs.highest_coeffs;
        else if (node <= rs.rank)
            c[node - 1] = 1;
        else
            throw std::invalid_argument("subsystem_subalgebra: node out of range");
        std::vector<int> m = c;
        for (auto& x : m) x = -x;
        gens.push_back(SparseVector::unit(chevalley_root_index(rs, c)));
        gens.push_back(SparseVector::unit(chevalley_root_index(rs, m)));
    }
    return generate_subalgebra(l, gens);
}

}  // namespace tkk
