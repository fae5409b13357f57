#include "tkk/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace tkk {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family family_from_letter(char c) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c < 'A' || c > 'G') throw std::invalid_argument(std::string("unknown root system family '") + c + "'");
    return static_cast<Family>(c - 'A');
}

std::string SimpleType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

std::size_t SimpleType::root_count() const {
    const std::size_t n = static_cast<std::size_t>(rank);
    switch (family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return 0;
}

std::size_t SimpleType::algebra_dim() const { return root_count() + static_cast<std::size_t>(rank); }

int SimpleType::dual_coxeter_table() const {
    switch (family) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank - 1;
        case Family::C: return rank + 1;
        case Family::D: return 2 * rank - 2;
        case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
        case Family::F: return 9;
        case Family::G: return 4;
    }
    return 0;
}

void SimpleType::validate() const {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1 && rank <= 8; break;
        case Family::B: ok = rank >= 2 && rank <= 8; break;
        case Family::C: ok = rank >= 2 && rank <= 8; break;
        case Family::D: ok = rank >= 4 && rank <= 8; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw std::invalid_argument("invalid simple type " + name());
}

SimpleType SimpleType::parse(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("invalid simple type '" + text + "'");
    SimpleType t;
    t.family = family_from_letter(text[0]);
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("invalid simple type '" + text + "'");
    t.rank = std::stoi(text.substr(1));
    t.validate();
    return t;
}

std::vector<SimpleType> all_simple_types() {
    std::vector<SimpleType> out;
    for (int f = 0; f < 7; ++f)
        for (int r = 1; r <= 8; ++r) {
            SimpleType t{static_cast<Family>(f), r};
            try {
                t.validate();
                out.push_back(t);
            } catch (const std::invalid_argument&) {
            }
        }
    return out;
}

bool Weight::dominant() const {
    for (auto c : coords)
        if (c < 0) return false;
    return true;
}

Rational RootSystem::euclid(const Vector& a, const Vector& b) const {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vector RootSystem::from_coeffs(const std::vector<int>& c) const {
    Vector v(ambient);
    for (std::size_t i = 0; i < rank; ++i)
        if (c[i] != 0)
            for (std::size_t k = 0; k < ambient; ++k) v[k] += Rational(c[i]) * simple_roots[i][k];
    return v;
}

Vector RootSystem::weight_vector(const Weight& w) const {
    if (w.coords.size() != rank) throw std::invalid_argument("weight has wrong number of coordinates");
    Vector v(ambient);
    for (std::size_t i = 0; i < rank; ++i)
        if (w.coords[i] != 0)
            for (std::size_t k = 0; k < ambient; ++k) v[k] += Rational(w.coords[i]) * fundamental_weights[i][k];
    return v;
}

long RootSystem::find_positive(const std::vector<int>& c) const {
    auto it = coeff_index.find(c);
    return it == coeff_index.end() ? -1 : static_cast<long>(it->second);
}

long long RootSystem::pairing_coroot(const Vector& v, std::size_t i) const {
    Rational r = Rational(2) * euclid(v, simple_roots[i]) / euclid(simple_roots[i], simple_roots[i]);
    return r.to_int();
}

Weight RootSystem::adjoint_weight() const {
    Weight w;
    for (std::size_t i = 0; i < rank; ++i) w.coords.push_back(pairing_coroot(highest_root, i));
    return w;
}

bool RootSystem::is_long(std::size_t k) const {
    return euclid(positive_roots[k], positive_roots[k]) == euclid(highest_root, highest_root);
}

namespace {

Vector unit_vec(std::size_t n, std::size_t i, Rational c = 1) {
    Vector v(n);
    v[i] = c;
    return v;
}

Vector diff(std::size_t n, std::size_t i, std::size_t j) {
    Vector v(n);
    v[i] = 1;
    v[j] = -1;
    return v;
}

std::vector<Vector> simple_roots_for(SimpleType t, std::size_t& ambient) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    std::vector<Vector> s;
    switch (t.family) {
        case Family::A:
            ambient = n + 1;
            for (std::size_t i = 0; i < n; ++i) s.push_back(diff(ambient, i, i + 1));
            break;
        case Family::B:
            ambient = n;
            for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(ambient, i, i + 1));
            s.push_back(unit_vec(ambient, n - 1));
            break;
        case Family::C:
            ambient = n;
            for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(ambient, i, i + 1));
            s.push_back(unit_vec(ambient, n - 1, 2));
            break;
        case Family::D: {
            ambient = n;
            for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(ambient, i, i + 1));
            Vector v(ambient);
            v[n - 2] = 1;
            v[n - 1] = 1;
            s.push_back(v);
            break;
        }
        case Family::E: {
            ambient = 8;
            Vector a1(8, Rational(-1, 2));
            a1[0] = Rational(1, 2);
            a1[7] = Rational(1, 2);
            s.push_back(a1);
            Vector a2(8);
            a2[0] = 1;
            a2[1] = 1;
            s.push_back(a2);
            for (std::size_t i = 3; i <= n; ++i) s.push_back(diff(8, i - 2, i - 3));
            break;
        }
        case Family::F: {
            ambient = 4;
            s.push_back(diff(4, 1, 2));
            s.push_back(diff(4, 2, 3));
            s.push_back(unit_vec(4, 3));
            s.push_back(Vector{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
            break;
        }
        case Family::G:
            ambient = 3;
            s.push_back(diff(3, 0, 1));
            s.push_back(Vector{Rational(-2), Rational(1), Rational(1)});
            break;
    }
    return s;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) { return build_root_system(SimpleType{family, rank}); }

RootSystem build_root_system(SimpleType type) {
    type.validate();
    RootSystem rs;
    rs.type = type;
    rs.rank = static_cast<std::size_t>(type.rank);
    rs.simple_roots = simple_roots_for(type, rs.ambient);
    const std::size_t r = rs.rank;

    rs.cartan.assign(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            rs.cartan[i][j] = static_cast<int>(
                (Rational(2) * rs.euclid(rs.simple_roots[i], rs.simple_roots[j]) / rs.euclid(rs.simple_roots[j], rs.simple_roots[j])).to_int());

    // Positive roots by height using root strings: beta + alpha_i is a root iff q > 0,
    // where q = p - <beta, alpha_i^vee> and p is the length of the downward string.
    std::set<std::vector<int>> known;
    std::vector<std::vector<std::vector<int>>> layers;
    std::vector<std::vector<int>> layer;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> c(r);
        c[i] = 1;
        layer.push_back(c);
        known.insert(c);
    }
    while (!layer.empty()) {
        layers.push_back(layer);
        std::set<std::vector<int>> next;
        for (const auto& beta : layer)
            for (std::size_t i = 0; i < r; ++i) {
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                int pair = 0;
                for (std::size_t j = 0; j < r; ++j) pair += beta[j] * rs.cartan[j][i];
                if (p - pair > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        layer.assign(next.begin(), next.end());
        for (const auto& c : layer) known.insert(c);
    }
    for (auto& l : layers) {
        std::sort(l.begin(), l.end(), std::greater<>());
        for (auto& c : l) {
            rs.coeff_index[c] = rs.positive_coeffs.size();
            rs.positive_coeffs.push_back(c);
            rs.positive_roots.push_back(rs.from_coeffs(c));
        }
    }
    if (rs.positive_roots.size() * 2 != type.root_count())
        throw std::logic_error("root enumeration produced the wrong number of roots for " + type.name());

    rs.highest_coeffs = rs.positive_coeffs.back();
    rs.highest_root = rs.positive_roots.back();
    rs.scale = Rational(2) / rs.euclid(rs.highest_root, rs.highest_root);

    // Fundamental weights: omega_i = sum_j (C^{-1})_{ij} alpha_j with C the Cartan matrix.
    Matrix c(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) c(i, j) = rs.cartan[i][j];
    Matrix cinv = inverse(c);
    for (std::size_t i = 0; i < r; ++i) {
        Vector w(rs.ambient);
        for (std::size_t j = 0; j < r; ++j)
            if (!cinv(i, j).is_zero())
                for (std::size_t k = 0; k < rs.ambient; ++k) w[k] += cinv(i, j) * rs.simple_roots[j][k];
        rs.fundamental_weights.push_back(w);
    }
    rs.weyl_vector.assign(rs.ambient, Rational(0));
    for (const auto& a : rs.positive_roots)
        for (std::size_t k = 0; k < rs.ambient; ++k) rs.weyl_vector[k] += a[k] * Rational(1, 2);

    // h^vee = 1 + (rho, theta^vee), cross-checked against the classification table.
    Rational hv = Rational(1) + Rational(2) * rs.euclid(rs.weyl_vector, rs.highest_root) / rs.euclid(rs.highest_root, rs.highest_root);
    rs.dual_coxeter = static_cast<int>(hv.to_int());
    if (rs.dual_coxeter != type.dual_coxeter_table())
        throw std::logic_error("dual Coxeter number mismatch for " + type.name());
    return rs;
}

mpz_class weyl_dimension(const RootSystem& rs, const Weight& w) {
    if (!w.dominant()) throw std::invalid_argument("weyl_dimension: weight is not dominant");
    Vector lr = rs.weight_vector(w);
    for (std::size_t k = 0; k < rs.ambient; ++k) lr[k] += rs.weyl_vector[k];
    Rational d = 1;
    for (const auto& a : rs.positive_roots) d *= rs.euclid(lr, a) / rs.euclid(rs.weyl_vector, a);
    if (!d.is_integer()) throw std::logic_error("weyl_dimension: non-integral result");
    return d.numerator();
}

Rational casimir_pairing(const RootSystem& rs, const Weight& w) {
    if (!w.dominant()) throw std::invalid_argument("casimir_pairing: weight is not dominant");
    Vector l = rs.weight_vector(w);
    Vector l2r = l;
    for (std::size_t k = 0; k < rs.ambient; ++k) l2r[k] += Rational(2) * rs.weyl_vector[k];
    return rs.normalized(l, l2r);
}

std::vector<std::vector<long long>> weyl_orbit(const RootSystem& rs, const Weight& w) {
    if (!w.dominant()) throw std::invalid_argument("weyl_orbit: weight is not dominant");
    std::set<std::vector<long long>> seen{w.coords};
    std::deque<std::vector<long long>> queue{w.coords};
    while (!queue.empty()) {
        auto mu = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rs.rank; ++i) {
            if (mu[i] == 0) continue;
            auto nu = mu;
            for (std::size_t j = 0; j < rs.rank; ++j) nu[j] -= mu[i] * rs.cartan[i][j];
            if (seen.insert(nu).second) queue.push_back(nu);
        }
    }
    return {seen.begin(), seen.end()};
}

std::map<std::vector<long long>, long long> weight_multiset(const RootSystem& rs, const Weight& w) {
    if (!w.dominant()) throw std::invalid_argument("weight_multiset: weight is not dominant");
    const std::size_t r = rs.rank;
    auto to_vec = [&](const std::vector<long long>& labels) { return rs.weight_vector(Weight{labels}); };
    Vector lam = rs.weight_vector(w);
    Vector lr = lam;
    for (std::size_t k = 0; k < rs.ambient; ++k) lr[k] += rs.weyl_vector[k];
    const Rational top = rs.euclid(lr, lr);

    std::vector<std::vector<long long>> pos_labels;
    for (const auto& c : rs.positive_coeffs) {
        std::vector<long long> l(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) l[j] += static_cast<long long>(c[i]) * rs.cartan[i][j];
        pos_labels.push_back(l);
    }

    std::map<std::vector<long long>, long long> mult{{w.coords, 1}};
    std::vector<std::vector<long long>> layer{w.coords};
    while (!layer.empty()) {
        std::set<std::vector<long long>> next;
        for (const auto& mu : layer)
            for (std::size_t i = 0; i < r; ++i) {
                auto nu = mu;
                for (std::size_t j = 0; j < r; ++j) nu[j] -= rs.cartan[i][j];
                if (!mult.count(nu)) next.insert(nu);
            }
        std::vector<std::vector<long long>> found;
        for (const auto& nu : next) {
            Vector v = to_vec(nu);
            Vector vr = v;
            for (std::size_t k = 0; k < rs.ambient; ++k) vr[k] += rs.weyl_vector[k];
            Rational denom = top - rs.euclid(vr, vr);
            if (denom.is_zero()) continue;
            Rational sum;
            for (std::size_t a = 0; a < rs.positive_roots.size(); ++a) {
                for (long long k = 1;; ++k) {
                    auto up = nu;
                    for (std::size_t j = 0; j < r; ++j) up[j] += k * pos_labels[a][j];
                    auto it = mult.find(up);
                    if (it == mult.end()) break;
                    sum += Rational(it->second) * rs.euclid(to_vec(up), rs.positive_roots[a]);
                }
            }
            Rational m = Rational(2) * sum / denom;
            if (!m.is_integer()) throw std::logic_error("weight_multiset: non-integral multiplicity");
            if (m.sign() > 0) {
                mult[nu] = m.to_int();
                found.push_back(nu);
            }
        }
        layer = std::move(found);
    }
    return mult;
}

// ---------------------------------------------------------------- Chevalley constants

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs) : rs_(&rs), P_(rs.num_positive()) {
    for (const auto& a : rs.positive_roots) len2_.push_back(rs.euclid(a, a));
    // Process sums xi in height order; the first pair found for xi (smallest alpha) is extraspecial.
    for (std::size_t xi = 0; xi < P_; ++xi) {
        const auto& cx = rs.positive_coeffs[xi];
        long ext_a = -1, ext_b = -1;
        long long ext_n = 0;
        for (std::size_t a = 0; a < xi; ++a) {
            std::vector<int> cb(cx.size());
            bool nonneg = true;
            for (std::size_t i = 0; i < cx.size(); ++i) {
                cb[i] = cx[i] - rs.positive_coeffs[a][i];
                if (cb[i] < 0) nonneg = false;
            }
            if (!nonneg) continue;
            long b = rs.find_positive(cb);
            if (b < 0 || static_cast<std::size_t>(b) <= a) continue;
            if (ext_a < 0) {
                // N = p + 1 where beta - p alpha is the bottom of the alpha-string through beta.
                int p = 0;
                std::vector<int> down = cb;
                while (true) {
                    for (std::size_t i = 0; i < down.size(); ++i) down[i] -= rs.positive_coeffs[a][i];
                    if (rs.find_positive(down) < 0) break;
                    ++p;
                }
                ext_a = static_cast<long>(a);
                ext_b = b;
                ext_n = p + 1;
                special_[{a, static_cast<std::size_t>(b)}] = ext_n;
                continue;
            }
            // Non-extraspecial special pair: derived from the four-root relation.
            const std::size_t al = a, be = static_cast<std::size_t>(b);
            const std::size_t al1 = static_cast<std::size_t>(ext_a), be1 = static_cast<std::size_t>(ext_b);
            auto term = [&](std::size_t x, std::size_t y_neg, std::size_t u, std::size_t v_neg, std::size_t s1, std::size_t s2neg) {
                // N(x, -y) N(u, -v) / (x - y)^2 where x - y must be a root.
                std::vector<int> d(cx.size());
                for (std::size_t i = 0; i < d.size(); ++i) d[i] = rs.positive_coeffs[s1][i] - rs.positive_coeffs[s2neg][i];
                long id = find(d);
                if (id < 0) return Rational(0);
                Rational n1 = N_rat(x, negate(y_neg));
                Rational n2 = N_rat(u, negate(v_neg));
                return n1 * n2 / length2(static_cast<std::size_t>(id));
            };
            // term1: N(beta, -alpha') N(alpha, -beta') / (beta - alpha')^2
            Rational t1 = term(be, al1, al, be1, be, al1);
            // term2: N(-alpha', alpha) N(beta, -beta') / (alpha - alpha')^2
            Rational t2;
            {
                std::vector<int> d(cx.size());
                for (std::size_t i = 0; i < d.size(); ++i) d[i] = rs.positive_coeffs[al][i] - rs.positive_coeffs[al1][i];
                long id = find(d);
                if (id >= 0) t2 = N_rat(negate(al1), al) * N_rat(be, negate(be1)) / length2(static_cast<std::size_t>(id));
            }
            Rational n = len2_[xi] / Rational(ext_n) * (t1 + t2);
            special_[{al, be}] = n.to_int();
        }
    }
}

std::vector<int> ChevalleyConstants::coeffs(std::size_t id) const {
    std::vector<int> c = rs_->positive_coeffs[id % P_];
    if (id >= P_)
        for (auto& x : c) x = -x;
    return c;
}

long ChevalleyConstants::find(const std::vector<int>& c) const {
    bool any_pos = false, any_neg = false;
    for (int x : c) {
        any_pos |= x > 0;
        any_neg |= x < 0;
    }
    if (any_pos == any_neg) return -1;
    if (any_pos) return rs_->find_positive(c);
    std::vector<int> m = c;
    for (auto& x : m) x = -x;
    long k = rs_->find_positive(m);
    return k < 0 ? -1 : static_cast<long>(P_) + k;
}

long long ChevalleyConstants::N_pos(std::size_t a, std::size_t b) const {
    if (a < b) {
        auto it = special_.find({a, b});
        return it == special_.end() ? 0 : it->second;
    }
    auto it = special_.find({b, a});
    return it == special_.end() ? 0 : -it->second;
}

Rational ChevalleyConstants::N_rat(std::size_t a, std::size_t b) const { return Rational(N(a, b)); }

long long ChevalleyConstants::N(std::size_t a, std::size_t b) const {
    const bool pa = a < P_, pb = b < P_;
    if (pa && pb) return N_pos(a, b);
    if (!pa && !pb) return -N_pos(a - P_, b - P_);
    if (!pa && pb) return -N(b, a);
    // a positive, b negative: use the three-root relation to move to a same-sign pair.
    std::vector<int> ca = coeffs(a), cb = coeffs(b), s(ca.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = ca[i] + cb[i];
    long sid = find(s);
    if (sid < 0) return 0;
    const std::size_t beta = negate(b);
    Rational r;
    if (static_cast<std::size_t>(sid) < P_) {
        r = length2(sid) / length2(a) * Rational(-N(beta, static_cast<std::size_t>(sid)));
    } else {
        r = length2(sid) / length2(beta) * Rational(N(negate(static_cast<std::size_t>(sid)), a));
    }
    return r.to_int();
}

}  // namespace tkk
