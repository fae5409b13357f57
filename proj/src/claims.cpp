#include "tkk/claims.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tkk/constructions.hpp"

namespace tkk {

const char* const tool_version = "1.0.0";

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

void ClaimRun::check(const std::string& name, int tier, const std::function<bool(ReportJson&)>& body) {
    CheckResult r;
    r.name = name;
    r.tier = tier;
    r.witness = ReportJson::object();
    if (tier > opts_.tier_budget) {
        r.status = Status::skipped;
        r.witness["reason"] = "tier " + std::to_string(tier) + " above budget " + std::to_string(opts_.tier_budget);
    } else {
        try {
            r.status = body(r.witness) ? Status::pass : Status::fail;
        } catch (const std::exception& e) {
            r.status = Status::fail;
            r.witness["error"] = e.what();
        }
    }
    checks_.push_back(std::move(r));
}

namespace {

// ---------------------------------------------------------------- shared inputs

/// Memoizes expensive shared inputs; safe for claims running in parallel.
template <class Key, class Value>
class Memo {
public:
    template <class Make>
    std::shared_ptr<const Value> get(const Key& key, Make&& make) {
        std::shared_ptr<Slot> slot;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto& s = slots_[key];
            if (!s) s = std::make_shared<Slot>();
            slot = s;
        }
        std::call_once(slot->once, [&] { slot->value = std::make_shared<const Value>(make()); });
        return slot->value;
    }

private:
    struct Slot {
        std::once_flag once;
        std::shared_ptr<const Value> value;
    };
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<Slot>> slots_;
};

struct Extracted {
    LieAlgebraPtr algebra;
    FtsExtraction ex;
};

std::shared_ptr<const Extracted> extracted(const std::string& type) {
    static Memo<std::string, Extracted> memo;
    return memo.get(type, [&] {
        Extracted e;
        e.algebra = chevalley_algebra(SimpleType::parse(type));
        e.ex = extract(*e.algebra, extraspecial_sl2(*e.algebra));
        return e;
    });
}

std::shared_ptr<const E8Setting> e8_setting() {
    static Memo<int, E8Setting> memo;
    return memo.get(0, [] { return build_e8_setting(); });
}

std::shared_ptr<const CentralizerChain> centralizer_chain() {
    static Memo<int, CentralizerChain> memo;
    return memo.get(0, [] { return build_centralizer_chain(); });
}

struct EightDim {
    FixingD4 k;
    IntersectionWitness witness;
    std::optional<EightDimAnalysis> analysis;
};

std::shared_ptr<const EightDim> eight_dim(std::uint64_t seed) {
    static Memo<std::uint64_t, EightDim> memo;
    return memo.get(seed, [&] {
        auto s = e8_setting();
        EightDim d;
        d.k = fixing_d4(*s);
        d.witness = generic_witness(*s, d.k, seed);
        if (d.witness.closed && d.witness.meet.dim() == 8) d.analysis = analyze_eight(*s, d.witness);
        return d;
    });
}

// ---------------------------------------------------------------- payload helpers

const std::vector<std::string> base_types = {"C2", "C3", "B3", "B4", "D4", "G2", "F4", "E6", "E7"};

int type_tier(const std::string& type) { return type == "E8" ? 2 : 0; }

std::vector<std::string> types_with_e8() {
    auto t = base_types;
    t.push_back("E8");
    return t;
}

/// dim L1 of the extraspecial grading from the classical series and the exceptional table.
std::size_t expected_l1_dim(const SimpleType& t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case Family::A: return 2 * n - 2;
        case Family::B: return 4 * n - 6;
        case Family::C: return 2 * n - 2;
        case Family::D: return 4 * n - 8;
        case Family::G: return 4;
        case Family::F: return 14;
        case Family::E: return n == 6 ? 20 : n == 7 ? 32 : 56;
    }
    return 0;
}

ReportJson rational_json(const Rational& r) { return r.str(); }

ReportJson multi_index_json(const MultiIndex& m) {
    ReportJson out = ReportJson::object();
    ReportJson src = ReportJson::array(), tgt = ReportJson::array(), mat = ReportJson::array();
    for (const auto& t : m.source) src.push_back(t.name());
    for (const auto& t : m.target) tgt.push_back(t.name());
    for (const auto& row : m.matrix) {
        ReportJson r = ReportJson::array();
        for (const auto& v : row) r.push_back(rational_json(v));
        mat.push_back(r);
    }
    out["source"] = src;
    out["target"] = tgt;
    out["matrix"] = mat;
    return out;
}

ReportJson parts_json(const std::vector<IsotypicComponent>& parts) {
    ReportJson out = ReportJson::array();
    for (const auto& p : parts) out.push_back({{"highest", p.highest}, {"multiplicity", p.multiplicity}, {"dim", p.dim}});
    return out;
}

ReportJson axioms_json(const AxiomReport& r) {
    ReportJson out = ReportJson::object();
    for (int k = 0; k < 3; ++k) {
        ReportJson a = {{"pass", r.axiom[k].pass}};
        if (!r.axiom[k].pass) {
            a["witness"] = r.axiom[k].witness;
            a["residual_nnz"] = r.axiom[k].residual.nnz();
        }
        out["axiom" + std::to_string(k + 1)] = a;
    }
    out["axiom3_exhaustive"] = r.axiom3_exhaustive;
    out["axiom3_tuples"] = r.axiom3_tuples;
    return out;
}

using Parts = std::vector<std::pair<std::vector<long long>, std::size_t>>;

/// Highest weight -> multiplicity, compared as a multiset.
bool same_parts(const std::vector<IsotypicComponent>& parts, Parts expected) {
    Parts got;
    for (const auto& p : parts) got.emplace_back(p.highest, p.multiplicity);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    return got == expected;
}

std::size_t total_dim(const std::vector<IsotypicComponent>& parts) {
    std::size_t d = 0;
    for (const auto& p : parts) d += p.dim * p.multiplicity;
    return d;
}

std::vector<std::vector<Rational>> column(std::initializer_list<int> v) {
    std::vector<std::vector<Rational>> out;
    for (int x : v) out.push_back({Rational(x)});
    return out;
}

// ---------------------------------------------------------------- claim procedures

void grading_shapes(ClaimRun& run) {
    for (const auto& name : types_with_e8())
        run.check(name + " grading", type_tier(name), [&](ReportJson& w) {
            auto e = extracted(name);
            const SimpleType t = SimpleType::parse(name);
            const auto dims = e->ex.grading.five_dims();
            const std::size_t d = e->algebra->dim(), m = expected_l1_dim(t);
            const std::vector<std::size_t> expected = {1, m, d - 2 * m - 2, m, 1};
            w["type"] = name;
            w["dim"] = d;
            w["dims"] = dims;
            w["expected"] = expected;
            return dims == expected && e->ex.grading.is_extraspecial();
        });
}

void axiom_suite(ClaimRun& run) {
    for (const auto& name : types_with_e8()) {
        auto body = [&](std::size_t limit) {
            return [&, limit](ReportJson& w) {
                auto e = extracted(name);
                AxiomOptions opts;
                opts.exhaustive_limit = limit;
                opts.seed = run.options().seed;
                AxiomReport r = check_bsta_axioms(e->ex.fts, opts);
                w["type"] = name;
                w["fts_dim"] = e->ex.fts.dim();
                w["axioms"] = axioms_json(r);
                return r.all();
            };
        };
        const std::size_t dim = expected_l1_dim(SimpleType::parse(name));
        if (dim <= 20) {
            run.check(name + " extraction, exhaustive", 0, body(20));
        } else {
            run.check(name + " extraction, sampled", 1, body(20));
            run.check(name + " extraction, exhaustive", 2, body(dim));
        }
    }
    for (std::size_t n : {2, 4, 6, 8})
        run.check("trivial form, dim " + std::to_string(n), 0, [&](ReportJson& w) {
            AxiomReport r = check_bsta_axioms(trivial_fts(standard_symplectic(n)));
            w["fts_dim"] = n;
            w["axioms"] = axioms_json(r);
            return r.all();
        });
}

void tkk_round_trip(ClaimRun& run) {
    for (const auto& name : types_with_e8())
        run.check(name + " round trip", type_tier(name), [&](ReportJson& w) {
            auto e = extracted(name);
            TkkAlgebra t = tkk_construct(e->ex.fts);
            TypeLabel label = identify_tkk(t);
            w["type"] = name;
            w["fts_dim"] = t.fts_dim;
            w["inder_dim"] = t.inder_dim;
            w["tkk_dim"] = t.algebra->dim();
            w["identified"] = label.str();
            return t.algebra->dim() == e->algebra->dim() && label.str() == name;
        });
}

void simplicity(ClaimRun& run) {
    for (const auto& name : types_with_e8())
        run.check(name + " extraction simple", type_tier(name), [&](ReportJson& w) {
            auto e = extracted(name);
            SimplicityReport r = fts_is_simple(e->ex.fts, run.options().seed);
            w["type"] = name;
            w["fts_dim"] = e->ex.fts.dim();
            w["simple"] = r.simple;
            w["decided_by_radical"] = r.exact;
            if (!r.simple) w["ideal_dim"] = r.witness.dim();
            return r.simple;
        });
}

void centralizer_chain_claim(ClaimRun& run) {
    run.check("E7 > D6 > D4+A1, 3A1 > D4", 0, [&](ReportJson& w) {
        auto c = centralizer_chain();
        w["E7"] = {{"dim", c->e7->dim()}, {"centralizer_dim", c->d6.dim()}, {"type", c->d6_type.str()}};
        w["D6"] = {{"centralizer_dim", c->d4a1.dim()}, {"type", c->d4a1_type.str()}};
        w["3A1"] = {{"dim", c->three_a1.dim()}, {"type", c->three_a1_type.str()},
                    {"centralizer_dim", c->d4.dim()}, {"centralizer_type", c->d4_type.str()}};
        return c->d6.dim() == 66 && c->d6_type.str() == "D6" && c->d4a1.dim() == 31 && c->d4a1_type.str() == "D4+A1" &&
               c->three_a1_type.str() == "3A1" && c->d4.dim() == 28 && c->d4_type.str() == "D4";
    });
}

void dynkin_indices(ClaimRun& run) {
    run.check("D6 vector representation", 0, [&](ReportJson& w) {
        Rational v = rep_dynkin_index(build_root_system(SimpleType::parse("D6")), Weight{{1, 0, 0, 0, 0, 0}});
        w["highest"] = {1, 0, 0, 0, 0, 0};
        w["index"] = rational_json(v);
        return v == Rational(2);
    });
    run.check("E7 56-dim representation", 0, [&](ReportJson& w) {
        Rational v = rep_dynkin_index(build_root_system(SimpleType::parse("E7")), Weight{{0, 0, 0, 0, 0, 0, 1}});
        w["highest"] = {0, 0, 0, 0, 0, 0, 1};
        w["index"] = rational_json(v);
        return v == Rational(12);
    });
    run.check("highest root sl2 in E7", 0, [&](ReportJson& w) {
        auto c = centralizer_chain();
        Sl2Triple t = root_triple(*c->e7, c->fa7, c->fa7.components[0].highest);
        Subalgebra s = generate_subalgebra(c->e7, {t.e, t.f});
        Rational j = embedding_index(s, nullptr, &c->fa7);
        w["subalgebra_dim"] = s.dim();
        w["index"] = rational_json(j);
        return j == Rational(1);
    });
    run.check("intersection D4 in E7", 0, [&](ReportJson& w) {
        auto d = eight_dim(run.options().seed);
        w["meet_dim"] = d->witness.meet.dim();
        if (!d->analysis) return false;
        w["d4_dim"] = d->analysis->d4.dim();
        w["e7_dim"] = d->analysis->e7_prime.dim();
        w["multi_index"] = multi_index_json(d->analysis->d4_in_e7);
        const MultiIndex& m = d->analysis->d4_in_e7;
        return m.str() == "D4 -> E7 [[1]]";
    });
}

ReportJson witness_json(const IntersectionWitness& iw, const E8Setting& s) {
    return {{"conjugator", iw.conjugator},
            {"attempts", iw.attempts},
            {"u1_dim", s.u1.dim()},
            {"u2_dim", iw.u2.dim()},
            {"meet_dim", iw.meet.dim()},
            {"closure_dim", iw.closure_dim},
            {"closed", iw.closed},
            {"lower_bound", 2 * s.u1.dim() - s.ex.fts.dim()}};
}

void intersection_bound(ClaimRun& run) {
    run.check("U1 is a 32-dim sub-algebra of L1", 1, [&](ReportJson& w) {
        auto s = e8_setting();
        w["l1_dim"] = s->ex.fts.dim();
        w["u1_dim"] = s->u1.dim();
        const std::size_t closure = fts_subalgebra_closure(s->ex.fts, s->u1.basis()).dim();
        w["closure_dim"] = closure;
        return s->u1.dim() == 32 && closure == 32;
    });
    run.check("configured root conjugator", 1, [&](ReportJson& w) {
        auto s = e8_setting();
        IntersectionWitness iw = single_root_witness(*s);
        w = witness_json(iw, *s);
        return iw.u2 != s->u1 && iw.meet.dim() >= 8 && iw.closed;
    });
    run.check("dimension-8 conjugator", 1, [&](ReportJson& w) {
        auto s = e8_setting();
        auto d = eight_dim(run.options().seed);
        w = witness_json(d->witness, *s);
        w["fixing_algebra"] = d->k.fa.label.str();
        w["fixed_dim"] = d->k.fixed.dim();
        w["meet_is_fixed_space"] = d->witness.meet == d->k.fixed;
        return d->k.fa.label.str() == "D4" && d->witness.meet.dim() == 8 && d->witness.closed &&
               d->witness.meet == d->k.fixed;
    });
    run.check("dimension-8 intersection structure", 1, [&](ReportJson& w) {
        auto d = eight_dim(run.options().seed);
        if (!d->analysis) {
            w["meet_dim"] = d->witness.meet.dim();
            return false;
        }
        const EightDimAnalysis& a = *d->analysis;
        w["axioms"] = axioms_json(a.axioms);
        w["simple"] = a.simple.simple;
        w["tkk_type"] = a.tkk_type.str();
        w["inder_dim"] = a.inder_dim;
        w["inder_derived_type"] = a.inder_derived_type.str();
        w["generated_by_sl2_and_u"] = {{"dim", a.d4.dim()}, {"type", a.d4_type.str()}};
        w["generated_by_sl2_and_u1"] = {{"dim", a.e7_prime.dim()}, {"type", a.e7_prime_type.str()}};
        return a.axioms.all() && a.simple.simple && a.tkk_type.str() == "D4" && a.inder_derived_type.str() == "3A1" &&
               a.d4_type.str() == "D4" && a.e7_prime_type.str() == "E7";
    });
}

void branching(ClaimRun& run) {
    run.check("L1 restricted to D6", 0, [&](ReportJson& w) {
        auto s = e8_setting();
        const std::vector<long long> spinor = {0, 0, 0, 0, 1, 0}, vector = {1, 0, 0, 0, 0, 0};
        w["parts"] = parts_json(s->l1_branching);
        // Weight multiset of spinor + 2 vector from the root-system side.
        RootSystem rs = build_root_system(SimpleType::parse("D6"));
        std::map<std::vector<long long>, std::size_t> oracle;
        for (const auto& [wt, mult] : weight_multiset(rs, Weight{spinor})) oracle[wt] += static_cast<std::size_t>(mult);
        for (const auto& [wt, mult] : weight_multiset(rs, Weight{vector})) oracle[wt] += 2 * static_cast<std::size_t>(mult);
        const bool weights = module_weight_labels(s->l1_d6, s->fa6) == oracle;
        w["weights_match"] = weights;
        w["distinct_weights"] = oracle.size();
        return weights && same_parts(s->l1_branching, {{spinor, 1}, {vector, 2}});
    });
    run.check("vector summand restricted to 3A1", 0, [&](ReportJson& w) {
        auto s = e8_setting();
        VectorBranching vb = branch_vector_to_three_a1(*s);
        w["module_dim"] = vb.vector_module.dim();
        w["three_a1"] = vb.three_a1_type.str();
        w["multi_index_in_d6"] = multi_index_json(vb.three_a1_in_d6);
        w["parts"] = parts_json(vb.parts);
        return vb.vector_module.dim() == 12 && vb.three_a1_type.str() == "3A1" &&
               same_parts(vb.parts, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{0, 0, 0}, 3}});
    });
    run.check("L1 restricted to the index-2 D4 and its 3A1", 2, [&](ReportJson& w) {
        auto s = e8_setting();
        IndexTwoD4 d = build_index_two_d4(*s);
        w["a7"] = d.a7_type.str();
        w["d4"] = d.d4_type.str();
        w["multi_index_in_e7"] = multi_index_json(d.d4_in_e7);
        w["parts"] = parts_json(d.l1_parts);
        w["three_a1"] = d.three_a1_type.str();
        w["three_a1_parts"] = parts_json(d.l1_three_a1_parts);
        w["three_a1_total"] = total_dim(d.l1_three_a1_parts);
        return d.a7_type.str() == "A7" && d.d4_type.str() == "D4" && d.d4_in_e7.matrix == column({2}) &&
               same_parts(d.l1_parts, {{{0, 1, 0, 0}, 2}}) &&
               same_parts(d.l1_three_a1_parts, {{{2, 0, 0}, 2},
                                                {{0, 2, 0}, 2},
                                                {{0, 0, 2}, 2},
                                                {{1, 1, 1}, 4},
                                                {{0, 0, 0}, 6}}) &&
               total_dim(d.l1_three_a1_parts) == 56;
    });
}

void split_gift(ClaimRun& run) {
    for (const auto& [name, tier] : std::vector<std::pair<std::string, int>>{{"C2", 0}, {"G2", 0}, {"E7", 2}})
        run.check(name + " gift reconstruction", tier, [&](ReportJson& w) {
            auto e = extracted(name);
            GiftReport r = split_gift_verify(*e->algebra, e->ex.triple);
            w["type"] = name;
            w["l1_dim"] = r.l1_dim;
            w["module_dim"] = r.module_dim;
            w["pairs"] = r.pairs;
            if (!r.pass) w["witness"] = r.witness;
            return r.pass;
        });
}

void multi_index_composition(ClaimRun& run) {
    run.check("D4+A1 > D6 > E7", 0, [&](ReportJson& w) {
        auto c = centralizer_chain();
        FrameAnalysis f41 = decompose(*c->d4a1.induced);
        MultiIndex inner = multi_index(c->d4a1, &f41, &c->fa6);
        MultiIndex outer = multi_index(c->d6, &c->fa6, &c->fa7);
        MultiIndex whole = multi_index(compose(c->d6, c->d4a1), &f41, &c->fa7);
        const auto product = multiply(inner.matrix, outer.matrix);
        w["inner"] = multi_index_json(inner);
        w["outer"] = multi_index_json(outer);
        w["composite"] = multi_index_json(whole);
        ReportJson p = ReportJson::array();
        for (const auto& row : product) {
            ReportJson r = ReportJson::array();
            for (const auto& v : row) r.push_back(rational_json(v));
            p.push_back(r);
        }
        w["product"] = p;
        return inner.matrix == column({1, 1}) && whole.matrix == product;
    });
}

std::vector<Claim> build_registry() {
    return {
        {"C1", "grading shapes", "extraspecial gradings have one-dimensional ends and symmetric middle pieces", 0,
         grading_shapes},
        {"C2", "axiom suite", "the three balanced symplectic ternary algebra axioms", 0, axiom_suite},
        {"C3", "TKK round trip", "the list of simple algebras produced by the TKK construction", 0, tkk_round_trip},
        {"C4", "simplicity", "reductive TKK forces a simple ternary algebra", 0, simplicity},
        {"C5", "centralizer chain", "centralizers of long-root sl2s in E7 and of the commuting 3A1", 0,
         centralizer_chain_claim},
        {"C6", "Dynkin indices", "indices of the D6 vector module, the E7 56-module and the two E7 subalgebras", 0,
         dynkin_indices},
        {"C7", "intersection bound", "two 32-dim sub-algebras of the 56-dim algebra meet in at least 8 dimensions", 1,
         intersection_bound},
        {"C8", "branching", "restrictions of the 56-dim module to D6, 3A1 and the index-2 D4", 0, branching},
        {"C9", "split gift", "reconstruction of the inner maps from the split gift data", 0, split_gift},
        {"C10", "multi-index composition", "multi-indices compose by matrix product", 0, multi_index_composition},
    };
}

int numeric_id(const std::string& id) {
    try {
        return std::stoi(id.substr(1));
    } catch (const std::exception&) {
        return 1 << 30;
    }
}

}  // namespace

const std::vector<Claim>& list_claims() {
    static const std::vector<Claim> registry = build_registry();
    return registry;
}

std::vector<Claim> list_claims(int tier) {
    std::vector<Claim> out;
    for (const auto& c : list_claims())
        if (c.tier == tier) out.push_back(c);
    return out;
}

std::vector<Claim> list_claims(const std::string& id) {
    std::vector<Claim> out;
    for (const auto& c : list_claims())
        if (c.id == id) out.push_back(c);
    return out;
}

ClaimResult run_claim(const std::string& id, const RunOptions& opts) {
    auto found = list_claims(id);
    if (found.empty()) throw std::invalid_argument("unknown claim id " + id);
    const Claim& c = found.front();
    ClaimResult r;
    r.id = c.id;
    r.title = c.title;
    r.tier = c.tier;
    if (c.tier > opts.tier_budget) return r;
    const auto start = std::chrono::steady_clock::now();
    ClaimRun run(opts);
    c.procedure(run);
    r.checks = run.take();
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool any_pass = false, any_fail = false;
    for (const auto& ch : r.checks) {
        any_pass |= ch.status == Status::pass;
        any_fail |= ch.status == Status::fail;
    }
    r.status = any_fail ? Status::fail : any_pass ? Status::pass : Status::skipped;
    return r;
}

std::string emit_report(std::vector<ClaimResult> results, ReportFormat format, int tier_budget) {
    std::stable_sort(results.begin(), results.end(),
                     [](const ClaimResult& a, const ClaimResult& b) { return numeric_id(a.id) < numeric_id(b.id); });
    if (format == ReportFormat::json) {
        ReportJson doc = ReportJson::object();
        doc["tool"] = "tkkw";
        doc["version"] = tool_version;
        doc["tier_budget"] = tier_budget;
        ReportJson claims = ReportJson::array();
        for (const auto& r : results) {
            ReportJson checks = ReportJson::array();
            for (const auto& ch : r.checks)
                checks.push_back(
                    {{"name", ch.name}, {"tier", ch.tier}, {"status", status_name(ch.status)}, {"witness", ch.witness}});
            claims.push_back({{"id", r.id},
                              {"title", r.title},
                              {"tier", r.tier},
                              {"status", status_name(r.status)},
                              {"checks", checks}});
        }
        doc["claims"] = claims;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "tkkw " << tool_version << " (tier budget " << tier_budget << ")\n";
    for (const auto& r : results) {
        out << r.id << " " << r.title << ": " << status_name(r.status) << "\n";
        for (const auto& ch : r.checks)
            out << "  [" << status_name(ch.status) << "] " << ch.name << " (tier " << ch.tier << ") "
                << ch.witness.dump() << "\n";
    }
    return out.str();
}

}  // namespace tkk
