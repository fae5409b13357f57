#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tkk/claims.hpp"
#include "tkk/constructions.hpp"
#include "tkk/exchange.hpp"
#include "tkk/parallel.hpp"

using namespace tkk;

namespace {

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << text;
}

std::vector<std::size_t> parse_nodes(const std::string& text) {
    std::vector<std::size_t> nodes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) nodes.push_back(std::stoul(item));
    return nodes;
}

LieAlgebraPtr load_lie(const std::string& path) {
    return std::make_shared<const LieAlgebra>(lie_from_json(read_exchange_file(path)));
}

/// Subalgebra of `target` spanned by the inclusion columns of `source`, after checking that the
/// inclusion is an injective homomorphism.
Subalgebra included_subalgebra(const LieAlgebra& source, const ExchangeInclusion& inc, const LieAlgebraPtr& target) {
    if (inc.target_dim != target->dim()) throw std::invalid_argument("inclusion target dimension differs from target");
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < source.dim(); ++j) {
        std::vector<SparseEntry> e;
        for (std::size_t r = 0; r < inc.target_dim; ++r)
            if (!inc.matrix(r, j).is_zero()) e.push_back({static_cast<std::uint32_t>(r), inc.matrix(r, j)});
        cols.push_back(SparseVector::from_pairs(std::move(e)));
    }
    auto image = [&](const SparseVector& x) {
        Accumulator acc(target->dim());
        for (const auto& e : x.entries()) acc.add_scaled(cols[e.index], e.value);
        return acc.take();
    };
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = i + 1; j < source.dim(); ++j)
            if (image(source.bracket_basis(i, j)) != target->bracket(cols[i], cols[j]))
                throw std::invalid_argument("inclusion is not a homomorphism at basis pair (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
    Subspace span = Subspace::span(target->dim(), cols);
    if (span.dim() != source.dim()) throw std::invalid_argument("inclusion is not injective");
    return make_subalgebra(target, span);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for symplectic ternary algebras and the TKK construction"};
    app.require_subcommand(1);
    const std::uint64_t seed = default_seed();

    std::string type, in, out, source, target, subsystem, id, format = "json";
    int tier = 0;
    std::size_t exhaustive_limit = 20;
    bool list = false;

    auto* build = app.add_subcommand("build", "Chevalley basis of a split simple Lie algebra");
    build->add_option("--type", type, "type such as E7 or C3")->required();
    build->add_option("--subsystem", subsystem,
                      "comma-separated nodes of the extended diagram (0 = lowest root); writes that subalgebra "
                      "with its inclusion");
    build->add_option("--out", out, "output file (default stdout)");

    auto* extract_cmd = app.add_subcommand("extract", "ternary algebra of the extraspecial grading");
    auto* extract_in = extract_cmd->add_option("--in", in, "Lie algebra exchange file");
    extract_cmd->add_option("--type", type, "type of a Chevalley algebra")->excludes(extract_in);
    extract_cmd->add_option("--out", out, "output file (default stdout)");

    auto* tkk_cmd = app.add_subcommand("tkk", "TKK construction of a ternary algebra");
    tkk_cmd->add_option("--in", in, "ternary algebra exchange file")->required();
    tkk_cmd->add_option("--out", out, "output file (default stdout)");

    auto* axioms = app.add_subcommand("axioms", "check the three axioms");
    axioms->add_option("--in", in, "ternary algebra exchange file")->required();
    axioms->add_option("--exhaustive-limit", exhaustive_limit, "largest dim with exhaustive axiom 3 check");

    auto* identify = app.add_subcommand("identify", "type of a reductive Lie algebra");
    identify->add_option("--in", in, "Lie algebra exchange file")->required();

    auto* index = app.add_subcommand("index", "Dynkin multi-index of an inclusion");
    index->add_option("--source", source, "subalgebra exchange file with an inclusion field")->required();
    index->add_option("--target", target, "ambient Lie algebra exchange file")->required();

    auto* claims = app.add_subcommand("claims", "run the claim registry");
    claims->add_option("--tier", tier, "tier budget (0, 1 or 2)");
    claims->add_option("--id", id, "run a single claim");
    claims->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    claims->add_option("--out", out, "report file (default stdout)");
    claims->add_flag("--list", list, "list the registry instead of running it");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            LieAlgebraPtr g = chevalley_algebra(SimpleType::parse(type));
            if (subsystem.empty()) {
                emit(out, exchange_text(lie_to_json(*g)));
            } else {
                FrameAnalysis fa = decompose(*g);
                Subalgebra s = frame_subsystem(g, fa, 0, parse_nodes(subsystem));
                std::cerr << "subsystem " << identify_type(*s.induced).str() << " (dim " << s.dim() << ")\n";
                emit(out, exchange_text(lie_to_json(*s.induced, ExchangeInclusion{g->dim(), s.inclusion})));
            }
            return 0;
        }
        if (*extract_cmd) {
            LieAlgebraPtr g;
            if (!in.empty())
                g = load_lie(in);
            else if (!type.empty())
                g = chevalley_algebra(SimpleType::parse(type));
            else
                throw std::invalid_argument("extract needs --in or --type");
            TernaryAlgebra a = extract_fts(*g, extraspecial_sl2(*g));
            emit(out, exchange_text(fts_to_json(a)));
            return 0;
        }
        if (*tkk_cmd) {
            TernaryAlgebra a = fts_from_json(read_exchange_file(in));
            emit(out, exchange_text(lie_to_json(*tkk::tkk(a))));
            return 0;
        }
        if (*axioms) {
            TernaryAlgebra a = fts_from_json(read_exchange_file(in));
            AxiomOptions opts;
            opts.exhaustive_limit = exhaustive_limit;
            opts.seed = seed;
            AxiomReport r = check_bsta_axioms(a, opts);
            for (int k = 0; k < 3; ++k) {
                std::cout << "axiom " << k + 1 << ": " << (r.axiom[k].pass ? "pass" : "fail");
                if (!r.axiom[k].pass) {
                    std::cout << " at";
                    for (auto i : r.axiom[k].witness) std::cout << " " << i;
                }
                std::cout << "\n";
            }
            std::cout << "axiom 3 " << (r.axiom3_exhaustive ? "exhaustive" : "sampled") << ", " << r.axiom3_tuples
                      << " quintuples\n";
            return r.all() ? 0 : 1;
        }
        if (*identify) {
            LieAlgebraPtr l = load_lie(in);
            std::cout << identify_type(*l).str() << " (dim " << l->dim() << ")\n";
            return 0;
        }
        if (*index) {
            nlohmann::json doc = read_exchange_file(source);
            auto inc = inclusion_from_json(doc);
            if (!inc) throw std::invalid_argument(source + " has no inclusion field");
            LieAlgebra src = lie_from_json(doc);
            Subalgebra s = included_subalgebra(src, *inc, load_lie(target));
            std::cout << multi_index(s).str() << "\n";
            return 0;
        }
        if (*claims) {
            if (list) {
                for (const auto& c : list_claims())
                    std::cout << c.id << " (tier " << c.tier << ") " << c.title << ": " << c.anchor << "\n";
                return 0;
            }
            std::vector<Claim> selected = id.empty() ? list_claims() : list_claims(id);
            if (selected.empty()) throw std::invalid_argument("unknown claim id " + id);
            std::vector<ClaimResult> results(selected.size());
            parallel_for(selected.size(), [&](std::size_t i, std::size_t) {
                results[i] = run_claim(selected[i].id, RunOptions{tier, seed});
            });
            bool ok = true;
            for (const auto& r : results) {
                ok &= r.status != Status::fail;
                std::cerr << r.id << " " << status_name(r.status) << " (" << r.runtime_seconds << " s)\n";
            }
            emit(out, emit_report(results, format == "text" ? ReportFormat::text : ReportFormat::json, tier));
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
