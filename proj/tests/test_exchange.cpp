#include <gtest/gtest.h>

#include <cstdio>
#include <random>

#include "tkk/constructions.hpp"
#include "tkk/exchange.hpp"

using namespace tkk;
using nlohmann::json;

namespace {

void expect_same_lie(const LieAlgebra& a, const LieAlgebra& b) {
    ASSERT_EQ(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) ASSERT_EQ(a.bracket_basis(i, j), b.bracket_basis(i, j)) << i << "," << j;
}

void expect_same_fts(const TernaryAlgebra& a, const TernaryAlgebra& b) {
    ASSERT_EQ(a.dim(), b.dim());
    EXPECT_EQ(a.gram(), b.gram());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) ASSERT_EQ(a.product_basis(i, j, k), b.product_basis(i, j, k));
}

/// Random rational with numerator and denominator beyond 64 bits about half of the time.
Rational random_rational(std::mt19937_64& rng) {
    mpz_class num = static_cast<long>(rng() % 2001) - 1000;
    mpz_class den = static_cast<long>(rng() % 97) + 1;
    if (rng() % 2) {
        num *= mpz_class("123456789012345678901234567");
        den *= mpz_class("98765432109876543210987");
    }
    return Rational(mpq_class(num, den));
}

/// Random antisymmetric bracket table (not necessarily a Lie algebra; the format does not care).
LieAlgebra random_table(std::mt19937_64& rng, std::size_t n) {
    std::vector<SparseVector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<SparseEntry> e;
            for (std::size_t k = 0; k < n; ++k)
                if (rng() % 3 == 0) e.push_back({static_cast<std::uint32_t>(k), random_rational(rng)});
            table[i * n + j] = SparseVector::from_pairs(std::move(e));
            table[j * n + i] = -table[i * n + j];
        }
    return LieAlgebra(n, std::move(table));
}

}  // namespace

TEST(Exchange, LieRoundTripIsBitExact) {
    for (const char* name : {"A1", "G2", "F4"}) {
        auto g = chevalley_algebra(SimpleType::parse(name));
        const std::string text = exchange_text(lie_to_json(*g));
        LieAlgebra back = lie_from_json(json::parse(text));
        expect_same_lie(*g, back);
        EXPECT_EQ(back.labels(), g->labels());
        EXPECT_EQ(exchange_text(lie_to_json(back)), text) << name;
    }
}

TEST(Exchange, LieEntriesUseZeroBasedIndicesAndFractionStrings) {
    auto g = chevalley_algebra(SimpleType::parse("A1"));
    json doc = lie_to_json(*g);
    EXPECT_EQ(doc["kind"], "lie");
    EXPECT_EQ(doc["dim"], 3);
    EXPECT_EQ(doc["labels"].size(), 3u);
    std::size_t entries = 0;
    for (const auto& e : doc["entries"]) {
        ASSERT_EQ(e.size(), 4u);
        EXPECT_LT(e[0].get<std::size_t>(), 3u);
        const std::string c = e[3].get<std::string>();
        EXPECT_NE(c.find('/'), std::string::npos);
        ++entries;
    }
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) nonzero += g->bracket_basis(i, j).nnz();
    EXPECT_EQ(entries, nonzero);
}

TEST(Exchange, RandomTablesWithLargeRationalsRoundTripProperty) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        LieAlgebra l = random_table(rng, 2 + rng() % 6);
        const std::string text = exchange_text(lie_to_json(l));
        LieAlgebra back = lie_from_json(json::parse(text));
        expect_same_lie(l, back);
        EXPECT_EQ(exchange_text(lie_to_json(back)), text);
    }
}

TEST(Exchange, FtsRoundTripKeepsGramAndProduct) {
    for (const char* name : {"C3", "D4"}) {
        auto g = chevalley_algebra(SimpleType::parse(name));
        TernaryAlgebra a = extract_fts(*g, extraspecial_sl2(*g));
        const std::string text = exchange_text(fts_to_json(a));
        TernaryAlgebra back = fts_from_json(json::parse(text));
        expect_same_fts(a, back);
        EXPECT_EQ(exchange_text(fts_to_json(back)), text) << name;
        EXPECT_TRUE(check_bsta_axioms(back).all());
    }
}

TEST(Exchange, LtsRoundTrip) {
    auto g = chevalley_algebra(SimpleType::parse("G2"));
    LieTripleSystem m = lts_from_fts(extract_fts(*g, extraspecial_sl2(*g)));
    const std::string text = exchange_text(lts_to_json(m));
    LieTripleSystem back = lts_from_json(json::parse(text));
    EXPECT_EQ(back.dim, m.dim);
    EXPECT_EQ(back.triple, m.triple);
    EXPECT_EQ(exchange_text(lts_to_json(back)), text);
}

TEST(Exchange, InclusionRoundTrip) {
    auto g = chevalley_algebra(SimpleType::parse("B3"));
    FrameAnalysis fa = decompose(*g);
    Subalgebra s = frame_subsystem(g, fa, 0, {1, 2});
    json doc = lie_to_json(*s.induced, ExchangeInclusion{g->dim(), s.inclusion});
    auto inc = inclusion_from_json(json::parse(exchange_text(doc)));
    ASSERT_TRUE(inc.has_value());
    EXPECT_EQ(inc->target_dim, g->dim());
    EXPECT_EQ(inc->matrix, s.inclusion);
    EXPECT_FALSE(inclusion_from_json(lie_to_json(*g)).has_value());
}

TEST(Exchange, RejectsMalformedDocuments) {
    auto g = chevalley_algebra(SimpleType::parse("A1"));
    json doc = lie_to_json(*g);

    json wrong_kind = doc;
    wrong_kind["kind"] = "fts";
    EXPECT_THROW(lie_from_json(wrong_kind), std::invalid_argument);

    json out_of_range = doc;
    out_of_range["entries"].push_back({0, 1, 3, "1/1"});
    EXPECT_THROW(lie_from_json(out_of_range), std::invalid_argument);

    json bad_value = doc;
    bad_value["entries"][0][3] = "one";
    EXPECT_THROW(lie_from_json(bad_value), std::invalid_argument);

    json short_entry = doc;
    short_entry["entries"].push_back({0, 1});
    EXPECT_THROW(lie_from_json(short_entry), std::invalid_argument);

    json not_antisymmetric = doc;
    not_antisymmetric["entries"].push_back({0, 1, 0, "1/1"});
    EXPECT_THROW(lie_from_json(not_antisymmetric), std::invalid_argument);

    json labels = doc;
    labels["labels"].push_back("extra");
    EXPECT_THROW(lie_from_json(labels), std::invalid_argument);
}

TEST(Exchange, FilesRoundTrip) {
    auto g = chevalley_algebra(SimpleType::parse("C2"));
    const std::string path = ::testing::TempDir() + "tkk_exchange_c2.json";
    json doc = lie_to_json(*g);
    write_exchange_file(path, doc);
    EXPECT_EQ(exchange_text(read_exchange_file(path)), exchange_text(doc));
    std::remove(path.c_str());
    EXPECT_THROW(read_exchange_file(path), std::invalid_argument);
}
