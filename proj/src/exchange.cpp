#include "tkk/exchange.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tkk {

using nlohmann::json;

namespace {

json labels_json(const std::vector<std::string>& labels, std::size_t dim) {
    json out = json::array();
    for (std::size_t i = 0; i < dim; ++i) out.push_back(i < labels.size() ? labels[i] : "b" + std::to_string(i));
    return out;
}

std::vector<std::string> labels_from(const json& doc, std::size_t dim) {
    std::vector<std::string> out;
    if (!doc.contains("labels")) return out;
    for (const auto& s : doc.at("labels")) out.push_back(s.get<std::string>());
    if (out.size() != dim) throw std::invalid_argument("exchange: label count differs from dim");
    return out;
}

std::size_t dim_of(const json& doc, const char* kind) {
    if (!doc.is_object() || doc.value("kind", "") != kind)
        throw std::invalid_argument(std::string("exchange: expected kind \"") + kind + "\"");
    return doc.at("dim").get<std::size_t>();
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        out.push_back(row);
    }
    return out;
}

/// Reads an entry [i0, ..., i_{n-1}, "n/d"] with every index below `bound`.
std::pair<std::vector<std::size_t>, Rational> entry_from(const json& e, std::size_t indices, std::size_t bound) {
    if (!e.is_array() || e.size() != indices + 1) throw std::invalid_argument("exchange: malformed entry " + e.dump());
    std::vector<std::size_t> idx(indices);
    for (std::size_t k = 0; k < indices; ++k) {
        idx[k] = e[k].get<std::size_t>();
        if (idx[k] >= bound) throw std::invalid_argument("exchange: index out of range in " + e.dump());
    }
    return {idx, Rational::parse(e[indices].get<std::string>())};
}

std::vector<SparseVector> cubic_from(const json& doc, std::size_t n) {
    std::vector<std::vector<SparseEntry>> raw(n * n * n);
    for (const auto& e : doc.at("entries")) {
        auto [idx, value] = entry_from(e, 4, n);
        raw[(idx[0] * n + idx[1]) * n + idx[2]].push_back(SparseEntry{static_cast<std::uint32_t>(idx[3]), value});
    }
    std::vector<SparseVector> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.push_back(SparseVector::from_pairs(std::move(r)));
    return out;
}

json cubic_entries(const std::vector<SparseVector>& product, std::size_t n) {
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& e : product[(i * n + j) * n + k].entries())
                    entries.push_back({i, j, k, e.index, e.value.str()});
    return entries;
}

}  // namespace

json lie_to_json(const LieAlgebra& l, const std::optional<ExchangeInclusion>& inclusion) {
    const std::size_t n = l.dim();
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : l.bracket_basis(i, j).entries()) entries.push_back({i, j, e.index, e.value.str()});
    json doc = {{"kind", "lie"}, {"dim", n}, {"labels", labels_json(l.labels(), n)}, {"entries", entries}};
    if (inclusion) {
        json inc = json::array();
        for (std::size_t r = 0; r < inclusion->matrix.rows(); ++r)
            for (std::size_t c = 0; c < inclusion->matrix.cols(); ++c)
                if (!inclusion->matrix(r, c).is_zero()) inc.push_back({r, c, inclusion->matrix(r, c).str()});
        doc["inclusion"] = {{"target_dim", inclusion->target_dim}, {"entries", inc}};
    }
    return doc;
}

json fts_to_json(const TernaryAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<SparseVector> product;
    product.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) product.push_back(a.product_basis(i, j, k));
    return {{"kind", "fts"},
            {"dim", n},
            {"labels", labels_json(a.labels(), n)},
            {"entries", cubic_entries(product, n)},
            {"gram", matrix_json(a.gram())}};
}

json lts_to_json(const LieTripleSystem& m, const std::vector<std::string>& labels) {
    return {{"kind", "lts"}, {"dim", m.dim}, {"labels", labels_json(labels, m.dim)}, {"entries", cubic_entries(m.triple, m.dim)}};
}

LieAlgebra lie_from_json(const json& doc) {
    const std::size_t n = dim_of(doc, "lie");
    std::vector<std::vector<SparseEntry>> raw(n * n);
    for (const auto& e : doc.at("entries")) {
        auto [idx, value] = entry_from(e, 3, n);
        raw[idx[0] * n + idx[1]].push_back(SparseEntry{static_cast<std::uint32_t>(idx[2]), value});
    }
    std::vector<SparseVector> table;
    table.reserve(raw.size());
    for (auto& r : raw) table.push_back(SparseVector::from_pairs(std::move(r)));
    return LieAlgebra(n, std::move(table), labels_from(doc, n));
}

std::optional<ExchangeInclusion> inclusion_from_json(const json& doc) {
    const std::size_t n = dim_of(doc, "lie");
    if (!doc.contains("inclusion")) return std::nullopt;
    const json& inc = doc.at("inclusion");
    ExchangeInclusion out;
    out.target_dim = inc.at("target_dim").get<std::size_t>();
    out.matrix = Matrix(out.target_dim, n);
    for (const auto& e : inc.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("exchange: malformed inclusion entry " + e.dump());
        std::size_t r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
        if (r >= out.target_dim || c >= n) throw std::invalid_argument("exchange: inclusion index out of range");
        out.matrix(r, c) = Rational::parse(e[2].get<std::string>());
    }
    return out;
}

TernaryAlgebra fts_from_json(const json& doc) {
    const std::size_t n = dim_of(doc, "fts");
    const json& g = doc.at("gram");
    if (g.size() != n) throw std::invalid_argument("exchange: gram size differs from dim");
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i].size() != n) throw std::invalid_argument("exchange: gram row size differs from dim");
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = Rational::parse(g[i][j].get<std::string>());
    }
    return TernaryAlgebra(n, cubic_from(doc, n), std::move(gram), labels_from(doc, n));
}

LieTripleSystem lts_from_json(const json& doc) {
    LieTripleSystem m;
    m.dim = dim_of(doc, "lts");
    m.triple = cubic_from(doc, m.dim);
    return m;
}

std::string exchange_text(const json& doc) { return doc.dump(2) + "\n"; }

json read_exchange_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_exchange_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << exchange_text(doc);
}

}  // namespace tkk
