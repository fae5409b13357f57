#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tkk/fts.hpp"

namespace tkk {

/// Structure tensor file contents. "lie" entries are [i, j, k, "n/d"] for [b_i, b_j] = sum c b_k;
/// "fts" and "lts" entries are [i, j, k, l, "n/d"] for the coefficient of b_l in the triple product
/// of b_i, b_j, b_k. Ternary algebras carry a "gram" matrix. A Lie algebra may carry an "inclusion"
/// (entries [row, col, "n/d"] of a target_dim x dim matrix) describing it as a subalgebra.
struct ExchangeInclusion {
    std::size_t target_dim = 0;
    Matrix matrix;  ///< target_dim x dim
};

nlohmann::json lie_to_json(const LieAlgebra& l, const std::optional<ExchangeInclusion>& inclusion = std::nullopt);
nlohmann::json fts_to_json(const TernaryAlgebra& a);
nlohmann::json lts_to_json(const LieTripleSystem& m, const std::vector<std::string>& labels = {});

/// Parsers throw std::invalid_argument on a wrong kind, malformed entry or out-of-range index.
LieAlgebra lie_from_json(const nlohmann::json& doc);
std::optional<ExchangeInclusion> inclusion_from_json(const nlohmann::json& doc);
TernaryAlgebra fts_from_json(const nlohmann::json& doc);
LieTripleSystem lts_from_json(const nlohmann::json& doc);

/// Canonical text of a document (two-space indentation, keys sorted, trailing newline).
std::string exchange_text(const nlohmann::json& doc);
nlohmann::json read_exchange_file(const std::string& path);
void write_exchange_file(const std::string& path, const nlohmann::json& doc);

}  // namespace tkk
