#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "pencil/correction.hpp"
#include "pencil/decomposition.hpp"
#include "pencil/gf_oracle.hpp"
#include "pencil/rank.hpp"
#include "pencil/witness.hpp"

namespace pencil::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pencil-rank/1";

/// {"schema", "m", "n", "slices": [A rows, B rows]} with "p/q" entry strings.
Json tensor_document(const Pencil2& t, std::optional<Field> field = std::nullopt);
Pencil2 parse_tensor(const Json& doc);
std::optional<Field> document_field(const Json& doc);
std::optional<int> document_q(const Json& doc);
/// Entries read as nonnegative integers reduced mod q.
GFTensor parse_gf_tensor(const Json& doc, int q);
Json gf_document(const GFTensor& t);

Json structure_report(const Pencil2& t);
Json rank_report(const Pencil2& t, Field field);
Json maxrank_report(int m, int n);
Json borderrank_report(const Pencil2& t, Field field);
Json correction_report(const Pencil2& t, Field field, BudgetMode mode);
Json decomposition_report(const Pencil2& t, Field field);
Json oracle_report(const GFTensor& t, std::optional<int> atmost, int threads);
Json equivalence_report(const Pencil2& x, const Pencil2& y);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace pencil::cli
