#pragma once

/**
 * @file render.hpp
 * @brief Serialization of scalars and result tables.
 *
 * JSON: a Rational is the string "p/q" (or "p"); a LambdaPoly is the array of
 * its ascending coefficients in that form. CSV: polynomial cells are quoted
 * canonical strings. LaTeX: ascending powers with explicit signs.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "degbern/scalar.hpp"

namespace degbern {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
/// Inverse of scalar_to_json. Throws ParseError on malformed input.
Scalar scalar_from_json(const Json& j);

/// Plain-text canonical form used in CSV cells (same as Scalar::to_string).
std::string scalar_to_text(const Scalar& s);
/// e.g. "2+9\lambda+7\lambda^{2}", "\frac{1}{2}-\frac{1}{2}\lambda".
std::string scalar_to_latex(const Scalar& s);

enum class ColumnType { index, scalar, flag, text };

struct Column {
  std::string name;
  ColumnType type = ColumnType::scalar;
};

/// std::monostate is an absent cell (ragged triangles).
using Cell = std::variant<std::monostate, long, Scalar, bool, std::string>;

struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

struct DocumentMeta {
  std::string artifact_version;
  std::string command;  ///< canonical command line (no thread count)
  std::optional<std::string> lambda;
  std::optional<long> order;
};

enum class Format { json, csv, latex };

/// Throws ParseError for unknown names.
Format parse_format(std::string_view name);

Json meta_to_json(const DocumentMeta& meta);
Json table_to_json(const Table& table);
/// Inverse of table_to_json, driven by the column types it records.
Table table_from_json(const Json& j);

/// {"schema_version", "meta", "payload": {"tables": [...]}} pretty-printed.
std::string render_json(const DocumentMeta& meta, const std::vector<Table>& tables);
std::string render_csv(const DocumentMeta& meta, const std::vector<Table>& tables);
std::string render_latex(const DocumentMeta& meta, const std::vector<Table>& tables);
std::string render(Format format, const DocumentMeta& meta, const std::vector<Table>& tables);

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace degbern
