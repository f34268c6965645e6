#include "degbern/render.hpp"

#include <sstream>

#include "degbern/errors.hpp"

namespace degbern {

namespace {

std::string latex_rational_magnitude(const Rational& r) {
  const mpz_class num = abs(r.numerator());
  if (r.is_integer()) return num.get_str();
  return "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

std::string column_type_name(ColumnType t) {
  switch (t) {
    case ColumnType::index: return "index";
    case ColumnType::scalar: return "scalar";
    case ColumnType::flag: return "flag";
    case ColumnType::text: return "text";
  }
  return "text";
}

ColumnType column_type_from_name(const std::string& s) {
  if (s == "index") return ColumnType::index;
  if (s == "scalar") return ColumnType::scalar;
  if (s == "flag") return ColumnType::flag;
  if (s == "text") return ColumnType::text;
  throw ParseError("unknown column type '" + s + "'");
}

Json cell_to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Scalar>) {
          return scalar_to_json(v);
        } else {
          return v;
        }
      },
      cell);
}

std::string cell_to_csv(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Scalar>) {
          const std::string text = scalar_to_text(v);
          return v.is_symbolic() ? "\"" + text + "\"" : text;
        } else {
          return csv_escape(v);
        }
      },
      cell);
}

std::string cell_to_latex(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "yes" : "no";
        } else if constexpr (std::is_same_v<T, Scalar>) {
          return "$" + scalar_to_latex(v) + "$";
        } else {
          return latex_escape(v);
        }
      },
      cell);
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (!s.is_symbolic()) return s.rational().to_string();
  Json arr = Json::array();
  for (const auto& c : s.poly().coeffs()) arr.push_back(c.to_string());
  return arr;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
      if (!c.is_string()) throw ParseError("polynomial coefficient must be a string");
      coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return LambdaPoly(std::move(coeffs));
  }
  throw ParseError("scalar must be a rational string or an array of them");
}

std::string scalar_to_text(const Scalar& s) { return s.to_string(); }

std::string scalar_to_latex(const Scalar& s) {
  if (!s.is_symbolic()) {
    const Rational& r = s.rational();
    return (r.sign() < 0 ? "-" : "") + latex_rational_magnitude(r);
  }
  const auto& coeffs = s.poly().coeffs();
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const bool unit = abs(c.numerator()) == 1 && c.is_integer();
    if (i == 0 || !unit) out += latex_rational_magnitude(c);
    if (i >= 1) out += "\\lambda";
    if (i >= 2) out += "^{" + std::to_string(i) + "}";
  }
  return out;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

Json meta_to_json(const DocumentMeta& meta) {
  Json j;
  j["artifact_version"] = meta.artifact_version;
  j["command"] = meta.command;
  j["lambda"] = meta.lambda ? Json(*meta.lambda) : Json(nullptr);
  j["order"] = meta.order ? Json(*meta.order) : Json(nullptr);
  return j;
}

Json table_to_json(const Table& table) {
  Json j;
  j["name"] = table.name;
  Json cols = Json::array();
  for (const auto& c : table.columns) cols.push_back(Json{{"name", c.name}, {"type", column_type_name(c.type)}});
  j["columns"] = cols;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c].name] = cell_to_json(row.at(c));
    rows.push_back(std::move(obj));
  }
  j["rows"] = rows;
  return j;
}

Table table_from_json(const Json& j) {
  Table table;
  table.name = j.at("name").get<std::string>();
  for (const auto& c : j.at("columns")) {
    table.columns.push_back({c.at("name").get<std::string>(), column_type_from_name(c.at("type").get<std::string>())});
  }
  for (const auto& obj : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& col : table.columns) {
      const Json& v = obj.at(col.name);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
        continue;
      }
      switch (col.type) {
        case ColumnType::index: row.emplace_back(v.get<long>()); break;
        case ColumnType::scalar: row.emplace_back(scalar_from_json(v)); break;
        case ColumnType::flag: row.emplace_back(v.get<bool>()); break;
        case ColumnType::text: row.emplace_back(v.get<std::string>()); break;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_json(const DocumentMeta& meta, const std::vector<Table>& tables) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["meta"] = meta_to_json(meta);
  Json list = Json::array();
  for (const auto& t : tables) list.push_back(table_to_json(t));
  doc["payload"] = Json{{"tables", list}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const DocumentMeta& meta, const std::vector<Table>& tables) {
  std::ostringstream out;
  out << "# " << meta.command << "\n";
  for (const auto& table : tables) {
    out << "# table: " << table.name << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_escape(table.columns[c].name);
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_to_csv(row[c]);
      out << "\n";
    }
  }
  return out.str();
}

std::string render_latex(const DocumentMeta& meta, const std::vector<Table>& tables) {
  std::ostringstream out;
  out << "% " << meta.command << "\n";
  for (const auto& table : tables) {
    out << "% table: " << latex_escape(table.name) << "\n";
    out << "\\begin{tabular}{" << std::string(table.columns.size(), 'l') << "}\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? " & " : "") << latex_escape(table.columns[c].name);
    }
    out << " \\\\\n\\hline\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " & " : "") << cell_to_latex(row[c]);
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
  }
  return out.str();
}

std::string render(Format format, const DocumentMeta& meta, const std::vector<Table>& tables) {
  switch (format) {
    case Format::json: return render_json(meta, tables);
    case Format::csv: return render_csv(meta, tables);
    case Format::latex: return render_latex(meta, tables);
  }
  return {};
}

}  // namespace degbern
