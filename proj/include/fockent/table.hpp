// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file table.hpp
 * @brief Result tables and their CSV / JSON encodings.
 *
 * CSV: header row, LF line endings, doubles with 17 significant digits so
 * every value reads back bit-exactly. JSON mirrors the same column names:
 * {"metadata": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}.
 */

#pragma once

#include <fockent/error.hpp>

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace fockent {

/// Empty cell, integer, real, or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json metadata = nlohmann::json::object();

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
      throw InvalidArgument("row has " + std::to_string(row.size()) + " cells, table has " +
                            std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
  }

  [[nodiscard]] std::size_t column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return i;
    throw InvalidArgument("no column named '" + name + "'");
  }

  /// Largest finite real in `column`; 0 for an empty table.
  [[nodiscard]] double column_max(const std::string& name) const {
    const std::size_t c = column_index(name);
    double m = 0.0;
    for (const auto& r : rows)
      if (const double* d = std::get_if<double>(&r[c]); d && std::isfinite(*d)) m = std::max(m, *d);
    return m;
  }
};

enum class TableFormat { csv, json };

[[nodiscard]] inline TableFormat table_format_from_string(const std::string& s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw InvalidArgument("format must be csv or json, got '" + s + "'");
}

[[nodiscard]] inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& s) const { return csv_field(s); }
  };
  return std::visit(V{}, c);
}

inline nlohmann::json cell_json(const Cell& c) {
  struct V {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const {
      if (std::isfinite(v)) return v;
      return format_double(v);  // JSON has no nan/inf literal
    }
    nlohmann::json operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, c);
}

/// Integer, real, or string. Unquoted tokens that parse fully as numbers are numbers.
inline Cell parse_csv_cell(const std::string& token, bool quoted) {
  if (quoted) return token;
  if (token.empty()) return std::monostate{};
  if (token == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (token == "inf") return std::numeric_limits<double>::infinity();
  if (token == "-inf") return -std::numeric_limits<double>::infinity();
  const bool integral = token.find_first_not_of("+-0123456789") == std::string::npos;
  const char* first = token.data() + (token.front() == '+' ? 1 : 0);
  const char* last = token.data() + token.size();
  if (integral) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(first, last, v);
    if (ec == std::errc{} && p == last) return v;
  } else {
    double v = 0.0;
    // from_chars keeps subnormals that std::stod rejects as out of range
    const auto [p, ec] = std::from_chars(first, last, v);
    if (ec == std::errc{} && p == last) return v;
  }
  return token;
}

}  // namespace detail

[[nodiscard]] inline std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + detail::csv_field(t.columns[i]);
  out += '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + detail::cell_text(r[i]);
    out += '\n';
  }
  return out;
}

[[nodiscard]] inline nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = detail::cell_json(r[i]);
    rows.push_back(std::move(o));
  }
  return {{"metadata", t.metadata}, {"columns", t.columns}, {"rows", std::move(rows)}};
}

/// Serialized table text in the requested format.
[[nodiscard]] inline std::string render_table(const Table& t, TableFormat f) {
  if (f == TableFormat::csv) return to_csv(t);
  return to_json(t).dump(2) + '\n';
}

[[nodiscard]] inline Table table_from_json(const nlohmann::json& doc) {
  Table t;
  try {
    t.columns = doc.at("columns").get<std::vector<std::string>>();
    if (doc.contains("metadata")) t.metadata = doc.at("metadata");
    for (const auto& o : doc.at("rows")) {
      std::vector<Cell> row;
      for (const auto& c : t.columns) {
        const auto& v = o.at(c);
        if (v.is_null()) row.emplace_back(std::monostate{});
        else if (v.is_number_integer()) row.emplace_back(v.get<std::int64_t>());
        else if (v.is_number()) row.emplace_back(v.get<double>());
        else if (v.is_string()) {
          const auto s = v.get<std::string>();
          if (s == "nan" || s == "inf" || s == "-inf") row.push_back(detail::parse_csv_cell(s, false));
          else row.emplace_back(s);
        } else throw InvalidArgument("unsupported JSON cell " + v.dump());
      }
      t.add_row(std::move(row));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed table JSON: ") + ex.what());
  }
  return t;
}

[[nodiscard]] inline Table table_from_csv(const std::string& text) {
  std::vector<std::vector<std::pair<std::string, bool>>> lines;
  std::vector<std::pair<std::string, bool>> fields;
  std::string cur;
  bool quoted = false, in_quotes = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        in_quotes = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      in_quotes = quoted = true;
    } else if (c == ',') {
      fields.emplace_back(std::move(cur), quoted);
      cur.clear();
      quoted = false;
    } else if (c == '\n') {
      fields.emplace_back(std::move(cur), quoted);
      lines.push_back(std::move(fields));
      fields.clear();
      cur.clear();
      quoted = false;
    } else {
      cur += c;
    }
  }
  if (in_quotes) throw InvalidArgument("unterminated quoted CSV field");
  if (!cur.empty() || !fields.empty()) {
    fields.emplace_back(std::move(cur), quoted);
    lines.push_back(std::move(fields));
  }
  if (lines.empty()) throw InvalidArgument("CSV has no header row");
  Table t;
  for (auto& [name, q] : lines.front()) t.columns.push_back(name);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    std::vector<Cell> row;
    for (const auto& [tok, q] : lines[l]) row.push_back(detail::parse_csv_cell(tok, q));
    t.add_row(std::move(row));
  }
  return t;
}

/// Writes the table to `path`, or to stdout for "" or "-".
inline void emit_table(const Table& t, TableFormat f, const std::string& path) {
  const std::string text = render_table(t, f);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write output file '" + path + "'");
  out << text;
  if (!out) throw InvalidArgument("failed writing output file '" + path + "'");
}

}  // namespace fockent
