#pragma once

// Tabular output shared by every command: a metadata block, a header row and
// string cells, rendered as CSV (with '# key=value' comment lines) or JSON.
// Both renderings carry the same cell strings, so their numeric content matches.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rankmetric/enumerative.hpp"

namespace rankmetric {

/// 12 significant digits, shortest form.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_count(const BigCount& v) { return v.str(); }

/// "p/q", or just "p" for integers.
inline std::string format_rational(const Rational& v) {
  const BigCount den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

struct Table {
  std::string title;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;     // free-text comment lines, emitted before the header
  std::vector<std::pair<std::string, std::string>> summary;  // trailing key=value results

  void add_meta(std::string k, std::string v) { meta.emplace_back(std::move(k), std::move(v)); }
  void add_summary(std::string k, std::string v) { summary.emplace_back(std::move(k), std::move(v)); }
};

inline void render_csv(std::ostream& os, const Table& t) {
  if (!t.title.empty()) os << "# " << t.title << "\n";
  for (const auto& [k, v] : t.meta) os << "# " << k << "=" << v << "\n";
  for (const auto& n : t.notes) os << "# note: " << n << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  for (const auto& [k, v] : t.summary) os << "# " << k << "=" << v << "\n";
}

inline nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["title"] = t.title;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) meta[k] = v;
  j["config"] = meta;
  j["notes"] = t.notes;
  j["columns"] = t.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) r[t.columns[i]] = row[i];
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.summary) summary[k] = v;
  j["summary"] = summary;
  return j;
}

inline void render_json(std::ostream& os, const Table& t) { os << to_json(t).dump(2) << "\n"; }

}  // namespace rankmetric
