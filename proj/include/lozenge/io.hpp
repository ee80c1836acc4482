#pragma once

#include "lozenge/bigint.hpp"
#include "lozenge/counting.hpp"

#include <json.hpp>

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

enum class OutputFormat { Csv, Json, Plain };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "plain") return OutputFormat::Plain;
  throw std::invalid_argument("unknown format: " + s);
}

inline constexpr const char* kCsvHeader = "n,l,count";

inline void write_csv_rows(std::ostream& os, const CountVector& v) {
  for (std::size_t l = 0; l < v.size(); ++l) os << v.n() << ',' << l << ',' << to_decimal(v[l]) << '\n';
}

inline void write_csv(std::ostream& os, const CountVector& v) {
  os << kCsvHeader << '\n';
  write_csv_rows(os, v);
}

// Counts are decimal strings: they exceed 64 bits.
inline nlohmann::json to_json(const CountVector& v) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& c : v.values()) counts.push_back(to_decimal(c));
  return {{"n", v.n()}, {"counts", counts}};
}

inline void write_json(std::ostream& os, const CountVector& v) { os << to_json(v).dump() << '\n'; }

inline void write_plain(std::ostream& os, const CountVector& v) {
  for (std::size_t l = 0; l < v.size(); ++l) os << "L(" << v.n() << ',' << l << ") = " << to_decimal(v[l]) << '\n';
}

inline void write_counts(std::ostream& os, const CountVector& v, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Csv: write_csv(os, v); break;
    case OutputFormat::Json: write_json(os, v); break;
    case OutputFormat::Plain: write_plain(os, v); break;
  }
}

inline CountVector count_vector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("counts") || !j["counts"].is_array()) {
    throw std::invalid_argument("expected {\"n\": int, \"counts\": [string]}");
  }
  std::vector<BigInt> counts;
  for (const auto& c : j["counts"]) counts.push_back(parse_decimal(c.get<std::string>()));
  return CountVector(j["n"].get<int>(), std::move(counts));
}

inline CountVector parse_json(const std::string& text) { return count_vector_from_json(nlohmann::json::parse(text)); }

/// Reads `n,l,count` rows (header optional) into one vector per n. Rows must
/// list l = 0, 1, ... in order for each n.
inline std::vector<CountVector> parse_csv(std::istream& is) {
  std::map<int, std::vector<BigInt>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line == kCsvHeader) continue;
    std::istringstream in(line);
    std::string n_s, l_s, c_s;
    if (!std::getline(in, n_s, ',') || !std::getline(in, l_s, ',') || !std::getline(in, c_s)) {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    auto& v = rows[std::stoi(n_s)];
    if (static_cast<std::size_t>(std::stoll(l_s)) != v.size()) throw std::invalid_argument("out-of-order l in: " + line);
    v.push_back(parse_decimal(c_s));
  }
  std::vector<CountVector> out;
  for (auto& [n, counts] : rows) out.emplace_back(n, std::move(counts));
  return out;
}

}  // namespace lozenge
