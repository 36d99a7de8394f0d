#ifndef IMPACTGRAPH_IO_HPP
#define IMPACTGRAPH_IO_HPP

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/error.hpp"

namespace impactgraph {

enum class MapFormat { csv, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace detail

/// Shortest decimal text that parses back to exactly the same double.
inline std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

/**
 * Parses an n x n CSV adjacency matrix.
 *
 * An optional first row of labels is recognized by a non-numeric first cell.
 * Blank lines and lines starting with '#' are skipped.
 */
inline CognitiveMap parse_csv_map(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  bool first = true;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = detail::split_cells(line);
    if (first) {
      first = false;
      if (!detail::parse_number(cells.front())) {
        for (auto c : cells) labels.emplace_back(c);
        continue;
      }
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto v = detail::parse_number(cells[c]);
      if (!v) {
        throw MapError("non-numeric entry '" + std::string(cells[c]) + "' at line " +
                       std::to_string(line_no) + ", column " + std::to_string(c + 1));
      }
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw MapError("no matrix rows found");
  if (!labels.empty() && labels.size() != rows.size()) {
    throw MapError("header has " + std::to_string(labels.size()) +
                   " labels but the matrix has " + std::to_string(rows.size()) + " rows");
  }
  return CognitiveMap::from_rows(rows, std::move(labels));
}

/// Parses {"nodes": [...], "weights": [[...], ...]}; "nodes" is optional.
inline CognitiveMap parse_json_map(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MapError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array()) {
    throw MapError("JSON map must be an object with a \"weights\" array");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < doc["weights"].size(); ++i) {
    const auto& jrow = doc["weights"][i];
    if (!jrow.is_array()) throw MapError("weights row " + std::to_string(i + 1) + " is not an array");
    std::vector<double> row;
    for (std::size_t j = 0; j < jrow.size(); ++j) {
      if (!jrow[j].is_number()) {
        throw MapError("non-numeric entry " + jrow[j].dump() + " at row " +
                       std::to_string(i + 1) + ", column " + std::to_string(j + 1));
      }
      row.push_back(jrow[j].get<double>());
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw MapError("\"nodes\" must be an array of strings");
    for (const auto& l : doc["nodes"]) {
      if (!l.is_string()) throw MapError("\"nodes\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.empty()) throw MapError("\"nodes\" is empty");
  }
  return CognitiveMap::from_rows(rows, std::move(labels));
}

inline MapFormat detect_format(std::string_view text) {
  const auto t = detail::trim(text);
  return (!t.empty() && t.front() == '{') ? MapFormat::json : MapFormat::csv;
}

/// Parses either supported format, detected from the first non-blank character.
inline CognitiveMap load_map(std::string_view text) {
  return detect_format(text) == MapFormat::json ? parse_json_map(text)
                                                : parse_csv_map(text);
}

inline CognitiveMap load_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MapError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_map(buf.str());
}

inline std::string serialize_csv(const CognitiveMap& map) {
  const auto& labels = map.labels();
  if (detail::parse_number(labels.front())) {
    throw MapError("label '" + labels.front() + "' is numeric and cannot head a CSV header");
  }
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].find_first_of(",\r\n") != std::string::npos ||
        detail::trim(labels[i]) != labels[i]) {
      throw MapError("label '" + labels[i] + "' cannot be written to CSV");
    }
    if (i) out += ',';
    out += labels[i];
  }
  out += '\n';
  const auto& w = map.weights();
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (j) out += ',';
      out += format_shortest(w(i, j));
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json map_to_json(const CognitiveMap& map) {
  nlohmann::json weights = nlohmann::json::array();
  const auto& w = map.weights();
  for (std::size_t i = 0; i < w.rows(); ++i) {
    auto row = w.row(i);
    weights.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return {{"nodes", map.labels()}, {"weights", std::move(weights)}};
}

inline std::string serialize_json(const CognitiveMap& map) {
  return map_to_json(map).dump(2) + "\n";
}

inline std::string serialize(const CognitiveMap& map, MapFormat format) {
  return format == MapFormat::json ? serialize_json(map) : serialize_csv(map);
}

}  // namespace impactgraph

#endif  // IMPACTGRAPH_IO_HPP
