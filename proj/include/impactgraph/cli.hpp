#ifndef IMPACTGRAPH_CLI_HPP
#define IMPACTGRAPH_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "impactgraph/baselines.hpp"
#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/error.hpp"
#include "impactgraph/influence.hpp"
#include "impactgraph/io.hpp"
#include "impactgraph/paths.hpp"
#include "impactgraph/scenario_selection.hpp"

namespace impactgraph::cli {

enum class Command { scenarios, matrices, rank, compare, impulse, paths };
enum class OutputFormat { table, json, csv };

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2 };

struct RunConfig {
  Command command = Command::rank;
  std::string input;
  AnalysisOptions analysis;
  PropagationOptions propagation;
  Model model = Model::pareto;
  OutputFormat format = OutputFormat::table;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::vector<double> init;    // impulse: p(0)
  std::vector<double> values;  // impulse: v(0), zeros when empty
  std::size_t steps = 5;
};

/// Raised for invalid flags or node selectors; maps to exit code 1.
class UsageError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

inline void validate(const RunConfig& c) {
  if (!(c.analysis.amplification.lambda > 0.0)) throw UsageError("--lambda must be > 0");
  if (!(c.propagation.epsilon > 0.0)) throw UsageError("--epsilon must be > 0");
  if (c.propagation.max_steps == 0) throw UsageError("--max-steps must be >= 1");
  if (c.analysis.max_paths == 0) throw UsageError("--max-paths must be >= 1");
}

/// Accepts a label, or a 1-based index when no label matches.
inline NodeId resolve_node(const CognitiveMap& map, const std::string& selector) {
  if (auto id = map.find(selector)) return *id;
  if (auto v = detail::parse_number(selector)) {
    const double idx = *v;
    if (idx >= 1 && idx <= static_cast<double>(map.size()) && idx == static_cast<std::size_t>(idx)) {
      return NodeId{static_cast<std::size_t>(idx) - 1};
    }
  }
  std::string valid;
  for (const auto& l : map.labels()) valid += (valid.empty() ? "" : ", ") + l;
  throw UsageError("unknown node '" + selector + "'; valid nodes: " + valid);
}

// Formatting --------------------------------------------------------------

inline std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

/// Numeric columns are right-aligned, everything else (and column 0) left-aligned.
inline void print_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  std::vector<bool> left(header.size(), false);
  left[0] = true;
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
      if (!r[c].empty() && !detail::parse_number(r[c])) left[c] = true;
    }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string pad(width[c] - cells[c].size(), ' ');
      if (c) s += "  ";
      s += left[c] ? cells[c] + pad : pad + cells[c];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

inline void print_csv(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

inline void print_json(std::ostream& out, const nlohmann::ordered_json& doc) {
  out << doc.dump(2) << '\n';
}

inline std::string path_text(const CognitiveMap& map, const ImpactPath& p) {
  std::string s = map.label(p.nodes.front());
  for (std::size_t k = 1; k < p.nodes.size(); ++k) {
    s += " -(" + format_shortest(map.weight(p.nodes[k - 1], p.nodes[k])) + ")-> " +
         map.label(p.nodes[k]);
  }
  return s;
}

inline std::vector<std::string> path_labels(const CognitiveMap& map, const ImpactPath& p) {
  std::vector<std::string> out;
  for (auto q : p.nodes) out.push_back(map.label(q));
  return out;
}

template <class T>
nlohmann::ordered_json matrix_json(const Matrix<T>& m) {
  auto doc = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    doc.push_back(std::vector<T>(r.begin(), r.end()));
  }
  return doc;
}

template <class T>
std::string cell_text(T v, bool fixed) {
  if constexpr (std::is_floating_point_v<T>) return fixed ? fixed4(v) : format_shortest(v);
  else return std::to_string(v);
}

template <class T>
void print_matrix(std::ostream& out, const CognitiveMap& map, const std::string& name,
                  const Matrix<T>& m, OutputFormat format) {
  std::vector<std::string> header{format == OutputFormat::csv ? "" : name};
  for (const auto& l : map.labels()) header.push_back(l);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> r{map.labels()[i]};
    for (T v : m.row(i)) r.push_back(cell_text(v, format == OutputFormat::table));
    rows.push_back(std::move(r));
  }
  if (format == OutputFormat::csv) {
    out << "# " << name << '\n';
    print_csv(out, header, rows);
  } else {
    print_table(out, header, rows);
  }
}

// Commands ----------------------------------------------------------------

inline int cmd_scenarios(const RunConfig& c, const CognitiveMap& map, std::ostream& out) {
  if (!c.from || !c.to) throw UsageError("scenarios requires --from and --to");
  const NodeId s = resolve_node(map, *c.from);
  const NodeId t = resolve_node(map, *c.to);
  if (s == t) throw UsageError("--from and --to must name different nodes");
  const auto a = assess_pair(map, s, t, c.analysis);

  auto score_of = [&](std::size_t k) -> std::optional<std::size_t> {
    if (!a.choice) return std::nullopt;
    const auto& members = a.choice->frontier.members;
    for (std::size_t m = 0; m < members.size(); ++m)
      if (members[m].index == k) return m;
    return std::nullopt;
  };
  auto is_chosen = [&](std::size_t k) {
    return a.choice && a.choice->winner().index == k;
  };

  if (c.format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["from"] = map.label(s);
    doc["to"] = map.label(t);
    doc["lcm"] = a.choice ? nlohmann::ordered_json(a.choice->lcm) : nlohmann::ordered_json();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& sc : a.scenarios) {
      const auto m = score_of(sc.index);
      nlohmann::ordered_json r;
      r["scenario"] = sc.index + 1;
      r["path"] = path_labels(map, sc.path);
      r["force"] = sc.force;
      r["speed"] = sc.speed;
      r["pareto"] = m.has_value();
      r["realizations"] = m ? nlohmann::ordered_json(a.choice->realizations[*m])
                            : nlohmann::ordered_json();
      r["score"] = m ? nlohmann::ordered_json(a.choice->scores[*m]) : nlohmann::ordered_json();
      r["chosen"] = is_chosen(sc.index);
      rows.push_back(std::move(r));
    }
    doc["scenarios"] = std::move(rows);
    print_json(out, doc);
    return kOk;
  }

  const bool table = c.format == OutputFormat::table;
  std::vector<std::string> header{"#", "path", "C1", "C2", "pareto", "score", "chosen"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& sc : a.scenarios) {
    const auto m = score_of(sc.index);
    rows.push_back({std::to_string(sc.index + 1), path_text(map, sc.path),
                    table ? fixed4(sc.force) : format_shortest(sc.force),
                    std::to_string(sc.speed), m ? "yes" : "no",
                    m ? (table ? fixed4(a.choice->scores[*m]) : format_shortest(a.choice->scores[*m]))
                      : "",
                    is_chosen(sc.index) ? "*" : ""});
  }
  if (table) {
    out << "scenarios " << map.label(s) << " -> " << map.label(t) << ": " << a.scenarios.size();
    if (a.choice) out << " (LCM " << a.choice->lcm << ")";
    out << '\n';
    print_table(out, header, rows);
  } else {
    print_csv(out, header, rows);
  }
  return kOk;
}

inline int cmd_matrices(const RunConfig& c, const CognitiveMap& map, std::ostream& out,
                        std::ostream& err) {
  const auto [impact, time] = build_matrices(map, c.analysis);
  const auto rate = rate_matrix(impact, time);
  std::optional<Matrix<double>> steady;
  std::optional<DegenerateNormalization> failure;
  try {
    steady = propagate(rate, c.propagation);
  } catch (const DegenerateNormalization& e) {
    failure = e;
  }

  if (c.format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["nodes"] = map.labels();
    doc["Z"] = matrix_json(impact);
    doc["T"] = matrix_json(time);
    doc["Z1"] = matrix_json(rate);
    doc["Zstar"] = steady ? matrix_json(*steady) : nlohmann::ordered_json();
    print_json(out, doc);
  } else {
    print_matrix(out, map, "Z", impact, c.format);
    out << '\n';
    print_matrix(out, map, "T", time, c.format);
    out << '\n';
    print_matrix(out, map, "Z1", rate, c.format);
    if (steady) {
      out << '\n';
      print_matrix(out, map, "Zstar", *steady, c.format);
    }
  }
  if (failure) {
    err << "error: cannot compute Zstar: " << failure->what() << '\n';
    return kComputation;
  }
  return kOk;
}

inline const char* model_name(Model m) {
  switch (m) {
    case Model::kosko: return "kosko";
    case Model::sum: return "sum";
    case Model::pareto: break;
  }
  return "pareto";
}

inline int cmd_rank(const RunConfig& c, const CognitiveMap& map, std::ostream& out) {
  const auto table = rank_by_model(map, c.model, c.analysis, c.propagation);
  if (c.format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["model"] = model_name(c.model);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& e : table)
      rows.push_back({{"rank", e.rank}, {"node", map.label(e.node)}, {"value", e.value}});
    doc["ranks"] = std::move(rows);
    print_json(out, doc);
    return kOk;
  }
  const bool fixed = c.format == OutputFormat::table;
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : table)
    rows.push_back({std::to_string(e.rank), map.label(e.node),
                    fixed ? fixed4(e.value) : format_shortest(e.value)});
  if (fixed) print_table(out, {"rank", "node", model_name(c.model)}, rows);
  else print_csv(out, {"rank", "node", "value"}, rows);
  return kOk;
}

inline int cmd_compare(const RunConfig& c, const CognitiveMap& map, std::ostream& out) {
  const auto cmp = compare_models(map, c.analysis, c.propagation);
  const std::pair<const char*, const RankTable*> models[] = {
      {"pareto", &cmp.pareto}, {"kosko", &cmp.kosko}, {"sum", &cmp.sum}};

  if (c.format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["nodes"] = map.labels();
    for (const auto& [name, table] : models) {
      auto rows = nlohmann::ordered_json::array();
      for (const auto& e : *table)
        rows.push_back({{"node", map.label(e.node)}, {"value", e.value}, {"rank", e.rank}});
      doc[name] = std::move(rows);
    }
    print_json(out, doc);
    return kOk;
  }
  const bool fixed = c.format == OutputFormat::table;
  std::vector<std::string> header{"node"};
  for (const auto& [name, table] : models) {
    header.push_back(name);
    header.push_back(std::string(name) + "_rank");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < map.size(); ++i) {
    std::vector<std::string> r{map.labels()[i]};
    for (const auto& [name, table] : models) {
      const auto& e = (*table)[i];
      r.push_back(fixed ? fixed4(e.value) : format_shortest(e.value));
      r.push_back(std::to_string(e.rank));
    }
    rows.push_back(std::move(r));
  }
  if (fixed) print_table(out, header, rows);
  else print_csv(out, header, rows);
  return kOk;
}

inline int cmd_impulse(const RunConfig& c, const CognitiveMap& map, std::ostream& out) {
  const std::size_t n = map.size();
  if (c.init.size() != n) {
    throw UsageError("--init needs " + std::to_string(n) + " comma-separated pulses, got " +
                     std::to_string(c.init.size()));
  }
  if (!c.values.empty() && c.values.size() != n) {
    throw UsageError("--values needs " + std::to_string(n) + " entries");
  }
  ImpulseState start{c.values.empty() ? std::vector<double>(n, 0.0) : c.values, c.init};
  const auto trace = impulse_run(map, std::move(start), c.steps);

  if (c.format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["nodes"] = map.labels();
    auto states = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < trace.size(); ++t)
      states.push_back({{"t", t}, {"values", trace[t].values}, {"pulses", trace[t].pulses}});
    doc["states"] = std::move(states);
    print_json(out, doc);
    return kOk;
  }
  const bool fixed = c.format == OutputFormat::table;
  std::vector<std::string> header{"t"};
  for (const auto& l : map.labels()) header.push_back("v:" + l);
  for (const auto& l : map.labels()) header.push_back("p:" + l);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    std::vector<std::string> r{std::to_string(t)};
    for (double v : trace[t].values) r.push_back(fixed ? fixed4(v) : format_shortest(v));
    for (double p : trace[t].pulses) r.push_back(fixed ? fixed4(p) : format_shortest(p));
    rows.push_back(std::move(r));
  }
  if (fixed) print_table(out, header, rows);
  else print_csv(out, header, rows);
  return kOk;
}

/// Lists simple paths for the selected pairs; without selectors, for every pair.
inline int cmd_paths(const RunConfig& c, const CognitiveMap& map, std::ostream& out) {
  std::vector<NodeId> sources, targets;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!c.from) sources.push_back(NodeId{i});
    if (!c.to) targets.push_back(NodeId{i});
  }
  if (c.from) sources.push_back(resolve_node(map, *c.from));
  if (c.to) targets.push_back(resolve_node(map, *c.to));

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  std::vector<std::vector<std::string>> rows;
  for (auto s : sources) {
    for (auto t : targets) {
      if (s == t) continue;
      const auto paths = enumerate_simple_paths(map, s, t, c.analysis.max_paths);
      for (std::size_t k = 0; k < paths.size(); ++k) {
        if (c.format == OutputFormat::json) {
          doc.push_back({{"from", map.label(s)},
                         {"to", map.label(t)},
                         {"scenario", k + 1},
                         {"path", path_labels(map, paths[k])},
                         {"edges", paths[k].edge_count()}});
        } else {
          rows.push_back({map.label(s), map.label(t), std::to_string(k + 1),
                          path_text(map, paths[k]), std::to_string(paths[k].edge_count())});
        }
      }
    }
  }
  const std::vector<std::string> header{"from", "to", "#", "path", "edges"};
  if (c.format == OutputFormat::json) print_json(out, doc);
  else if (c.format == OutputFormat::csv) print_csv(out, header, rows);
  else print_table(out, header, rows);
  return kOk;
}

inline int dispatch(const RunConfig& c, const CognitiveMap& map, std::ostream& out,
                    std::ostream& err) {
  switch (c.command) {
    case Command::scenarios: return cmd_scenarios(c, map, out);
    case Command::matrices: return cmd_matrices(c, map, out, err);
    case Command::rank: return cmd_rank(c, map, out);
    case Command::compare: return cmd_compare(c, map, out);
    case Command::impulse: return cmd_impulse(c, map, out);
    case Command::paths: return cmd_paths(c, map, out);
  }
  return kUsage;
}

/// Runs one command against an already loaded map, mapping errors to exit codes.
inline int run(const RunConfig& c, const CognitiveMap& map, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    return dispatch(c, map, out, err);
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::optional<CognitiveMap> map;
  try {
    map = load_map_file(c.input);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return run(c, *map, out, err);
}

}  // namespace impactgraph::cli

#endif  // IMPACTGRAPH_CLI_HPP
