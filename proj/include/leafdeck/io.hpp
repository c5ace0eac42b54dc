#pragma once

// JSON interchange, witness files and DOT export. Output is deterministic:
// vertices by id, edges sorted, keys in fixed order.

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafdeck/iso.hpp"
#include "leafdeck/multigraph.hpp"
#include "leafdeck/tag.hpp"
#include "leafdeck/verify.hpp"

namespace leafdeck {

/// Malformed or schema-violating input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json graph_to_json(const LabeledMultigraph& g) {
  ordered_json out;
  auto labels = ordered_json::array();
  for (const auto& l : g.labels()) labels.push_back(l);
  out["labels"] = std::move(labels);
  auto vertices = ordered_json::array();
  for (const auto& v : g.vertices()) {
    ordered_json entry;
    entry["id"] = v.id;
    if (v.label) entry["label"] = *v.label;
    if (v.tag.role != Role::anonymous) entry["tag"] = v.tag.str();
    vertices.push_back(std::move(entry));
  }
  out["vertices"] = std::move(vertices);
  auto edges = ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
  out["edges"] = std::move(edges);
  return out;
}

inline std::string write_graph_json(const LabeledMultigraph& g) { return graph_to_json(g).dump(2) + "\n"; }

namespace detail {

inline VertexId json_id(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw FormatError(where + ": vertex id must be a non-negative integer");
  const auto value = j.get<std::uint64_t>();
  if (value > std::numeric_limits<VertexId>::max()) throw FormatError(where + ": vertex id out of range");
  return static_cast<VertexId>(value);
}

}  // namespace detail

/// Parses the interchange format. If "labels" is present it must match the
/// labels carried by vertices.
inline LabeledMultigraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("graph JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw FormatError("missing array \"vertices\"");
  if (!j.contains("edges") || !j["edges"].is_array()) throw FormatError("missing array \"edges\"");
  std::vector<Vertex> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id")) throw FormatError("vertex entry needs an \"id\"");
    Vertex out{detail::json_id(v["id"], "vertex"), std::nullopt, {}};
    if (v.contains("label")) {
      if (!v["label"].is_string()) throw FormatError("vertex label must be a string");
      out.label = v["label"].get<std::string>();
    }
    if (v.contains("tag")) {
      if (!v["tag"].is_string()) throw FormatError("vertex tag must be a string");
      try {
        out.tag = parse_tag(v["tag"].get<std::string>());
      } catch (const std::exception& e) {
        throw FormatError(e.what());
      }
    }
    vertices.push_back(std::move(out));
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a pair [a, b]");
    edges.push_back(Edge::of(detail::json_id(e[0], "edge"), detail::json_id(e[1], "edge")));
  }
  LabeledMultigraph g;
  try {
    g = LabeledMultigraph::build(std::move(vertices), std::move(edges));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw FormatError("\"labels\" must be an array");
    LabelSet declared;
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw FormatError("labels must be strings");
      declared.insert(l.get<std::string>());
    }
    if (declared != g.labels()) throw FormatError("\"labels\" does not match the labelled vertices");
  }
  return g;
}

inline LabeledMultigraph read_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

inline LabeledMultigraph load_graph(const std::string& path) { return read_graph_json(read_text_file(path)); }

inline std::string write_witness_json(const IsoWitness& f) {
  ordered_json out;
  ordered_json map = ordered_json::object();
  for (const auto& [a, b] : f.mapping) map[std::to_string(a)] = b;
  out["map"] = std::move(map);
  return out.dump(2) + "\n";
}

inline IsoWitness read_witness_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("map") || !j["map"].is_object()) throw FormatError("witness needs object \"map\"");
  IsoWitness f;
  for (const auto& [key, value] : j["map"].items()) {
    VertexId from = 0;
    try {
      std::size_t used = 0;
      const auto parsed = std::stoul(key, &used);
      if (used != key.size() || parsed > std::numeric_limits<VertexId>::max()) throw std::out_of_range(key);
      from = static_cast<VertexId>(parsed);
    } catch (const std::exception&) {
      throw FormatError("witness key '" + key + "' is not a vertex id");
    }
    f.mapping[from] = detail::json_id(value, "witness");
  }
  return f;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Undirected DOT. Labelled vertices show their label; others are points.
inline std::string write_dot(const LabeledMultigraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph \"" << detail::dot_escape(name) << "\" {\n";
  for (const auto& v : g.vertices()) {
    out << "  " << v.id << " [";
    if (v.label) {
      out << "label=\"" << detail::dot_escape(*v.label) << "\", shape=plaintext";
    } else {
      out << "label=\"\", shape=point";
    }
    if (v.tag.role != Role::anonymous) out << ", tooltip=\"" << detail::dot_escape(v.tag.str()) << "\"";
    out << "];\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

/// Timings are left out unless asked for, so the report is byte-stable.
inline std::string write_report_json(const VerificationReport& report, bool include_timing = false) {
  ordered_json out;
  out["r_min"] = report.r_min;
  out["r_max"] = report.r_max;
  out["passed"] = report.passed();
  auto checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry;
    entry["r"] = c.r;
    entry["name"] = c.name;
    entry["claim"] = c.claim;
    entry["passed"] = c.passed;
    entry["detail"] = c.detail;
    if (include_timing) entry["millis"] = c.millis;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  auto excess = ordered_json::array();
  for (const auto& row : report.excess) {
    ordered_json entry;
    entry["r"] = row.r;
    entry["binary_even"] = row.binary_even;
    entry["binary_odd"] = row.binary_odd;
    entry["expanded_even"] = row.expanded_even;
    entry["component_sum"] = row.component_sum;
    entry["closing_formula"] = row.closing_formula;
    entry["matches_closing_formula"] = row.matches_closing_formula;
    excess.push_back(std::move(entry));
  }
  out["excess"] = std::move(excess);
  return out.dump(2) + "\n";
}

}  // namespace leafdeck
