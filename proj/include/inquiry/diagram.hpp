#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "inquiry/lattice.hpp"

namespace inquiry {

enum class DiagramFormat { dot, json };

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Renders the lattice as a Graphviz digraph. Edges are the Hasse covers,
// pointing from lower to upper element; rankdir=BT draws the diagram
// bottom-up. Output is byte-stable for identical input.
inline std::string export_dot(const FiniteLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    os << "  n" << i << " [label=\"" << detail::dot_escape(l.label(i)) << "\"];\n";
  for (const auto& [a, b] : hasse_covers(l.poset()))
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

// JSON document with elements, covers and full meet/join tables, all in
// element-index order.
inline std::string export_json(const FiniteLattice& l) {
  nlohmann::ordered_json doc;
  doc["elements"] = l.poset().labels();
  auto& covers = doc["covers"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : hasse_covers(l.poset())) covers.push_back({a, b});
  auto& meet = doc["meet_table"] = nlohmann::ordered_json::array();
  auto& join = doc["join_table"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < l.size(); ++a) {
    nlohmann::ordered_json mrow = nlohmann::ordered_json::array();
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < l.size(); ++b) {
      mrow.push_back(l.meet(a, b));
      jrow.push_back(l.join(a, b));
    }
    meet.push_back(std::move(mrow));
    join.push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

inline std::string export_diagram(const FiniteLattice& l, DiagramFormat format) {
  return format == DiagramFormat::dot ? export_dot(l) : export_json(l);
}

}  // namespace inquiry
