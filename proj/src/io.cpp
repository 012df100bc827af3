#include "cyclo/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace cyclo {

using nlohmann::json;

json element_to_json(const RingElement& e) {
  json j;
  j["c"] = e.num();
  j["den"] = e.den();
  return j;
}

RingElement element_from_json(const json& j, RingId ring) {
  if (!j.is_object() || !j.contains("c") || !j.contains("den"))
    throw ParseError("element must be an object with \"c\" and \"den\"");
  const json& c = j["c"];
  if (!c.is_array() || c.size() != 8)
    throw ParseError("element \"c\" must be an array of 8 integers");
  std::array<int64_t, 8> num;
  for (int i = 0; i < 8; ++i) {
    if (!c[i].is_number_integer())
      throw ParseError("element coordinates must be integers");
    num[i] = c[i].get<int64_t>();
  }
  if (!j["den"].is_number_integer()) throw ParseError("bad element denominator");
  int den = j["den"].get<int>();
  try {
    RingElement e = RingElement::from_coords(num, den, ring);
    if (e.den() != den) throw ParseError("element encoding is not reduced");
    return e;
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

json graph_to_json(const RGraph& g, const std::string& name) {
  json j;
  j["ring"] = ring_name(g.ring());
  j["n"] = g.n();
  json rows = json::array();
  for (int i = 0; i < g.n(); ++i) {
    json row = json::array();
    for (int k = 0; k < g.n(); ++k) row.push_back(element_to_json(g.matrix().at(i, k)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  if (!name.empty()) j["name"] = name;
  return j;
}

RGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph document must be an object");
  if (!j.contains("ring") || !j["ring"].is_string())
    throw ParseError("graph document needs a \"ring\" tag");
  auto ring = ring_from_name(j["ring"].get<std::string>());
  if (!ring) throw ParseError("unknown ring: " + j["ring"].get<std::string>());
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph document needs an integer \"n\"");
  int n = j["n"].get<int>();
  if (n < 1 || n > 64) throw ParseError("dimension out of range");
  if (!j.contains("matrix") || !j["matrix"].is_array() ||
      static_cast<int>(j["matrix"].size()) != n)
    throw ParseError("matrix must be an n x n array");
  std::vector<RingElement> entries;
  entries.reserve(n * n);
  for (const auto& row : j["matrix"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("matrix must be an n x n array");
    for (const auto& cell : row) entries.push_back(element_from_json(cell, *ring));
  }
  try {
    return RGraph(SymMatrix::from_entries(n, *ring, entries));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

RGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return graph_from_json(j);
}

json level_to_json(const EnumerationLevel& level, bool integral_only) {
  json j;
  j["n"] = level.n;
  j["ring"] = ring_name(level.ring);
  json members = json::array();
  for (const auto& m : level.members) {
    if (integral_only && !m.integral) continue;
    json e = graph_to_json(m.graph);
    e["key"] = key_to_hex(m.key);
    e["in_s"] = m.integral;
    json parents = json::array();
    for (const auto& p : m.parents) parents.push_back(key_to_hex(p));
    e["parents"] = std::move(parents);
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  return j;
}

json levels_to_json(const std::vector<EnumerationLevel>& levels,
                    bool integral_only) {
  json j = json::array();
  for (const auto& lvl : levels) j.push_back(level_to_json(lvl, integral_only));
  return j;
}

std::string to_dot(const RGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < g.n(); ++v) {
    const RingElement& c = g.matrix().at(v, v);
    os << "  v" << v << " [label=\"" << (c.is_zero() ? "" : c.str()) << "\"];\n";
  }
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      const RingElement& w = g.matrix().at(u, v);
      if (w.is_zero()) continue;
      bool neg = w.sign() < 0;
      RingElement aw = neg ? -w : w;
      os << "  v" << u << " -- v" << v << " [";
      if (aw != RingElement::from_int(1)) os << "label=\"" << aw.str() << "\", ";
      os << "style=" << (neg ? "dashed" : "solid") << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace cyclo
