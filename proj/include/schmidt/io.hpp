#pragma once

// JSON records for circles: {"delta": d, "curv": c, "cocurv": c', "zeta": [a, b]},
// JSON-lines export of circle sets, and tangency edge lists.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schmidt/arrangement.hpp"
#include "schmidt/circle.hpp"
#include "schmidt/error.hpp"

namespace schmidt {

using json = nlohmann::ordered_json;

inline json to_json(const OrientedCircle& c) {
  return json{{"delta", c.disc().value()},
              {"curv", to_int64(c.curv)},
              {"cocurv", to_int64(c.cocurv)},
              {"zeta", {to_int64(c.zeta.a()), to_int64(c.zeta.b())}}};
}

inline OrientedCircle circle_from_json(const json& j) {
  try {
    const Discriminant d = Discriminant::make(j.at("delta").get<std::int64_t>());
    const auto& z = j.at("zeta");
    if (!z.is_array() || z.size() != 2) throw error(errc::parse_error, "zeta must be a pair");
    return make_circle(j.at("curv").get<std::int64_t>(), j.at("cocurv").get<std::int64_t>(),
                       QuadInt(d, z[0].get<std::int64_t>(), z[1].get<std::int64_t>()));
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("bad circle record: ") + e.what());
  }
}

inline OrientedCircle parse_circle_json(const std::string& line) {
  try {
    return circle_from_json(json::parse(line));
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
}

/// One compact record per line, in key order.
inline void write_jsonl(std::ostream& os, const CircleSet& set) {
  for (const auto& [key, p] : set) os << to_json(p.circle).dump() << '\n';
}

inline std::vector<OrientedCircle> read_jsonl(std::istream& is) {
  std::vector<OrientedCircle> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_circle_json(line));
  }
  return out;
}

/// "curv cocurv a b" for the unoriented circle.
inline std::string canonical_key(const OrientedCircle& c) {
  const OrientedCircle u = c.unoriented();
  return u.curv.str() + " " + u.cocurv.str() + " " + u.zeta.a().str() + " " + u.zeta.b().str();
}

/// One edge per line: the two canonical keys separated by a tab.
inline void write_edges(std::ostream& os, const TangencyGraph& g) {
  for (const auto& [i, j] : g.edges) os << canonical_key(g.vertices[i]) << '\t' << canonical_key(g.vertices[j]) << '\n';
}

}  // namespace schmidt
