#include "dendro/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "dendro/errors.hpp"

namespace dendro {

namespace {

void require_keys(const Json& j, const std::string& what,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
  if (!j.is_object()) throw parse_error(what + ": expected a JSON object");
  for (const auto& key : required) {
    if (!j.contains(key)) throw parse_error(what + ": missing field \"" + key + "\"");
  }
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw parse_error(what + ": unknown field \"" + key + "\"");
  }
}

Rat rat_field(const Json& j, const std::string& what) {
  if (!j.is_string()) throw parse_error(what + ": expected a \"p/q\" string");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw parse_error(what + ": " + e.what());
  }
}

int int_field(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw parse_error(what + ": expected an integer");
  return j.get<int>();
}

int int_key(const std::string& key, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw parse_error(what + ": key \"" + key + "\" is not an integer");
  }
}

}  // namespace

// --------------------------------------------------------------- height ----

Json height_to_json(const HeightFunction& h) {
  Json knots = Json::array();
  for (const Knot& k : h.knots()) {
    knots.push_back({{"t", rat_to_string(k.t)},
                     {"y_left", rat_to_string(k.y_left)},
                     {"y_right", rat_to_string(k.y_right)}});
  }
  return Json{{"lifetime", rat_to_string(h.lifetime())}, {"knots", std::move(knots)}};
}

HeightFunction height_from_json(const Json& j) {
  require_keys(j, "height function", {"lifetime", "knots"});
  if (!j.at("knots").is_array()) throw parse_error("height function: knots must be an array");
  std::vector<Knot> knots;
  for (const Json& kj : j.at("knots")) {
    require_keys(kj, "knot", {"t", "y_left", "y_right"});
    knots.push_back({rat_field(kj.at("t"), "knot t"),
                     rat_field(kj.at("y_left"), "knot y_left"),
                     rat_field(kj.at("y_right"), "knot y_right")});
  }
  const Rat lifetime = rat_field(j.at("lifetime"), "lifetime");
  if (knots.empty() || knots.back().t != lifetime) {
    throw parse_error("height function: lifetime must equal the final knot time");
  }
  return HeightFunction(std::move(knots));
}

// ----------------------------------------------------------------- tree ----

Json tree_to_json(const RealTree& t) {
  Json vertices = Json::array();
  for (int v : t.vertex_ids()) vertices.push_back(v);
  Json edges = Json::array();
  for (const Edge& e : t.edges()) {
    edges.push_back({{"id", e.id},
                     {"parent", e.parent},
                     {"child", e.child},
                     {"length", rat_to_string(e.length)}});
  }
  Json out{{"root", t.root()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  if (!t.marked().empty()) {
    Json marked = Json::array();
    for (int v : t.marked()) marked.push_back(v);
    out["marked"] = std::move(marked);
  }
  return out;
}

RealTree tree_from_json(const Json& j) {
  require_keys(j, "tree", {"root", "vertices", "edges"}, {"marked"});
  if (!j.at("vertices").is_array()) throw parse_error("tree: vertices must be an array");
  if (!j.at("edges").is_array()) throw parse_error("tree: edges must be an array");
  std::vector<int> vertices;
  for (const Json& vj : j.at("vertices")) vertices.push_back(int_field(vj, "vertex id"));
  std::vector<Edge> edges;
  for (const Json& ej : j.at("edges")) {
    require_keys(ej, "edge", {"id", "parent", "child", "length"});
    edges.push_back({int_field(ej.at("id"), "edge id"),
                     int_field(ej.at("parent"), "edge parent"),
                     int_field(ej.at("child"), "edge child"),
                     rat_field(ej.at("length"), "edge length")});
  }
  std::set<int> marked;
  if (j.contains("marked")) {
    if (!j.at("marked").is_array()) throw parse_error("tree: marked must be an array");
    for (const Json& vj : j.at("marked")) marked.insert(int_field(vj, "marked id"));
  }
  return RealTree(int_field(j.at("root"), "root"), std::move(vertices), std::move(edges),
                  std::move(marked));
}

// ---------------------------------------------------------------- point ----

Json point_to_json(const TreePoint& p) {
  if (p.is_vertex()) return Json{{"vertex", p.vertex()}};
  return Json{{"edge", p.edge()}, {"offset", rat_to_string(p.offset())}};
}

TreePoint point_from_json(const Json& j, const RealTree& t) {
  if (!j.is_object()) throw parse_error("point: expected a JSON object");
  if (j.contains("vertex")) {
    require_keys(j, "point", {"vertex"});
    const TreePoint p = TreePoint::at_vertex(int_field(j.at("vertex"), "point vertex"));
    check_point(t, p);
    return p;
  }
  require_keys(j, "point", {"edge", "offset"});
  return TreePoint::on_edge(t, int_field(j.at("edge"), "point edge"),
                            rat_field(j.at("offset"), "point offset"));
}

// ---------------------------------------------------------------- order ----

Json order_to_json(const PlanarOrder& o) {
  Json slots = Json::object();
  for (const auto& [vid, edges] : o.child_order) {
    Json list = Json::array();
    for (int e : edges) list.push_back(e);
    slots[std::to_string(vid)] = std::move(list);
  }
  return Json{{"child_order", std::move(slots)}};
}

PlanarOrder order_from_json(const Json& j) {
  require_keys(j, "order", {"child_order"});
  if (!j.at("child_order").is_object()) {
    throw parse_error("order: child_order must be an object");
  }
  PlanarOrder o;
  for (const auto& item : j.at("child_order").items()) {
    const int vid = int_key(item.key(), "order");
    if (!item.value().is_array()) {
      throw parse_error("order: child list of vertex " + item.key() + " must be an array");
    }
    std::vector<int> edges;
    for (const Json& ej : item.value()) edges.push_back(int_field(ej, "order edge id"));
    o.child_order[vid] = std::move(edges);
  }
  return o;
}

// -------------------------------------------------------------- measure ----

Json measure_to_json(const TreeMeasure& m) {
  Json densities = Json::object();
  for (const auto& [eid, d] : m.densities) {
    densities[std::to_string(eid)] = rat_to_string(d);
  }
  Json atoms = Json::array();
  for (const Atom& a : m.atoms) {
    atoms.push_back({{"point", point_to_json(a.point)}, {"mass", rat_to_string(a.mass)}});
  }
  return Json{{"densities", std::move(densities)}, {"atoms", std::move(atoms)}};
}

TreeMeasure measure_from_json(const Json& j, const RealTree& t) {
  require_keys(j, "measure", {"densities", "atoms"});
  if (!j.at("densities").is_object()) {
    throw parse_error("measure: densities must be an object");
  }
  if (!j.at("atoms").is_array()) throw parse_error("measure: atoms must be an array");
  TreeMeasure m;
  for (const auto& item : j.at("densities").items()) {
    m.densities[int_key(item.key(), "measure")] =
        rat_field(item.value(), "density of edge " + item.key());
  }
  for (const Json& aj : j.at("atoms")) {
    require_keys(aj, "atom", {"point", "mass"});
    m.atoms.push_back(
        {point_from_json(aj.at("point"), t), rat_field(aj.at("mass"), "atom mass")});
  }
  const auto violations = measure_violations(t, m);
  if (!violations.empty()) {
    std::string msg = "measure rejected:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw validation_error(msg);
  }
  return m;
}

// ----------------------------------------------------------- structured ----

Json structured_to_json(const StructuredTree& s) {
  return Json{{"tree", tree_to_json(s.tree())},
              {"order", order_to_json(s.order())},
              {"measure", measure_to_json(s.measure())}};
}

StructuredTree structured_from_json(const Json& j) {
  require_keys(j, "structured tree", {"tree", "order", "measure"});
  RealTree t = tree_from_json(j.at("tree"));
  PlanarOrder o = order_from_json(j.at("order"));
  TreeMeasure m = measure_from_json(j.at("measure"), t);
  return StructuredTree(std::move(t), std::move(o), std::move(m));
}

// ------------------------------------------------------------------ map ----

Json map_to_json(const PiecewiseMap& m) {
  Json knots = Json::array();
  for (const MapKnot& k : m.knots()) {
    knots.push_back({{"t", rat_to_string(k.t)},
                     {"v_left", rat_to_string(k.v_left)},
                     {"v_right", rat_to_string(k.v_right)}});
  }
  return Json{{"domain_end", rat_to_string(m.domain_end())}, {"knots", std::move(knots)}};
}

PiecewiseMap map_from_json(const Json& j) {
  require_keys(j, "map", {"domain_end", "knots"});
  if (!j.at("knots").is_array()) throw parse_error("map: knots must be an array");
  std::vector<MapKnot> knots;
  for (const Json& kj : j.at("knots")) {
    require_keys(kj, "map knot", {"t", "v_left", "v_right"});
    knots.push_back({rat_field(kj.at("t"), "map knot t"),
                     rat_field(kj.at("v_left"), "map knot v_left"),
                     rat_field(kj.at("v_right"), "map knot v_right")});
  }
  const Rat end = rat_field(j.at("domain_end"), "domain_end");
  if (knots.empty() || knots.back().t != end) {
    throw parse_error("map: domain_end must equal the final knot time");
  }
  return PiecewiseMap(std::move(knots));
}

// ------------------------------------------------------------------ i/o ----

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open file for writing: " + path);
  out << dump_json(j);
}

}  // namespace dendro
