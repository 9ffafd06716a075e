#pragma once

#include <string>

#include <json.hpp>

#include "dendro/codec.hpp"
#include "dendro/height_function.hpp"
#include "dendro/order_measure.hpp"
#include "dendro/tree.hpp"

namespace dendro {

// Key order is preserved so identical values always print identically.
using Json = nlohmann::ordered_json;

// All *_from_json readers are strict: missing fields, extra fields, wrong
// types, and malformed "p/q" literals raise parse_error; values that parse
// but break structural invariants raise the usual validation errors.

// {"lifetime": "p/q", "knots": [{"t", "y_left", "y_right"}, ...]}
Json height_to_json(const HeightFunction& h);
HeightFunction height_from_json(const Json& j);

// {"root": vid, "vertices": [vid...], "edges": [{"id","parent","child","length"}...]}
// plus "marked": [vid...] when any vertex is marked.
Json tree_to_json(const RealTree& t);
RealTree tree_from_json(const Json& j);

// {"vertex": vid} or {"edge": eid, "offset": "p/q"}
Json point_to_json(const TreePoint& p);
TreePoint point_from_json(const Json& j, const RealTree& t);

// {"child_order": {"vid": [eid, ...], ...}}
Json order_to_json(const PlanarOrder& o);
PlanarOrder order_from_json(const Json& j);

// {"densities": {"eid": "p/q", ...}, "atoms": [{"point": ..., "mass": "p/q"}...]}
Json measure_to_json(const TreeMeasure& m);
TreeMeasure measure_from_json(const Json& j, const RealTree& t);

// {"tree": ..., "order": ..., "measure": ...}
Json structured_to_json(const StructuredTree& s);
StructuredTree structured_from_json(const Json& j);

// {"domain_end": "p/q", "knots": [{"t", "v_left", "v_right"}, ...]}
Json map_to_json(const PiecewiseMap& m);
PiecewiseMap map_from_json(const Json& j);

// Canonical text form: two-space indent plus trailing newline.
std::string dump_json(const Json& j);

// Wraps the underlying parser's failures in parse_error.
Json parse_json_text(const std::string& text);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace dendro
