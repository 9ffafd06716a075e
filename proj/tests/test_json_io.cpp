#include <doctest.h>

#include <cstdio>
#include <string>

#include "dendro/errors.hpp"
#include "dendro/instances.hpp"
#include "dendro/json_io.hpp"
#include "helpers.hpp"

using namespace dendro;
using dendro::testing::make_h1;
using dendro::testing::make_hy;

TEST_CASE("height functions round-trip through JSON") {
  const HeightFunction h1 = make_h1();
  const Json j = height_to_json(h1);
  CHECK(height_from_json(j) == h1);
  CHECK(j.at("lifetime") == "1/1");
  CHECK(j.at("knots").size() == 4);
  CHECK(j.at("knots")[1].at("t") == "1/3");

  const std::string text = dump_json(j);
  CHECK(text.back() == '\n');
  CHECK(dump_json(height_to_json(height_from_json(parse_json_text(text)))) == text);

  CHECK(height_from_json(height_to_json(make_hy())) == make_hy());
  CHECK(height_from_json(height_to_json(HeightFunction())) == HeightFunction());
}

TEST_CASE("height JSON is strict") {
  Json j = height_to_json(make_h1());

  Json extra = j;
  extra["note"] = "hello";
  CHECK_THROWS_AS(height_from_json(extra), parse_error);

  Json missing = j;
  missing.erase("lifetime");
  CHECK_THROWS_AS(height_from_json(missing), parse_error);

  Json mismatch = j;
  mismatch["lifetime"] = "2/1";
  CHECK_THROWS_AS(height_from_json(mismatch), parse_error);

  Json badknot = j;
  badknot["knots"][1].erase("y_right");
  CHECK_THROWS_AS(height_from_json(badknot), parse_error);

  Json badrat = j;
  badrat["knots"][1]["t"] = "0.333";
  CHECK_THROWS_AS(height_from_json(badrat), parse_error);

  Json numeric = j;
  numeric["knots"][1]["t"] = 0.333;
  CHECK_THROWS_AS(height_from_json(numeric), parse_error);

  // Structurally broken but well-formed payloads fail validation instead.
  Json upward = j;
  upward["knots"][1]["y_right"] = "9/1";
  CHECK_THROWS_AS(height_from_json(upward), validation_error);

  CHECK_THROWS_AS(parse_json_text("{not json"), parse_error);
  CHECK_THROWS_AS(height_from_json(parse_json_text("[]")), parse_error);
}

TEST_CASE("trees round-trip, marks included") {
  const RealTree y = make_ytree().tree();
  const Json j = tree_to_json(y);
  CHECK_FALSE(j.contains("marked"));  // omitted when empty
  const RealTree back = tree_from_json(j);
  CHECK(back.root() == y.root());
  CHECK(back.vertex_ids() == y.vertex_ids());
  CHECK(back.edges().size() == y.edges().size());
  CHECK(back.edge(1).length == Rat(1));

  const RealTree chain(0, {0, 1, 2}, {{0, 0, 1, Rat(1)}, {1, 1, 2, rat(1, 2)}}, {1});
  const Json cj = tree_to_json(chain);
  CHECK(cj.at("marked")[0] == 1);
  const RealTree chain_back = tree_from_json(cj);
  CHECK(chain_back.marked() == std::set<int>{1});
  CHECK(dump_json(tree_to_json(chain_back)) == dump_json(cj));

  Json bad = j;
  bad["edges"][0]["length"] = "0/1";
  CHECK_THROWS_AS(tree_from_json(bad), validation_error);
  Json stray = j;
  stray["color"] = "red";
  CHECK_THROWS_AS(tree_from_json(stray), parse_error);
}

TEST_CASE("points round-trip against their tree") {
  const RealTree y = make_ytree().tree();
  const TreePoint v = TreePoint::at_vertex(2);
  const TreePoint e = TreePoint::on_edge(y, 1, rat(1, 4));
  CHECK(point_from_json(point_to_json(v), y) == v);
  CHECK(point_from_json(point_to_json(e), y) == e);
  CHECK(point_to_json(v).contains("vertex"));
  CHECK(point_to_json(e).at("offset") == "1/4");

  CHECK_THROWS_AS(point_from_json(parse_json_text(R"({"vertex": 9})"), y), domain_error);
  CHECK_THROWS_AS(point_from_json(parse_json_text(R"({"edge": 1})"), y), parse_error);
  CHECK_THROWS_AS(
      point_from_json(parse_json_text(R"({"vertex": 1, "edge": 1, "offset": "1/4"})"), y),
      parse_error);
  CHECK_THROWS_AS(point_from_json(parse_json_text(R"({"edge": 1, "offset": "9/4"})"), y),
                  domain_error);
}

TEST_CASE("orders and measures round-trip") {
  const StructuredTree y = make_ytree();
  const PlanarOrder o = order_from_json(order_to_json(y.order()));
  CHECK(o == y.order());
  CHECK_THROWS_AS(order_from_json(parse_json_text(R"({"child_order": {"x": [0]}})")),
                  parse_error);

  const StructuredTree seg = make_segment_instance();
  const TreeMeasure m = measure_from_json(measure_to_json(seg.measure()), seg.tree());
  CHECK(m == seg.measure());
  CHECK(measure_to_json(seg.measure()).at("densities").at("0") == "2/3");

  Json badmass = measure_to_json(seg.measure());
  badmass["atoms"][0]["mass"] = "0/1";
  CHECK_THROWS_AS(measure_from_json(badmass, seg.tree()), validation_error);
}

TEST_CASE("structured bundles round-trip and validate") {
  const StructuredTree seg = make_segment_instance();
  CHECK(structured_from_json(structured_to_json(seg)) == seg);
  const StructuredTree y = make_ytree();
  CHECK(structured_from_json(structured_to_json(y)) == y);

  Json j = structured_to_json(y);
  j.erase("order");
  CHECK_THROWS_AS(structured_from_json(j), parse_error);

  Json mism = structured_to_json(y);
  mism["measure"]["densities"].erase("2");
  CHECK_THROWS_AS(structured_from_json(mism), validation_error);
}

TEST_CASE("piecewise maps round-trip") {
  const PiecewiseMap step(
      {{Rat(0), Rat(0), Rat(0)}, {rat(1, 2), rat(1, 2), rat(3, 2)}, {Rat(1), Rat(2), Rat(2)}});
  const Json j = map_to_json(step);
  CHECK(j.at("domain_end") == "1/1");
  CHECK(map_from_json(j) == step);

  Json bad = j;
  bad["domain_end"] = "3/1";
  CHECK_THROWS_AS(map_from_json(bad), parse_error);
}

TEST_CASE("files carry the canonical text form") {
  const std::string path = "tmp_test_height.json";
  save_json_file(path, height_to_json(make_h1()));
  const Json j = load_json_file(path);
  CHECK(height_from_json(j) == make_h1());
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json_file("does_not_exist_anywhere.json"), parse_error);
}
