#include <doctest.h>

#include <string>
#include <vector>

#include "dendro/errors.hpp"
#include "dendro/instances.hpp"
#include "dendro/tree.hpp"

using namespace dendro;

namespace {

bool mentions(const std::vector<std::string>& vs, const std::string& prefix) {
  for (const auto& v : vs) {
    if (v.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

// Root 0 with stem to 1 and two arms 1->2, 1->3, unit lengths.
RealTree ytree() { return make_ytree().tree(); }

}  // namespace

TEST_CASE("raw tree parts are screened before construction") {
  CHECK(tree_part_violations(0, {0, 1}, {{0, 0, 1, Rat(1)}}, {}).empty());
  CHECK(tree_part_violations(0, {0}, {}, {}).empty());  // point tree

  CHECK(mentions(tree_part_violations(7, {0, 1}, {{0, 0, 1, Rat(1)}}, {}), "root"));
  CHECK(mentions(tree_part_violations(0, {0, 0}, {}, {}), "vertex"));
  CHECK(mentions(tree_part_violations(0, {0, 1}, {{0, 0, 1, Rat(0)}}, {}), "length"));
  CHECK(mentions(tree_part_violations(0, {0, 1}, {{0, 0, 1, Rat(1)}, {1, 0, 1, Rat(1)}}, {}),
                 "wiring"));
  CHECK(mentions(tree_part_violations(0, {0, 1, 2}, {{0, 0, 1, Rat(1)}}, {}), "wiring"));
  // An unmarked pass-through vertex is rejected, a marked one accepted.
  const std::vector<Edge> chain = {{0, 0, 1, Rat(1)}, {1, 1, 2, Rat(1)}};
  CHECK(mentions(tree_part_violations(0, {0, 1, 2}, chain, {}), "degree-two"));
  CHECK(tree_part_violations(0, {0, 1, 2}, chain, {1}).empty());
  CHECK_THROWS_AS(RealTree(0, {0, 1, 2}, chain), validation_error);
}

TEST_CASE("tree accessors expose structure") {
  const RealTree t = ytree();
  CHECK(t.root() == 0);
  CHECK(t.vertex_count() == 4);
  CHECK(t.edge_count() == 3);
  CHECK(t.has_vertex(3));
  CHECK_FALSE(t.has_vertex(9));
  CHECK(t.edge(1).child == 2);
  CHECK_THROWS_AS(t.edge(9), domain_error);
  CHECK(t.parent_edge(0) == std::nullopt);
  CHECK(t.parent_edge(2) == 1);
  CHECK(t.child_edges(1) == std::vector<int>{1, 2});
  CHECK(t.child_edges(3).empty());
  CHECK(t.vertex_depth(3) == Rat(2));
}

TEST_CASE("points normalize edge endpoints to vertices") {
  const RealTree t = ytree();
  CHECK(TreePoint::on_edge(t, 0, Rat(0)) == TreePoint::at_vertex(0));
  CHECK(TreePoint::on_edge(t, 0, Rat(1)) == TreePoint::at_vertex(1));
  const TreePoint mid = TreePoint::on_edge(t, 0, rat(1, 2));
  CHECK_FALSE(mid.is_vertex());
  CHECK(mid.edge() == 0);
  CHECK(mid.offset() == rat(1, 2));
  CHECK_THROWS_AS(TreePoint::on_edge(t, 0, Rat(2)), domain_error);
  CHECK_THROWS_AS(TreePoint::on_edge(t, 9, rat(1, 2)), domain_error);
  CHECK_THROWS_AS(check_point(t, TreePoint::at_vertex(9)), domain_error);
  CHECK(point_to_string(TreePoint::at_vertex(2)) == point_to_string(TreePoint::at_vertex(2)));
}

TEST_CASE("root paths, depth, wedge and ancestry") {
  const RealTree t = ytree();
  const TreePoint leaf1 = TreePoint::at_vertex(2);
  const TreePoint leaf2 = TreePoint::at_vertex(3);
  const TreePoint b = TreePoint::at_vertex(1);
  const TreePoint arm2mid = TreePoint::on_edge(t, 2, rat(1, 4));

  const RootPath rp = root_path(t, arm2mid);
  CHECK(rp.edges == std::vector<int>{0, 2});
  CHECK(rp.partial);
  CHECK(rp.offset == rat(1, 4));

  CHECK(depth(t, leaf1) == Rat(2));
  CHECK(depth(t, arm2mid) == rat(5, 4));
  CHECK(wedge(t, leaf1, leaf2) == b);
  CHECK(wedge(t, leaf1, leaf1) == leaf1);
  CHECK(wedge(t, TreePoint::at_vertex(0), leaf1) == TreePoint::at_vertex(0));
  CHECK(wedge(t, arm2mid, leaf2) == arm2mid);
  CHECK(is_ancestor(t, b, arm2mid));
  CHECK(is_ancestor(t, leaf1, leaf1));
  CHECK_FALSE(is_ancestor(t, leaf1, leaf2));
}

TEST_CASE("path-length metric on the Y tree and a segment") {
  const RealTree t = ytree();
  const TreePoint leaf1 = TreePoint::at_vertex(2);
  const TreePoint leaf2 = TreePoint::at_vertex(3);
  CHECK(distance(t, leaf1, leaf2) == Rat(2));
  CHECK(distance(t, leaf1, leaf1) == Rat(0));
  CHECK(distance(t, TreePoint::at_vertex(0), leaf1) == Rat(2));
  CHECK(distance(t, TreePoint::on_edge(t, 1, rat(1, 3)), leaf2) == rat(4, 3));

  const RealTree seg(0, {0, 1}, {{0, 0, 1, Rat(1)}});
  CHECK(distance(seg, TreePoint::at_vertex(0), TreePoint::on_edge(seg, 0, rat(1, 2))) ==
        rat(1, 2));
  // Wedge depth identity: 2 d(rho, x^y) = d(rho,x) + d(rho,y) - d(x,y).
  const TreePoint w = wedge(t, leaf1, leaf2);
  CHECK(2 * depth(t, w) == depth(t, leaf1) + depth(t, leaf2) - distance(t, leaf1, leaf2));
}

TEST_CASE("degree and classification follow the component count") {
  const RealTree t = ytree();
  CHECK(degree(t, TreePoint::at_vertex(1)) == 3);
  CHECK(degree(t, TreePoint::at_vertex(0)) == 1);
  CHECK(degree(t, TreePoint::at_vertex(2)) == 1);
  CHECK(degree(t, TreePoint::on_edge(t, 2, rat(1, 2))) == 2);

  const Classification c = classify(t);
  CHECK(c.leaves == std::vector<int>{2, 3});
  CHECK(c.branch_points == std::vector<int>{1});
}

TEST_CASE("length and spans") {
  const RealTree t = ytree();
  CHECK(total_length(t) == Rat(3));

  const RealTree arc = span(t, {TreePoint::at_vertex(2)});
  CHECK(total_length(arc) == Rat(2));
  CHECK(arc.vertex_count() == 2);  // the pass-through branch vertex dissolves

  const RealTree point = span(t, {TreePoint::at_vertex(0)});
  CHECK(total_length(point) == Rat(0));
  CHECK(point.vertex_count() == 1);

  const RealTree full = span(t, {TreePoint::at_vertex(2), TreePoint::at_vertex(3)});
  CHECK(total_length(full) == Rat(3));
  CHECK_THROWS_AS(span(t, {}), domain_error);
}

TEST_CASE("four point inequality holds on vertex quadruples") {
  const RealTree t = ytree();
  std::vector<TreePoint> pts;
  for (int v : t.vertex_ids()) pts.push_back(TreePoint::at_vertex(v));
  pts.push_back(TreePoint::on_edge(t, 2, rat(1, 2)));
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts)
        for (const auto& d : pts) CHECK(four_point_check(t, a, b, c, d));
}
