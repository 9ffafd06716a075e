#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dendro/rational.hpp"

namespace dendro {

struct Edge {
  int id;
  int parent;
  int child;
  Rat length;  // > 0

  bool operator==(const Edge&) const = default;
};

// Checks the raw parts of a tree; empty result means admissible. Codes:
// "root", "vertex", "edge", "wiring", "length", "degree-two".
std::vector<std::string> tree_part_violations(int root, const std::vector<int>& vertices,
                                              const std::vector<Edge>& edges,
                                              const std::set<int>& marked);

// Finite rooted real tree: vertices joined by edges of positive rational
// length, every non-root vertex having exactly one parent. Degree-2 vertices
// are only admitted when marked; marks stand for measure breakpoints (density
// change or atom anchor), not branch structure.
class RealTree {
 public:
  RealTree(int root, std::vector<int> vertices, std::vector<Edge> edges,
           std::set<int> marked = {});  // throws validation_error

  int root() const { return root_; }
  const std::vector<int>& vertex_ids() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::set<int>& marked() const { return marked_; }

  bool has_vertex(int v) const { return vertex_index_.count(v) > 0; }
  bool has_edge(int e) const { return edge_index_.count(e) > 0; }
  const Edge& edge(int e) const;

  // Parent edge id of a non-root vertex.
  std::optional<int> parent_edge(int v) const;
  // Child edge ids in edge-list order; planar data may permute them.
  const std::vector<int>& child_edges(int v) const;
  const Rat& vertex_depth(int v) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Derived lookup tables are functions of the defining data, so comparing
  // the defining data alone is sufficient.
  bool operator==(const RealTree& o) const {
    return root_ == o.root_ && vertices_ == o.vertices_ &&
           edges_ == o.edges_ && marked_ == o.marked_;
  }

 private:
  int root_;
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::set<int> marked_;
  std::map<int, std::size_t> vertex_index_;
  std::map<int, std::size_t> edge_index_;
  std::map<int, int> parent_edge_;           // vertex -> edge id
  std::map<int, std::vector<int>> children_; // vertex -> edge ids
  std::map<int, Rat> depth_;
};

// A location on a tree: a vertex, or a point strictly inside an edge at a
// given distance from the edge's parent endpoint. Offsets 0 and length
// normalize to the endpoint vertices, so equality is point equality.
class TreePoint {
 public:
  static TreePoint at_vertex(int v);
  // Throws domain_error for unknown edges or offsets outside [0, length].
  static TreePoint on_edge(const RealTree& t, int edge_id, const Rat& offset);

  bool is_vertex() const { return is_vertex_; }
  int vertex() const { return vertex_; }
  int edge() const { return edge_; }
  const Rat& offset() const { return offset_; }

  bool operator==(const TreePoint&) const = default;
  // Arbitrary strict order so points can key containers.
  bool operator<(const TreePoint& o) const;

 private:
  bool is_vertex_ = true;
  int vertex_ = 0;
  int edge_ = 0;
  Rat offset_;
};

std::string point_to_string(const TreePoint& p);

// Throws domain_error unless p addresses a location of t.
void check_point(const RealTree& t, const TreePoint& p);

// Edge ids from the root down to a point. When the point sits inside the last
// edge, partial is true and offset gives the distance covered on it.
struct RootPath {
  std::vector<int> edges;
  bool partial = false;
  Rat offset;
};
RootPath root_path(const RealTree& t, const TreePoint& p);

// Distance from the root.
Rat depth(const RealTree& t, const TreePoint& p);

// Deepest common point of the two root paths ("branch point" of x and y).
TreePoint wedge(const RealTree& t, const TreePoint& x, const TreePoint& y);

// True when a lies on the root path of b (a == b included).
bool is_ancestor(const RealTree& t, const TreePoint& a, const TreePoint& b);

// Path-length metric.
Rat distance(const RealTree& t, const TreePoint& x, const TreePoint& y);

// Edge-interior points have degree 2; a vertex counts its children plus one
// for its parent unless it is the root.
int degree(const RealTree& t, const TreePoint& p);

struct Classification {
  std::vector<int> leaves;         // degree 1, root excluded by convention
  std::vector<int> branch_points;  // degree >= 3, root excluded by convention
};
Classification classify(const RealTree& t);

Rat total_length(const RealTree& t);

// Union of the root paths of the given points, returned as a canonical tree:
// unmarked degree-2 vertices created by pruning are dissolved into single
// edges. Kept vertices retain their ids; edges are renumbered.
RealTree span(const RealTree& t, const std::vector<TreePoint>& points);

// Four-point inequality d12 + d34 <= max(d13 + d24, d14 + d23).
bool four_point_check(const RealTree& t, const TreePoint& p1, const TreePoint& p2,
                      const TreePoint& p3, const TreePoint& p4);

}  // namespace dendro
