#include "dendro/tree.hpp"

#include <algorithm>

#include "dendro/errors.hpp"

namespace dendro {

std::vector<std::string> tree_part_violations(int root, const std::vector<int>& vertices,
                                              const std::vector<Edge>& edges,
                                              const std::set<int>& marked) {
  std::vector<std::string> out;
  std::set<int> vset;
  for (int v : vertices) {
    if (!vset.insert(v).second) out.push_back("vertex: duplicate id " + std::to_string(v));
  }
  if (!vset.count(root)) out.push_back("root: id " + std::to_string(root) + " is not a vertex");
  std::set<int> eset;
  std::map<int, int> parent_of;
  std::map<int, int> child_count;
  for (const Edge& e : edges) {
    if (!eset.insert(e.id).second) out.push_back("edge: duplicate id " + std::to_string(e.id));
    if (!vset.count(e.parent) || !vset.count(e.child)) {
      out.push_back("edge " + std::to_string(e.id) + ": endpoint is not a vertex");
      continue;
    }
    if (!(e.length > 0)) {
      out.push_back("length: edge " + std::to_string(e.id) + " must have positive length");
    }
    if (e.child == root) out.push_back("wiring: root has a parent edge " + std::to_string(e.id));
    if (parent_of.count(e.child)) {
      out.push_back("wiring: vertex " + std::to_string(e.child) + " has two parent edges");
    }
    parent_of[e.child] = e.id;
    child_count[e.parent]++;
  }
  for (int m : marked) {
    if (!vset.count(m)) out.push_back("vertex: marked id " + std::to_string(m) + " unknown");
  }
  if (!out.empty()) return out;  // structural errors below assume clean wiring

  for (int v : vertices) {
    if (v != root && !parent_of.count(v)) {
      out.push_back("wiring: vertex " + std::to_string(v) + " is disconnected from the root");
    }
  }
  // One parent each plus full connectivity rules out cycles; still verify
  // reachability to catch parent chains that never meet the root.
  std::map<int, std::vector<int>> kids;
  for (const Edge& e : edges) kids[e.parent].push_back(e.child);
  std::vector<int> stack{root};
  std::set<int> seen{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : kids[v]) {
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  if (seen.size() != vset.size()) out.push_back("wiring: edge set does not span the vertices");
  for (int v : vertices) {
    const int deg = child_count.count(v) ? child_count[v] + (v != root ? 1 : 0)
                                         : (v != root ? 1 : 0);
    if (v != root && deg == 2 && !marked.count(v)) {
      out.push_back("degree-two: vertex " + std::to_string(v) + " is unmarked");
    }
  }
  return out;
}

RealTree::RealTree(int root, std::vector<int> vertices, std::vector<Edge> edges,
                   std::set<int> marked)
    : root_(root),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      marked_(std::move(marked)) {
  const auto violations = tree_part_violations(root_, vertices_, edges_, marked_);
  if (!violations.empty()) {
    std::string msg = "tree rejected:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw validation_error(msg);
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i]] = i;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    edge_index_[e.id] = i;
    parent_edge_[e.child] = e.id;
    children_[e.parent].push_back(e.id);
  }
  // Depths by walking down from the root.
  depth_[root_] = Rat(0);
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto it = children_.find(v);
    if (it == children_.end()) continue;
    for (int eid : it->second) {
      const Edge& e = edges_[edge_index_[eid]];
      depth_[e.child] = depth_[v] + e.length;
      stack.push_back(e.child);
    }
  }
}

const Edge& RealTree::edge(int e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw domain_error("unknown edge id " + std::to_string(e));
  return edges_[it->second];
}

std::optional<int> RealTree::parent_edge(int v) const {
  auto it = parent_edge_.find(v);
  if (it == parent_edge_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& RealTree::child_edges(int v) const {
  static const std::vector<int> none;
  auto it = children_.find(v);
  return it == children_.end() ? none : it->second;
}

const Rat& RealTree::vertex_depth(int v) const {
  auto it = depth_.find(v);
  if (it == depth_.end()) throw domain_error("unknown vertex id " + std::to_string(v));
  return it->second;
}

TreePoint TreePoint::at_vertex(int v) {
  TreePoint p;
  p.is_vertex_ = true;
  p.vertex_ = v;
  return p;
}

TreePoint TreePoint::on_edge(const RealTree& t, int edge_id, const Rat& offset) {
  const Edge& e = t.edge(edge_id);
  if (offset < 0 || e.length < offset) {
    throw domain_error("offset " + rat_to_string(offset) + " outside edge " +
                       std::to_string(edge_id));
  }
  if (offset == 0) return at_vertex(e.parent);
  if (offset == e.length) return at_vertex(e.child);
  TreePoint p;
  p.is_vertex_ = false;
  p.edge_ = edge_id;
  p.offset_ = offset;
  return p;
}

bool TreePoint::operator<(const TreePoint& o) const {
  if (is_vertex_ != o.is_vertex_) return is_vertex_ && !o.is_vertex_;
  if (is_vertex_) return vertex_ < o.vertex_;
  if (edge_ != o.edge_) return edge_ < o.edge_;
  return offset_ < o.offset_;
}

std::string point_to_string(const TreePoint& p) {
  if (p.is_vertex()) return "v" + std::to_string(p.vertex());
  return "e" + std::to_string(p.edge()) + "@" + rat_to_string(p.offset());
}

void check_point(const RealTree& t, const TreePoint& p) {
  if (p.is_vertex()) {
    if (!t.has_vertex(p.vertex())) {
      throw domain_error("point names unknown vertex " + std::to_string(p.vertex()));
    }
    return;
  }
  const Edge& e = t.edge(p.edge());  // throws for unknown edges
  if (!(0 < p.offset() && p.offset() < e.length)) {
    throw domain_error("point offset outside edge " + std::to_string(p.edge()));
  }
}

RootPath root_path(const RealTree& t, const TreePoint& p) {
  RootPath path;
  int v;
  if (p.is_vertex()) {
    v = p.vertex();
  } else {
    path.partial = true;
    path.offset = p.offset();
    path.edges.push_back(p.edge());
    v = t.edge(p.edge()).parent;
  }
  while (auto e = t.parent_edge(v)) {
    path.edges.push_back(*e);
    v = t.edge(*e).parent;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

Rat depth(const RealTree& t, const TreePoint& p) {
  check_point(t, p);
  if (p.is_vertex()) return t.vertex_depth(p.vertex());
  const Edge& e = t.edge(p.edge());
  return t.vertex_depth(e.parent) + p.offset();
}

TreePoint wedge(const RealTree& t, const TreePoint& x, const TreePoint& y) {
  check_point(t, x);
  check_point(t, y);
  const RootPath px = root_path(t, x);
  const RootPath py = root_path(t, y);
  std::size_t common = 0;
  while (common < px.edges.size() && common < py.edges.size() &&
         px.edges[common] == py.edges[common]) {
    ++common;
  }
  if (common == px.edges.size() && common == py.edges.size()) {
    if (px.partial && py.partial) {
      // Same edge; the point nearer the parent is the meeting point.
      return TreePoint::on_edge(t, px.edges.back(), rat_min(px.offset, py.offset));
    }
    if (px.partial) return x;  // y is the child endpoint below x
    if (py.partial) return y;
    return x;  // same vertex
  }
  if (common == px.edges.size()) {
    // y's path runs through everything x uses, so x sits on y's root path.
    return x;
  }
  if (common == py.edges.size()) return y;
  if (common == 0) return TreePoint::at_vertex(t.root());
  return TreePoint::at_vertex(t.edge(px.edges[common - 1]).child);
}

bool is_ancestor(const RealTree& t, const TreePoint& a, const TreePoint& b) {
  return wedge(t, a, b) == a;
}

Rat distance(const RealTree& t, const TreePoint& x, const TreePoint& y) {
  return depth(t, x) + depth(t, y) - 2 * depth(t, wedge(t, x, y));
}

int degree(const RealTree& t, const TreePoint& p) {
  check_point(t, p);
  if (!p.is_vertex()) return 2;
  const int v = p.vertex();
  return static_cast<int>(t.child_edges(v).size()) + (v != t.root() ? 1 : 0);
}

Classification classify(const RealTree& t) {
  Classification c;
  for (int v : t.vertex_ids()) {
    if (v == t.root()) continue;
    const int d = degree(t, TreePoint::at_vertex(v));
    if (d == 1) c.leaves.push_back(v);
    if (d >= 3) c.branch_points.push_back(v);
  }
  return c;
}

Rat total_length(const RealTree& t) {
  Rat sum = 0;
  for (const Edge& e : t.edges()) sum += e.length;
  return sum;
}

RealTree span(const RealTree& t, const std::vector<TreePoint>& points) {
  if (points.empty()) {
    throw domain_error("span: the point set must not be empty");
  }
  // How much of each edge the union of root paths needs.
  std::map<int, Rat> need;
  for (const TreePoint& p : points) {
    check_point(t, p);
    RootPath path = root_path(t, p);
    for (std::size_t i = 0; i + 1 < path.edges.size(); ++i) {
      need[path.edges[i]] = t.edge(path.edges[i]).length;
    }
    if (!path.edges.empty()) {
      const int last = path.edges.back();
      const Rat want = path.partial ? path.offset : t.edge(last).length;
      auto it = need.find(last);
      if (it == need.end() || it->second < want) need[last] = want;
    }
  }

  int fresh = t.root();
  for (int v : t.vertex_ids()) fresh = std::max(fresh, v);
  std::map<int, int> cut_vertex;  // edge id -> fresh vertex at the cut
  std::map<int, std::vector<int>> kept_children;  // vertex -> needed edge ids
  std::map<int, std::pair<int, Rat>> endpoint;    // edge id -> (vertex, kept length)
  for (const auto& [eid, len] : need) {
    const Edge& e = t.edge(eid);
    kept_children[e.parent].push_back(eid);
    if (len == e.length) {
      endpoint[eid] = {e.child, len};
    } else {
      cut_vertex[eid] = ++fresh;
      endpoint[eid] = {cut_vertex[eid], len};
    }
  }
  for (auto& [v, es] : kept_children) std::sort(es.begin(), es.end());

  std::vector<int> vertices{t.root()};
  std::vector<Edge> edges;
  std::set<int> marks;
  int next_edge = 0;
  // Depth-first emit, dissolving unmarked pass-through vertices.
  auto emit = [&](auto&& self, int v) -> void {
    auto it = kept_children.find(v);
    if (it == kept_children.end()) return;
    for (int eid : it->second) {
      auto [end, len] = endpoint[eid];
      Rat length = len;
      while (t.has_vertex(end) && end != t.root() && !t.marked().count(end) &&
             kept_children.count(end) && kept_children.at(end).size() == 1) {
        const int next = kept_children.at(end)[0];
        auto [nxt, nlen] = endpoint[next];
        length += nlen;
        end = nxt;
      }
      vertices.push_back(end);
      if (t.has_vertex(end) && t.marked().count(end)) marks.insert(end);
      edges.push_back({next_edge++, v, end, length});
      self(self, end);
    }
  };
  emit(emit, t.root());
  return RealTree(t.root(), std::move(vertices), std::move(edges), std::move(marks));
}

bool four_point_check(const RealTree& t, const TreePoint& p1, const TreePoint& p2,
                      const TreePoint& p3, const TreePoint& p4) {
  const Rat d12 = distance(t, p1, p2);
  const Rat d34 = distance(t, p3, p4);
  const Rat d13 = distance(t, p1, p3);
  const Rat d24 = distance(t, p2, p4);
  const Rat d14 = distance(t, p1, p4);
  const Rat d23 = distance(t, p2, p3);
  return d12 + d34 <= rat_max(d13 + d24, d14 + d23);
}

}  // namespace dendro
