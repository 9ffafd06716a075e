#include "dendro/order_measure.hpp"

#include <algorithm>
#include <set>

#include "dendro/errors.hpp"

namespace dendro {

std::vector<std::string> order_violations(const RealTree& t, const PlanarOrder& o) {
  std::vector<std::string> out;
  for (const auto& [v, edges] : o.child_order) {
    if (!t.has_vertex(v)) {
      out.push_back("order: unknown vertex " + std::to_string(v));
      continue;
    }
    std::multiset<int> given(edges.begin(), edges.end());
    const auto& actual = t.child_edges(v);
    std::multiset<int> expected(actual.begin(), actual.end());
    if (given != expected) {
      out.push_back("order: children of vertex " + std::to_string(v) +
                    " are not a permutation of its child edges");
    }
  }
  for (int v : t.vertex_ids()) {
    if (!t.child_edges(v).empty() && !o.child_order.count(v)) {
      out.push_back("order: vertex " + std::to_string(v) + " has no child ordering");
    }
  }
  return out;
}

int order_position(const PlanarOrder& o, int v, int e) {
  auto it = o.child_order.find(v);
  if (it != o.child_order.end()) {
    const auto& edges = it->second;
    auto pos = std::find(edges.begin(), edges.end(), e);
    if (pos != edges.end()) return static_cast<int>(pos - edges.begin());
  }
  throw domain_error("edge " + std::to_string(e) + " is not ordered under vertex " +
                     std::to_string(v));
}

std::vector<std::string> measure_violations(const RealTree& t, const TreeMeasure& m) {
  std::vector<std::string> out;
  for (const Edge& e : t.edges()) {
    auto it = m.densities.find(e.id);
    if (it == m.densities.end()) {
      out.push_back("measure: edge " + std::to_string(e.id) + " has no density");
    } else if (it->second < 0) {
      out.push_back("measure: negative density on edge " + std::to_string(e.id));
    }
  }
  for (const auto& [eid, d] : m.densities) {
    if (!t.has_edge(eid)) {
      out.push_back("measure: density names unknown edge " + std::to_string(eid));
    }
  }
  std::set<TreePoint> seen;
  for (const Atom& a : m.atoms) {
    try {
      check_point(t, a.point);
    } catch (const std::exception& e) {
      out.push_back(std::string("measure: bad atom location: ") + e.what());
      continue;
    }
    if (!(a.mass > 0)) {
      out.push_back("measure: atom at " + point_to_string(a.point) +
                    " must have positive mass");
    }
    if (!seen.insert(a.point).second) {
      out.push_back("measure: duplicate atom location " + point_to_string(a.point));
    }
  }
  return out;
}

Rat total_mass(const RealTree& t, const TreeMeasure& m) {
  Rat sum = 0;
  for (const Edge& e : t.edges()) {
    auto it = m.densities.find(e.id);
    if (it != m.densities.end()) sum += it->second * e.length;
  }
  for (const Atom& a : m.atoms) sum += a.mass;
  return sum;
}

Rat atom_mass_at(const TreeMeasure& m, const TreePoint& p) {
  for (const Atom& a : m.atoms) {
    if (a.point == p) return a.mass;
  }
  return Rat(0);
}

std::vector<std::pair<Rat, Rat>> atoms_on_edge(const TreeMeasure& m, int edge_id) {
  std::vector<std::pair<Rat, Rat>> out;
  for (const Atom& a : m.atoms) {
    if (!a.point.is_vertex() && a.point.edge() == edge_id) {
      out.emplace_back(a.point.offset(), a.mass);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

Rat vertex_branch_mass(const RealTree& t, const TreeMeasure& m, int v) {
  Rat sum = atom_mass_at(m, TreePoint::at_vertex(v));
  for (int e : t.child_edges(v)) sum += branch_mass(t, m, e);
  return sum;
}

}  // namespace

Rat branch_mass(const RealTree& t, const TreeMeasure& m, int edge_id) {
  const Edge& e = t.edge(edge_id);
  Rat sum = m.densities.at(edge_id) * e.length;
  for (const auto& [off, mass] : atoms_on_edge(m, edge_id)) sum += mass;
  return sum + vertex_branch_mass(t, m, e.child);
}

StructuredTree::StructuredTree(RealTree tree, PlanarOrder order, TreeMeasure measure)
    : tree_(std::move(tree)), order_(std::move(order)), measure_(std::move(measure)) {
  auto violations = order_violations(tree_, order_);
  auto mv = measure_violations(tree_, measure_);
  violations.insert(violations.end(), mv.begin(), mv.end());
  if (!violations.empty()) {
    std::string msg = "structured tree rejected:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw validation_error(msg);
  }
}

Ordering compare(const RealTree& t, const PlanarOrder& o, const TreePoint& x,
                 const TreePoint& y) {
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
      if (px.offset == py.offset) return Ordering::Equal;
      return px.offset < py.offset ? Ordering::Less : Ordering::Greater;
    }
    if (px.partial) return Ordering::Less;     // y is the child endpoint below x
    if (py.partial) return Ordering::Greater;  // x is the child endpoint below y
    return Ordering::Equal;
  }
  if (common == px.edges.size()) return Ordering::Less;  // x on y's root path
  if (common == py.edges.size()) return Ordering::Greater;
  const int v = common == 0 ? t.root() : t.edge(px.edges[common - 1]).child;
  const int pos_x = order_position(o, v, px.edges[common]);
  const int pos_y = order_position(o, v, py.edges[common]);
  return pos_x < pos_y ? Ordering::Less : Ordering::Greater;
}

Ordering compare(const StructuredTree& s, const TreePoint& x, const TreePoint& y) {
  return compare(s.tree(), s.order(), x, y);
}

CompatReport check_compatibility_fn(const RealTree& t, const CompareFn& cmp,
                                    int sample_count, std::uint64_t seed) {
  CompatReport report;
  Rng rng(seed);
  const std::vector<TreePoint> pool = probe_points(t);
  auto pick = [&] { return pool[rng.below(pool.size())]; };

  // Law 1: a point of the root path never comes later.
  for (int i = 0; i < sample_count && report.ok; ++i) {
    TreePoint b = pick();
    RootPath path = root_path(t, b);
    TreePoint a = TreePoint::at_vertex(t.root());
    if (!path.edges.empty()) {
      const std::size_t k = rng.below(path.edges.size());
      const Edge& e = t.edge(path.edges[k]);
      Rat limit = (path.partial && k + 1 == path.edges.size()) ? path.offset : e.length;
      a = TreePoint::on_edge(t, e.id, limit * rat(static_cast<long>(rng.below(5)), 4));
    }
    ++report.pairs_checked;
    if (cmp(a, b) == Ordering::Greater) {
      report.ok = false;
      report.counterexample = "ancestor " + point_to_string(a) + " compares after " +
                              point_to_string(b);
    }
  }

  // Law 2: for x <= y <= z, the deeper of x^y and x^z lies on y's root path
  // and equals x^y.
  for (int i = 0; i < sample_count && report.ok; ++i) {
    std::vector<TreePoint> tri{pick(), pick(), pick()};
    std::sort(tri.begin(), tri.end(), [&](const TreePoint& a, const TreePoint& b) {
      return cmp(a, b) == Ordering::Less;
    });
    const TreePoint w_xy = wedge(t, tri[0], tri[1]);
    const TreePoint w_xz = wedge(t, tri[0], tri[2]);
    const TreePoint gamma =
        depth(t, w_xy) >= depth(t, w_xz) ? w_xy : w_xz;  // comparable ancestors of x
    ++report.triples_checked;
    if (!is_ancestor(t, gamma, tri[1]) || !(gamma == w_xy)) {
      report.ok = false;
      report.counterexample = "triple " + point_to_string(tri[0]) + " <= " +
                              point_to_string(tri[1]) + " <= " + point_to_string(tri[2]) +
                              " branches at " + point_to_string(gamma) +
                              " off the middle root path";
    }
  }
  return report;
}

CompatReport check_compatibility(const StructuredTree& s, int sample_count,
                                 std::uint64_t seed) {
  const RealTree& t = s.tree();
  const PlanarOrder& o = s.order();
  return check_compatibility_fn(
      t, [&](const TreePoint& a, const TreePoint& b) { return compare(t, o, a, b); },
      sample_count, seed);
}

PlanarOrder shuffle(const RealTree& t, Rng& rng) {
  PlanarOrder o;
  for (int v : t.vertex_ids()) {
    const auto& kids = t.child_edges(v);
    if (kids.empty()) continue;
    std::vector<int> perm = kids;
    rng.shuffle(perm);
    o.child_order[v] = std::move(perm);
  }
  return o;
}

Rat left_set_measure(const RealTree& t, const PlanarOrder& o, const TreeMeasure& m,
                     const TreePoint& x, bool include_x) {
  check_point(t, x);
  const RootPath path = root_path(t, x);
  Rat acc = 0;
  int v = t.root();
  for (std::size_t i = 0; i <= path.edges.size(); ++i) {
    const bool at_end = i == path.edges.size();
    const TreePoint here = TreePoint::at_vertex(v);
    if (at_end) {  // x is the vertex v
      if (include_x) acc += atom_mass_at(m, here);
      return acc;
    }
    acc += atom_mass_at(m, here);  // strict ancestor of x
    const int next = path.edges[i];
    if (!t.child_edges(v).empty()) {
      const int stop = order_position(o, v, next);
      const auto& ordered = o.child_order.at(v);
      for (int k = 0; k < stop; ++k) acc += branch_mass(t, m, ordered[k]);
    }
    const Edge& e = t.edge(next);
    const Rat density = m.densities.at(next);
    const bool partial_here = path.partial && i + 1 == path.edges.size();
    const Rat limit = partial_here ? path.offset : e.length;
    acc += density * limit;
    for (const auto& [off, mass] : atoms_on_edge(m, next)) {
      if (off < limit || (off == limit && partial_here && include_x)) acc += mass;
    }
    if (partial_here) return acc;  // x is the point at `limit` on this edge
    v = e.child;
  }
  return acc;  // unreachable
}

Rat left_set_measure(const StructuredTree& s, const TreePoint& x, bool include_x) {
  return left_set_measure(s.tree(), s.order(), s.measure(), x, include_x);
}

bool check_mes(const StructuredTree& s) {
  for (const Edge& e : s.tree().edges()) {
    if (!(s.measure().densities.at(e.id) > 0)) return false;
  }
  return true;
}

IncReport check_inc(const StructuredTree& s, int sample_count, std::uint64_t seed) {
  IncReport report;
  Rng rng(seed);
  const RealTree& t = s.tree();
  const std::vector<TreePoint> pool = probe_points(t);
  for (int i = 0; i < sample_count && report.ok; ++i) {
    TreePoint a = pool[rng.below(pool.size())];
    TreePoint b = pool[rng.below(pool.size())];
    if (compare(s, a, b) == Ordering::Greater) std::swap(a, b);
    if (a == b) continue;
    ++report.pairs_checked;
    if (!(left_set_measure(s, a, true) < left_set_measure(s, b, true))) {
      report.ok = false;
      report.counterexample = "left mass fails to grow from " + point_to_string(a) +
                              " to " + point_to_string(b);
    }
  }
  return report;
}

std::vector<PlanarOrder> enumerate_compatible_orders(const RealTree& t) {
  std::vector<PlanarOrder> result{PlanarOrder{}};
  for (int v : t.vertex_ids()) {
    std::vector<int> kids = t.child_edges(v);
    if (kids.empty()) continue;
    std::sort(kids.begin(), kids.end());
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(kids);
    } while (std::next_permutation(kids.begin(), kids.end()));
    if (result.size() * perms.size() > 100000) {
      throw domain_error("too many planar orders to enumerate");
    }
    std::vector<PlanarOrder> extended;
    extended.reserve(result.size() * perms.size());
    for (const PlanarOrder& base : result) {
      for (const auto& perm : perms) {
        PlanarOrder next = base;
        next.child_order[v] = perm;
        extended.push_back(std::move(next));
      }
    }
    result = std::move(extended);
  }
  return result;
}

StructuredTree regularize(const StructuredTree& s, const Rat& eps) {
  if (!(eps > 0)) throw domain_error("regularize needs a positive density bump");
  TreeMeasure m = s.measure();
  for (auto& [eid, d] : m.densities) d += eps;
  return StructuredTree(s.tree(), s.order(), std::move(m));
}

std::vector<TreePoint> probe_points(const RealTree& t) {
  std::vector<TreePoint> out;
  for (int v : t.vertex_ids()) out.push_back(TreePoint::at_vertex(v));
  for (const Edge& e : t.edges()) {
    for (long k = 1; k <= 3; ++k) {
      out.push_back(TreePoint::on_edge(t, e.id, e.length * rat(k, 4)));
    }
  }
  return out;
}

}  // namespace dendro
