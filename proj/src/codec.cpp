#include "dendro/codec.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "dendro/errors.hpp"

namespace dendro {

// ---------------------------------------------------------------- maps ----

std::vector<std::string> validate_map_knots(const std::vector<MapKnot>& knots) {
  std::vector<std::string> out;
  if (knots.empty()) {
    out.push_back("map: needs at least the knot (0,0,0)");
    return out;
  }
  if (knots.front().t != 0 || knots.front().v_left != 0) {
    out.push_back("map: must start at t=0 with value 0");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const MapKnot& k = knots[i];
    if (i > 0 && !(knots[i - 1].t < k.t)) {
      out.push_back("map: knot times must strictly increase (knot " + std::to_string(i) +
                    ")");
    }
    if (k.v_right < k.v_left) {
      out.push_back("map: downward jump at knot " + std::to_string(i));
    }
    if (k.v_left < 0) {
      out.push_back("map: negative value at knot " + std::to_string(i));
    }
    if (i > 0 && k.v_left < knots[i - 1].v_right) {
      out.push_back("map: decreasing stretch before knot " + std::to_string(i));
    }
  }
  return out;
}

namespace {

std::vector<MapKnot> canonical_map_knots(std::vector<MapKnot> ks) {
  ks.back().v_right = ks.back().v_left;  // a trailing jump is invisible
  std::vector<MapKnot> out;
  out.reserve(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0 && i + 1 < ks.size() && ks[i].v_left == ks[i].v_right) {
      const MapKnot& a = out.back();
      const MapKnot& b = ks[i + 1];
      const Rat left = (ks[i].v_left - a.v_right) * (b.t - ks[i].t);
      const Rat right = (b.v_left - ks[i].v_right) * (ks[i].t - a.t);
      if (left == right) continue;  // same slope on both sides, no jump
    }
    out.push_back(ks[i]);
  }
  return out;
}

template <typename K>
std::size_t last_at_or_before(const std::vector<K>& ks, const Rat& t) {
  std::size_t lo = 0, hi = ks.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (ks[mid].t <= t) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

PiecewiseMap::PiecewiseMap() : knots_{{Rat(0), Rat(0), Rat(0)}} {}

PiecewiseMap::PiecewiseMap(std::vector<MapKnot> knots) {
  const auto violations = validate_map_knots(knots);
  if (!violations.empty()) {
    std::string msg = "map rejected:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw validation_error(msg);
  }
  knots_ = canonical_map_knots(std::move(knots));
}

Rat eval_map(const PiecewiseMap& phi, const Rat& t) {
  const auto& ks = phi.knots();
  if (t < 0 || ks.back().t < t) throw domain_error("map argument out of domain");
  const std::size_t i = last_at_or_before(ks, t);
  if (ks[i].t == t) return ks[i].v_left;
  const MapKnot& a = ks[i];
  const MapKnot& b = ks[i + 1];
  return a.v_right + (b.v_left - a.v_right) * (t - a.t) / (b.t - a.t);
}

Rat map_right_limit(const PiecewiseMap& phi, const Rat& t) {
  const auto& ks = phi.knots();
  if (t < 0 || !(t < ks.back().t)) {
    throw domain_error("map right limit needs t inside the domain");
  }
  const std::size_t i = last_at_or_before(ks, t);
  if (ks[i].t == t) return ks[i].v_right;
  const MapKnot& a = ks[i];
  const MapKnot& b = ks[i + 1];
  return a.v_right + (b.v_left - a.v_right) * (t - a.t) / (b.t - a.t);
}

// ---------------------------------------------------------------- walk ----

namespace {

// One step of the depth-first sweep. A pause spends mass while standing at
// `point`; a climb spends mass while rising from y_from to y_to. mass_b is
// the second measure's clock when the walk serves two measures at once.
struct WalkStep {
  bool pause;
  TreePoint point;
  Rat y_from;
  Rat y_to;
  Rat mass_a;
  Rat mass_b;
};

void plan_walk(const RealTree& t, const PlanarOrder& o, const TreeMeasure& a,
               const TreeMeasure* b, int v, const Rat& depth_v,
               std::vector<WalkStep>& out) {
  const TreePoint here = TreePoint::at_vertex(v);
  const Rat ma = atom_mass_at(a, here);
  const Rat mb = b ? atom_mass_at(*b, here) : Rat(0);
  if (ma > 0 || mb > 0) out.push_back({true, here, depth_v, depth_v, ma, mb});
  if (t.child_edges(v).empty()) return;
  for (int eid : o.child_order.at(v)) {
    const Edge& e = t.edge(eid);
    const Rat da = a.densities.at(eid);
    const Rat db = b ? b->densities.at(eid) : Rat(0);
    std::map<Rat, std::pair<Rat, Rat>> pauses;  // offset -> masses under a, b
    for (const auto& [off, mass] : atoms_on_edge(a, eid)) pauses[off].first = mass;
    if (b) {
      for (const auto& [off, mass] : atoms_on_edge(*b, eid)) pauses[off].second = mass;
    }
    Rat prev = 0;
    for (const auto& [off, masses] : pauses) {
      out.push_back({false, here, depth_v + prev, depth_v + off, da * (off - prev),
                     db * (off - prev)});
      out.push_back({true, TreePoint::on_edge(t, eid, off), depth_v + off, depth_v + off,
                     masses.first, masses.second});
      prev = off;
    }
    out.push_back({false, here, depth_v + prev, depth_v + e.length,
                   da * (e.length - prev), db * (e.length - prev)});
    plan_walk(t, o, a, b, e.child, depth_v + e.length, out);
  }
}

void require_positive_densities(const RealTree& t, const TreeMeasure& m,
                                const std::string& label) {
  for (const Edge& e : t.edges()) {
    if (!(m.densities.at(e.id) > 0)) {
      throw mes_violation(label + ": edge " + std::to_string(e.id) +
                          " has zero density, so order-adjacent points there are "
                          "separated by no mass");
    }
  }
}

}  // namespace

// -------------------------------------------------------------- encode ----

HeightFunction encode(const StructuredTree& s) {
  const RealTree& t = s.tree();
  require_positive_densities(t, s.measure(), "encode");
  if (!(total_mass(t, s.measure()) > 0)) {
    throw empty_measure("encode: the measure has no mass to explore");
  }
  std::vector<WalkStep> steps;
  plan_walk(t, s.order(), s.measure(), nullptr, t.root(), Rat(0), steps);

  std::vector<Knot> knots{{Rat(0), Rat(0), Rat(0)}};
  Rat now = 0;
  Rat prev_end_y = 0;
  bool first = true;
  for (const WalkStep& st : steps) {
    if (!(st.mass_a > 0)) continue;
    if (!first) knots.push_back({now, prev_end_y, st.y_from});
    now += st.mass_a;
    prev_end_y = st.y_to;
    first = false;
  }
  knots.push_back({now, prev_end_y, prev_end_y});
  return HeightFunction(std::move(knots));
}

// -------------------------------------------------------------- decode ----

namespace {

struct DecodeVertex {
  int parent_edge;            // -1 for the root
  std::vector<int> children;  // edge ids in visit order
  Rat depth;
  Rat atom;
};

struct DecodeEdge {
  int parent;
  int child;
  Rat length;
  Rat density;
};

}  // namespace

StructuredTree decode(const HeightFunction& h) {
  std::vector<DecodeVertex> vs{{-1, {}, Rat(0), Rat(0)}};
  std::vector<DecodeEdge> es;
  std::vector<int> spine{0};  // vertex ids, root to the active point

  // Move the active point down to depth y, spreading `rate` extra density on
  // everything retraced; splits the edge the stop lands in.
  auto descend_to = [&](const Rat& y, const Rat& rate) {
    while (vs[spine.back()].depth != y) {
      const int hv = spine.back();
      const int pe = vs[hv].parent_edge;
      const int pv = es[pe].parent;
      if (vs[pv].depth >= y) {  // the whole edge is retraced
        es[pe].density += rate;
        spine.pop_back();
        continue;
      }
      // Stop inside the edge: split it at depth y.
      const int nv = static_cast<int>(vs.size());
      const int upper = static_cast<int>(es.size());
      const Rat head_depth = vs[hv].depth;
      es.push_back({nv, hv, head_depth - y, es[pe].density + rate});
      es[pe].child = nv;
      es[pe].length = y - vs[pv].depth;
      vs[hv].parent_edge = upper;
      vs.push_back({pe, {upper}, y, Rat(0)});
      spine.back() = nv;
      return;
    }
  };

  const auto& ks = h.knots();
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    if (ks[i].y_right < ks[i].y_left) descend_to(ks[i].y_right, Rat(0));
    const Rat dur = ks[i + 1].t - ks[i].t;
    const Rat y0 = ks[i].y_right;
    const Rat y1 = ks[i + 1].y_left;
    if (y0 == y1) {
      vs[spine.back()].atom += dur;
    } else if (y0 < y1) {  // fresh growth off the active point
      const int hv = spine.back();
      const int nv = static_cast<int>(vs.size());
      const int ne = static_cast<int>(es.size());
      es.push_back({hv, nv, y1 - y0, dur / (y1 - y0)});
      vs[hv].children.push_back(ne);
      vs.push_back({ne, {}, y1, Rat(0)});
      spine.push_back(nv);
    } else {
      descend_to(y1, dur / (y0 - y1));
    }
  }

  // Canonical output: dissolve pass-through vertices that neither carry mass
  // nor change density, mark surviving degree-2 vertices, renumber in
  // depth-first order.
  auto invisible = [&](int v) {
    return v != 0 && vs[v].children.size() == 1 && vs[v].atom == 0 &&
           es[vs[v].parent_edge].density == es[vs[v].children[0]].density;
  };
  std::vector<int> vertex_ids{0};
  std::vector<Edge> edges;
  std::set<int> marks;
  TreeMeasure measure;
  PlanarOrder order;
  int next_vertex = 1;
  int next_edge = 0;
  auto emit = [&](auto&& self, int old_v, int new_id) -> void {
    if (vs[old_v].atom > 0) {
      measure.atoms.push_back({TreePoint::at_vertex(new_id), vs[old_v].atom});
    }
    std::vector<int> slots;
    for (int e0 : vs[old_v].children) {
      Rat length = es[e0].length;
      int end = es[e0].child;
      while (invisible(end)) {
        const int e1 = vs[end].children[0];
        length += es[e1].length;
        end = es[e1].child;
      }
      const int ne = next_edge++;
      const int nv = next_vertex++;
      edges.push_back({ne, new_id, nv, length});
      measure.densities[ne] = es[e0].density;
      slots.push_back(ne);
      vertex_ids.push_back(nv);
      self(self, end, nv);
    }
    if (!slots.empty()) order.child_order[new_id] = slots;
    if (slots.size() == 1 && new_id != 0) marks.insert(new_id);
  };
  emit(emit, 0, 0);

  RealTree tree(0, std::move(vertex_ids), std::move(edges), std::move(marks));
  return StructuredTree(std::move(tree), std::move(order), std::move(measure));
}

// --------------------------------------------------------- exploration ----

namespace {

// Position of the mass-parametrized walk: with strict=false the point
// occupied at time t (the last point whose swept mass reaches t), with
// strict=true the right limit (where the walk stands just after t).
TreePoint mass_descend(const RealTree& tr, const PlanarOrder& o, const TreeMeasure& m,
                       const Rat& t, bool strict) {
  auto reached = [&](const Rat& cum) { return strict ? cum > t : cum >= t; };
  int v = tr.root();
  Rat cum = 0;
  while (true) {
    cum += atom_mass_at(m, TreePoint::at_vertex(v));
    if (reached(cum)) return TreePoint::at_vertex(v);
    if (tr.child_edges(v).empty()) {
      throw domain_error("walk ran past the total mass");
    }
    bool advanced = false;
    for (int eid : o.child_order.at(v)) {
      const Rat bm = branch_mass(tr, m, eid);
      if (!reached(cum + bm)) {
        cum += bm;
        continue;
      }
      const Edge& e = tr.edge(eid);
      const Rat density = m.densities.at(eid);
      Rat prev = 0;
      for (const auto& [off, mass] : atoms_on_edge(m, eid)) {
        const Rat seg = density * (off - prev);
        if (seg > 0 && reached(cum + seg)) {
          return TreePoint::on_edge(tr, eid, prev + (t - cum) / density);
        }
        cum += seg;
        if (reached(cum + mass)) return TreePoint::on_edge(tr, eid, off);
        cum += mass;
        prev = off;
      }
      const Rat seg = density * (e.length - prev);
      if (seg > 0 && reached(cum + seg)) {
        return TreePoint::on_edge(tr, eid, prev + (t - cum) / density);
      }
      cum += seg;
      v = e.child;
      advanced = true;
      break;
    }
    if (!advanced) throw domain_error("walk ran past the total mass");
  }
}

}  // namespace

ExplorationState exploration_point(const StructuredTree& s, const Rat& t) {
  require_positive_densities(s.tree(), s.measure(), "exploration_point");
  const Rat M = total_mass(s.tree(), s.measure());
  if (t < 0 || M < t) throw domain_error("exploration time outside [0, total mass]");
  const TreePoint sigma_minus = mass_descend(s.tree(), s.order(), s.measure(), t, false);
  const Rat leave = left_set_measure(s, sigma_minus, true);  // mass once sigma- is done
  const Rat arrive = leave - atom_mass_at(s.measure(), sigma_minus);
  ExplorationState st;
  st.t = t;
  st.sigma_minus = sigma_minus;
  st.m_t = leave == t ? t : arrive;
  st.M_t = leave;
  st.sigma_plus = (t == M || leave > t)
                      ? sigma_minus
                      : mass_descend(s.tree(), s.order(), s.measure(), t, true);
  return st;
}

// ---------------------------------------------------------- equivalence ----

namespace {

struct SigNode {
  Rat atom;
  std::vector<std::tuple<Rat, Rat, SigNode>> kids;  // (length, density, subtree)
};

SigNode build_sig(const StructuredTree& s, int v) {
  SigNode n;
  n.atom = atom_mass_at(s.measure(), TreePoint::at_vertex(v));
  if (s.tree().child_edges(v).empty()) return n;
  for (int eid : s.order().child_order.at(v)) {
    const Edge& e = s.tree().edge(eid);
    const Rat density = s.measure().densities.at(eid);
    SigNode cur = build_sig(s, e.child);
    // Subdivide at interior atoms so the signature never depends on whether
    // a mass point is written as a vertex or as an offset.
    const auto atoms = atoms_on_edge(s.measure(), eid);
    Rat upper = e.length;
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
      SigNode mid;
      mid.atom = it->second;
      mid.kids.emplace_back(upper - it->first, density, std::move(cur));
      cur = std::move(mid);
      upper = it->first;
    }
    n.kids.emplace_back(upper, density, std::move(cur));
  }
  return n;
}

std::string sig_string(const SigNode& n, bool with_measure, bool with_order) {
  std::string out = "{";
  if (with_measure && n.atom > 0) out += "a" + rat_to_string(n.atom) + ";";
  std::vector<std::string> parts;
  for (const auto& kid : n.kids) {
    Rat length = std::get<0>(kid);
    const Rat& density = std::get<1>(kid);
    const SigNode* sub = &std::get<2>(kid);
    // Dissolve invisible pass-through points: they are not isometry data.
    while (sub->kids.size() == 1 &&
           (with_measure
                ? sub->atom == 0 && std::get<1>(sub->kids[0]) == density
                : true)) {
      length += std::get<0>(sub->kids[0]);
      sub = &std::get<2>(sub->kids[0]);
    }
    std::string p = "(" + rat_to_string(length);
    if (with_measure) p += "|" + rat_to_string(density);
    p += sig_string(*sub, with_measure, with_order) + ")";
    parts.push_back(std::move(p));
  }
  if (!with_order) std::sort(parts.begin(), parts.end());
  for (const auto& p : parts) out += p;
  out += "}";
  return out;
}

}  // namespace

std::string canonical_signature(const StructuredTree& s, bool with_measure,
                                bool with_order) {
  return sig_string(build_sig(s, s.tree().root()), with_measure, with_order);
}

bool equivalent(const StructuredTree& a, const StructuredTree& b, bool compare_measure,
                bool compare_order) {
  return canonical_signature(a, compare_measure, compare_order) ==
         canonical_signature(b, compare_measure, compare_order);
}

// ---------------------------------------------------------- time change ----

TimeChange time_change(const RealTree& t, const PlanarOrder& o, const TreeMeasure& mu,
                       const TreeMeasure& mu_prime) {
  std::vector<std::string> violations = order_violations(t, o);
  for (const auto& v : measure_violations(t, mu)) violations.push_back(v);
  for (const auto& v : measure_violations(t, mu_prime)) violations.push_back(v);
  if (!violations.empty()) {
    std::string msg = "time_change rejected:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw validation_error(msg);
  }
  require_positive_densities(t, mu, "time_change (first measure)");
  require_positive_densities(t, mu_prime, "time_change (second measure)");

  std::vector<WalkStep> steps;
  plan_walk(t, o, mu, &mu_prime, t.root(), Rat(0), steps);

  TimeChange result;
  std::vector<MapKnot> knots{{Rat(0), Rat(0), Rat(0)}};
  Rat now = 0;
  Rat value = 0;
  Rat prev_end = 0;
  bool first = true;
  for (const WalkStep& st : steps) {
    if (!(st.mass_a > 0) && !(st.mass_b > 0)) continue;
    if (st.pause && st.mass_a > 0 && st.mass_b > 0) {
      result.unique = false;
      result.shared_atoms.push_back(st.point);
    }
    if (!(st.mass_a > 0)) {  // second clock runs alone: upward jump, no time
      value += st.mass_b;
      continue;
    }
    if (first) {
      knots[0].v_right = value;  // a jump at time zero, if any
    } else {
      knots.push_back({now, prev_end, value});
    }
    now += st.mass_a;
    value += st.mass_b;
    prev_end = value;
    first = false;
  }
  knots.push_back({now, prev_end, prev_end});
  result.map = PiecewiseMap(std::move(knots));
  return result;
}

// --------------------------------------------------------------- sampler ----

HeightFunction aldous_height(const RealTree& t, const PlanarOrder& o,
                             const TreeMeasure& mu, int n, Rng& rng) {
  if (n < 1) throw domain_error("aldous_height needs at least one sample");
  std::vector<std::string> violations = order_violations(t, o);
  for (const auto& v : measure_violations(t, mu)) violations.push_back(v);
  if (!violations.empty()) {
    std::string msg = "aldous_height rejected:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw validation_error(msg);
  }
  const Rat M = total_mass(t, mu);
  if (!(M > 0)) throw empty_measure("aldous_height: cannot sample a massless measure");

  // Each sample is a uniform time u whose point is read off at mass-quantile
  // u*M; the time of a point is then exactly its visit time under the coding,
  // which is what makes the interpolant converge to the exact height function.
  struct Entry {
    TreePoint point;
    Rat u;
  };
  std::vector<Entry> entries;  // sorted by u == by tree order (mass-monotone)
  for (int i = 0; i < n; ++i) {
    const Rat u = rng.unit_rat();
    const TreePoint p = mass_descend(t, o, mu, u * M, false);
    std::size_t lo = 0, hi = entries.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (entries[mid].u < u) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo < entries.size() && entries[lo].u == u) continue;  // repeat draw
    if (u == 0) continue;  // the root anchor at time zero already covers it
    entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(lo), {p, u});
  }

  std::vector<Knot> knots{{Rat(0), Rat(0), Rat(0)}};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) {
      const Rat mid = (entries[i - 1].u + entries[i].u) / 2;
      const Rat dip = depth(t, wedge(t, entries[i - 1].point, entries[i].point));
      knots.push_back({mid, dip, dip});
    }
    const Rat d = depth(t, entries[i].point);
    knots.push_back({entries[i].u, d, d});
  }
  // Beyond the last sample nothing has been explored yet; holding the last
  // depth keeps the right edge consistent with the limit, which ends at the
  // depth of the order-maximal point rather than returning to zero.
  const Rat tail = entries.empty() ? Rat(0) : depth(t, entries.back().point);
  knots.push_back({Rat(1), tail, tail});
  return HeightFunction(std::move(knots));
}

}  // namespace dendro
