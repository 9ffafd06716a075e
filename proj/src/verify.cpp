#include "dendro/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "dendro/codec.hpp"
#include "dendro/errors.hpp"
#include "dendro/height_function.hpp"
#include "dendro/instances.hpp"
#include "dendro/interval_set.hpp"
#include "dendro/order_measure.hpp"
#include "dendro/random_gen.hpp"
#include "dendro/rng.hpp"
#include "dendro/tree.hpp"

namespace dendro {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { rep_.suite = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++rep_.checks_run;
    if (!ok) rep_.failures.push_back(what);
  }

  SuiteReport take() { return std::move(rep_); }

 private:
  SuiteReport rep_;
};

Rat dyadic_in(Rng& rng, const Rat& hi) {
  return hi * rat(static_cast<long>(rng.below(4097)), 4096);
}

std::string tag(const char* what, int c) { return std::string(what) + " [case " + std::to_string(c) + "]"; }

// Reference evaluation by linear scan over the pieces.
Rat oracle_eval(const HeightFunction& h, const Rat& t) {
  const auto& ks = h.knots();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (t == ks[i].t) return ks[i].y_left;
    if (i + 1 < ks.size() && ks[i].t < t && t < ks[i + 1].t) {
      return ks[i].y_right + (ks[i + 1].y_left - ks[i].y_right) * (t - ks[i].t) /
                                 (ks[i + 1].t - ks[i].t);
    }
  }
  return ks.back().y_left;
}

// Reference infimum: piecewise-affine paths attain extremes at knot values,
// knot right limits, or the interval ends.
Rat oracle_min_on(const HeightFunction& h, const Rat& s, const Rat& t) {
  const Rat lo = rat_min(s, t);
  const Rat hi = rat_max(s, t);
  Rat best = oracle_eval(h, lo);
  auto consider = [&](const Rat& v) {
    if (v < best) best = v;
  };
  consider(oracle_eval(h, hi));
  for (const Knot& k : h.knots()) {
    if (lo <= k.t && k.t <= hi) consider(k.y_left);
    if (lo <= k.t && k.t < hi) consider(k.y_right);
  }
  return best;
}

// ------------------------------------------------------------ height_fn ----

SuiteReport suite_height_fn(int cases, std::uint64_t seed) {
  Suite s("height_fn");
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    Rng sub(rng.fork());
    const HeightFunction h = random_height_function(sub);
    const Rat z = h.lifetime();

    std::vector<Rat> ts{dyadic_in(sub, z), dyadic_in(sub, z), dyadic_in(sub, z),
                        dyadic_in(sub, z)};
    std::sort(ts.begin(), ts.end());
    s.check(quotient_distance(h, ts[0], ts[2]) >= 0, tag("quotient_distance >= 0", c));
    s.check(quotient_distance(h, ts[0], ts[2]) == quotient_distance(h, ts[2], ts[0]),
            tag("quotient_distance symmetric", c));
    s.check(four_times_check(h, ts[0], ts[1], ts[2], ts[3]), tag("four-times identity", c));
    s.check(min_on(h, ts[0], ts[3]) <= rat_min(eval(h, ts[0]), eval(h, ts[3])),
            tag("min_on below endpoint values", c));
    s.check(min_on(h, ts[0], ts[3]) <= min_on(h, ts[1], ts[2]),
            tag("min_on monotone under interval inclusion", c));

    const auto fs = visit_sets(h);
    s.check(fs.first.total_length() + fs.second.total_length() == z,
            tag("first+latter visit lengths = lifetime", c));
    s.check(is_minimal(h) == (fs.second.total_length() == 0),
            tag("is_minimal <=> zero latter-visit length", c));

    const HeightFunction cont = continuify(h);
    bool continuous = true;
    for (const Knot& k : cont.knots()) continuous = continuous && k.y_left == k.y_right;
    s.check(continuous, tag("continuify removes all jumps", c));
    const auto cfs = visit_sets(cont);
    s.check(cfs.first.total_length() + cfs.second.total_length() == cont.lifetime(),
            tag("visit lengths on continuified path", c));
    s.check(equivalent(decode(cont), decode(h), false, true),
            tag("decode(continuify) order-equivalent to decode", c));

    const Rat a = rat_min(ts[0], ts[1]);
    const Rat b = ts[2];
    const Rat d = rat_max(ts[3], b);
    s.check(total_variation(h, a, b) + total_variation(h, b, d) == total_variation(h, a, d),
            tag("total_variation additive", c));

    bool grid_ok = true;
    for (int k = 0; k <= 32; ++k) {
      const Rat t = z * rat(k, 32);
      if (eval(h, t) != oracle_eval(h, t)) grid_ok = false;
    }
    s.check(grid_ok, tag("grid eval agreement", c));
    const Rat gs = dyadic_in(sub, z);
    const Rat gt = dyadic_in(sub, z);
    s.check(min_on(h, gs, gt) == oracle_min_on(h, gs, gt), tag("min_on oracle agreement", c));
    s.check(quotient_distance(h, gs, gt) ==
                oracle_eval(h, gs) + oracle_eval(h, gt) - 2 * oracle_min_on(h, gs, gt),
            tag("quotient_distance oracle agreement", c));
  }
  return s.take();
}

// ------------------------------------------------------------ tree_core ----

SuiteReport suite_tree_core(int cases, std::uint64_t seed) {
  Suite s("tree_core");
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    Rng sub(rng.fork());
    const StructuredTree st = random_structured_tree({}, sub);
    const RealTree& t = st.tree();
    const auto probes = probe_points(t);
    auto pick = [&]() -> const TreePoint& { return probes[sub.below(probes.size())]; };

    const TreePoint x = pick();
    const TreePoint y = pick();
    const TreePoint z = pick();
    const TreePoint w = pick();
    s.check(distance(t, x, x) == 0, tag("distance identity", c));
    s.check(distance(t, x, y) == distance(t, y, x), tag("distance symmetric", c));
    s.check((distance(t, x, y) == 0) == (x == y), tag("distance separates points", c));
    s.check(distance(t, x, z) <= distance(t, x, y) + distance(t, y, z),
            tag("triangle inequality", c));
    s.check(four_point_check(t, x, y, z, w), tag("four-point condition", c));

    const TreePoint root = TreePoint::at_vertex(t.root());
    s.check(2 * distance(t, root, wedge(t, x, y)) ==
                distance(t, root, x) + distance(t, root, y) - distance(t, x, y),
            tag("wedge depth identity", c));

    std::vector<TreePoint> keep{TreePoint::at_vertex(t.root())};
    for (int v : classify(t).leaves) keep.push_back(TreePoint::at_vertex(v));
    for (int v : t.marked()) keep.push_back(TreePoint::at_vertex(v));
    s.check(total_length(span(t, keep)) == total_length(t),
            tag("span of root+leaves+marked keeps total length", c));

    long degree_sum = 0;
    for (int v : t.vertex_ids()) degree_sum += degree(t, TreePoint::at_vertex(v)) - 2;
    s.check(degree_sum == -2, tag("degree sum consistency", c));
    s.check(t.edge_count() + 1 == t.vertex_count(), tag("edge count = vertex count - 1", c));
  }
  return s.take();
}

// --------------------------------------------------------- order_measure ----

SuiteReport suite_order_measure(int cases, std::uint64_t seed) {
  Suite s("order_measure");
  Rng rng(seed);

  // Fixed-instance checks: enumeration cardinality and shuffle uniformity.
  {
    const StructuredTree star = make_three_star();
    const auto orders = enumerate_compatible_orders(star.tree());
    s.check(orders.size() == 6, "three-star has 3! compatible orders");
    bool all_ok = true;
    for (const auto& o : orders) {
      const StructuredTree st(star.tree(), o, star.measure());
      all_ok = all_ok && check_compatibility(st, 60, 7).ok;
    }
    s.check(all_ok, "every enumerated order passes compatibility");

    Rng srng(seed ^ 0x5u);
    std::map<std::vector<int>, int> counts;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
      counts[shuffle(star.tree(), srng).child_order.at(0)] += 1;
    }
    double chi2 = 0;
    const double expected = draws / 6.0;
    for (const auto& [key, n] : counts) {
      (void)key;
      chi2 += (n - expected) * (n - expected) / expected;
    }
    s.check(counts.size() == 6 && chi2 < 20.515,
            "shuffle chi-square below the 0.999 quantile (5 df)");

    const StructuredTree why = make_ytree();
    Rng yrng(seed ^ 0x9u);
    int first_arm = 0;
    for (int i = 0; i < draws; ++i) {
      if (shuffle(why.tree(), yrng).child_order.at(1)[0] == 1) ++first_arm;
    }
    s.check(std::abs(first_arm - draws / 2) <= 150, "arm split within 3 sigma of 1/2");
  }

  for (int c = 0; c < cases; ++c) {
    Rng sub(rng.fork());
    const StructuredTree st = random_structured_tree({}, sub);
    const RealTree& t = st.tree();
    const auto probes = probe_points(t);
    auto pick = [&]() -> const TreePoint& { return probes[sub.below(probes.size())]; };
    auto cmp = [&](const TreePoint& a, const TreePoint& b) { return compare(st, a, b); };

    const TreePoint x = pick();
    const TreePoint y = pick();
    const TreePoint z = pick();
    s.check((cmp(x, y) == Ordering::Equal) == (x == y), tag("compare equality", c));
    const auto xy = cmp(x, y);
    const auto yx = cmp(y, x);
    s.check((xy == Ordering::Less && yx == Ordering::Greater) ||
                (xy == Ordering::Greater && yx == Ordering::Less) ||
                (xy == Ordering::Equal && yx == Ordering::Equal),
            tag("compare antisymmetric", c));
    if (cmp(x, y) != Ordering::Greater && cmp(y, z) != Ordering::Greater) {
      s.check(cmp(x, z) != Ordering::Greater, tag("compare transitive", c));
    }

    bool ancestors_first = true;
    for (int u : t.vertex_ids()) {
      for (int v : t.vertex_ids()) {
        const TreePoint a = TreePoint::at_vertex(u);
        const TreePoint b = TreePoint::at_vertex(v);
        if (is_ancestor(t, a, b) && cmp(a, b) == Ordering::Greater) ancestors_first = false;
      }
    }
    s.check(ancestors_first, tag("ancestors precede descendants", c));

    // Cross-branch comparisons at a branch vertex all point one way.
    for (int v : t.vertex_ids()) {
      const auto& kids = t.child_edges(v);
      if (kids.size() < 2) continue;
      const auto& slots = st.order().child_order.at(v);
      bool one_way = true;
      for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
        const TreePoint a = TreePoint::on_edge(t, slots[i], t.edge(slots[i]).length / 2);
        const TreePoint below_a = TreePoint::at_vertex(t.edge(slots[i]).child);
        const TreePoint b = TreePoint::on_edge(t, slots[i + 1], t.edge(slots[i + 1]).length / 2);
        one_way = one_way && cmp(a, b) == Ordering::Less &&
                  cmp(below_a, b) == Ordering::Less;
      }
      s.check(one_way, tag("separated branches compare one way", c));
      break;
    }

    const auto inc = check_inc(st, 40, sub.bits());
    s.check(inc.ok, tag("left-set measure strictly increasing", c) + " " + inc.counterexample);

    Rng shuffler(sub.fork());
    const PlanarOrder other = shuffle(t, shuffler);
    const StructuredTree st2(t, other, st.measure());
    s.check(check_mes(st2), tag("positive densities keep (Mes) under shuffles", c));
    const auto compat = check_compatibility(st2, 40, sub.bits());
    s.check(compat.ok, tag("shuffled order passes compatibility", c) + " " + compat.counterexample);
  }
  return s.take();
}

// ---------------------------------------------------------------- codec ----

SuiteReport suite_codec(int cases, std::uint64_t seed) {
  Suite s("codec");
  Rng rng(seed);

  // Fixed instance: re-shuffling changes the code but not the unordered tree.
  {
    const StructuredTree why = make_asymmetric_ytree();
    const HeightFunction h = encode(why);
    PlanarOrder swapped = why.order();
    swapped.child_order[1] = {2, 1};
    const StructuredTree reordered(why.tree(), swapped, why.measure());
    const HeightFunction h2 = encode(reordered);
    s.check(!(h == h2), "arm swap changes the height function");
    s.check(!equivalent(decode(h), decode(h2), true, true),
            "arm swap is visible to ordered equivalence");
    s.check(equivalent(decode(h), decode(h2), true, false),
            "arm swap invisible to unordered equivalence");
  }

  for (int c = 0; c < cases; ++c) {
    Rng sub(rng.fork());
    const StructuredTree st = random_structured_tree({}, sub);
    const HeightFunction h = encode(st);

    s.check(equivalent(decode(h), st, true, true), tag("decode(encode(S)) ~ S", c));
    s.check(is_minimal(h), tag("encode output minimal", c));
    s.check(encode(decode(h)) == h, tag("encode(decode(h)) = h", c));

    const Rat total = total_mass(st.tree(), st.measure());
    s.check(total == h.lifetime(), tag("lifetime = total mass", c));
    s.check(total_variation(h, Rat(0), h.lifetime()) ==
                2 * total_length(st.tree()) - eval(h, h.lifetime()),
            tag("total variation = 2 length - final height", c));

    // Exploration against the code and against the order definition.
    bool depth_ok = true;
    bool landing_ok = true;
    bool bracket_ok = true;
    bool least_ok = true;
    for (int probe = 0; probe < 4; ++probe) {
      const Rat t = dyadic_in(sub, total);
      const ExplorationState ex = exploration_point(st, t);
      if (depth(st.tree(), ex.sigma_minus) != eval(h, t)) depth_ok = false;
      if (t < total && depth(st.tree(), ex.sigma_plus) != right_limit(h, t)) {
        landing_ok = false;
      }
      if (!(ex.m_t <= t && t <= ex.M_t) ||
          ex.M_t != left_set_measure(st, ex.sigma_minus, true)) {
        bracket_ok = false;
      }
      if (left_set_measure(st, ex.sigma_minus, true) < t) least_ok = false;
      for (const TreePoint& cand : probe_points(st.tree())) {
        if (compare(st, cand, ex.sigma_minus) == Ordering::Less &&
            left_set_measure(st, cand, true) >= t) {
          least_ok = false;
        }
      }
    }
    s.check(depth_ok, tag("exploration depth = eval", c));
    s.check(landing_ok, tag("landing depth = right limit", c));
    s.check(bracket_ok, tag("visit interval brackets t", c));
    s.check(least_ok, tag("sigma_minus is the order-least point covering t", c));

    // First/last visit identities at every vertex.
    bool visits_ok = true;
    for (int v : st.tree().vertex_ids()) {
      const TreePoint p = TreePoint::at_vertex(v);
      const Rat l = left_set_measure(st, p, false);
      const Rat r = left_set_measure(st, p, true);
      if (eval(h, r) != st.tree().vertex_depth(v)) visits_ok = false;
      if (l < r && eval(h, l + (r - l) / 2) != st.tree().vertex_depth(v)) visits_ok = false;
    }
    s.check(visits_ok, tag("visit interval [l(v), r(v)] sits at the vertex depth", c));

    // Time change against an independently drawn second measure.
    TreeMeasure mu2;
    for (const Edge& e : st.tree().edges()) {
      mu2.densities[e.id] =
          rat(1 + static_cast<long>(sub.below(6)), 1 + static_cast<long>(sub.below(3)));
    }
    const bool with_atoms = sub.below(2) == 0;
    if (with_atoms) {
      for (int v : st.tree().vertex_ids()) {
        if (sub.below(4) == 0) {
          mu2.atoms.push_back({TreePoint::at_vertex(v),
                               rat(1 + static_cast<long>(sub.below(4)), 2)});
        }
      }
    }
    if (st.tree().edge_count() == 0 && mu2.atoms.empty()) {
      mu2.atoms.push_back({TreePoint::at_vertex(st.tree().root()), Rat(1)});
    }
    const StructuredTree st2(st.tree(), st.order(), mu2);
    const HeightFunction h2 = encode(st2);
    const TimeChange tc = time_change(st.tree(), st.order(), st.measure(), mu2);

    bool comp_ok = true;
    for (const Knot& k : h.knots()) {
      if (eval(h, k.t) != eval(h2, eval_map(tc.map, k.t))) comp_ok = false;
    }
    const auto& mk = tc.map.knots();
    for (std::size_t i = 0; i + 1 < mk.size(); ++i) {
      const Rat mid = mk[i].t + (mk[i + 1].t - mk[i].t) / 2;
      if (eval(h, mid) != eval(h2, eval_map(tc.map, mid))) comp_ok = false;
    }
    s.check(comp_ok, tag("h = h' after time change", c));

    if (mu2.atoms.empty()) {
      bool no_jumps = true;
      for (const MapKnot& k : mk) no_jumps = no_jumps && k.v_left == k.v_right;
      s.check(no_jumps, tag("atomless target measure gives a continuous map", c));
    }
    if (st.measure().atoms.empty()) {
      bool strictly_up = true;
      for (std::size_t i = 0; i + 1 < mk.size(); ++i) {
        if (!(mk[i].v_right < mk[i + 1].v_left)) strictly_up = false;
      }
      s.check(strictly_up, tag("atomless source measure gives a strictly increasing map", c));
    }
    bool jumps_are_plateaus = true;
    for (const MapKnot& k : mk) {
      if (k.v_left < k.v_right) {
        const Rat at = eval(h, k.t);
        if (eval(h2, k.v_left) != at || eval(h2, k.v_right) != at ||
            eval(h2, k.v_left + (k.v_right - k.v_left) / 2) != at) {
          jumps_are_plateaus = false;
        }
      }
    }
    s.check(jumps_are_plateaus, tag("map jumps cross plateaus of h' at the same height", c));

    std::set<std::string> shared;
    for (const Atom& a : st.measure().atoms) {
      for (const Atom& b : mu2.atoms) {
        if (a.point == b.point) shared.insert(point_to_string(a.point));
      }
    }
    std::set<std::string> reported;
    for (const TreePoint& p : tc.shared_atoms) reported.insert(point_to_string(p));
    s.check(tc.unique == shared.empty() && reported == shared,
            tag("non-uniqueness exactly on shared atoms", c));

    // Leaf-atom measures after regularization: every leaf visit time lies in
    // the first-visit set.
    {
      const auto leaves = classify(st.tree()).leaves;
      if (!leaves.empty()) {
        TreeMeasure leafy;
        for (const Edge& e : st.tree().edges()) leafy.densities[e.id] = Rat(0);
        for (int v : leaves) leafy.atoms.push_back({TreePoint::at_vertex(v), Rat(1)});
        const StructuredTree reg =
            regularize(StructuredTree(st.tree(), st.order(), leafy), rat(1, 1000));
        const HeightFunction hr = encode(reg);
        s.check(is_minimal(hr), tag("regularized leaf-atom code is minimal", c));
        const auto fs = visit_sets(hr);
        bool contained = true;
        for (int v : leaves) {
          const TreePoint p = TreePoint::at_vertex(v);
          const Rat l = left_set_measure(reg, p, false);
          const Rat r = left_set_measure(reg, p, true);
          if (!fs.first.contains(l + (r - l) / 2)) contained = false;
        }
        s.check(contained, tag("leaf visit times lie in the first-visit set", c));
      }
    }
  }
  return s.take();
}

// ------------------------------------------------------------ random_gen ----

SuiteReport suite_random_gen(int cases, std::uint64_t seed) {
  Suite s("random_gen");
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    Rng sub(rng.fork());
    const std::uint64_t gw_seed = sub.bits();
    Rng g1(gw_seed);
    Rng g2(gw_seed);
    const PlaneTree tau = gw_plane_tree(default_offspring_pmf(), 50, g1);
    s.check(gw_plane_tree(default_offspring_pmf(), 50, g2) == tau,
            tag("gw sampler deterministic in the seed", c));
    s.check(plane_tree_violations(tau).empty(), tag("gw sample is a valid plane tree", c));

    const auto parents = plane_tree_parents(tau);
    const auto depths = discrete_height_process(tau);
    const HeightFunction interp = discrete_height_interpolation(tau);
    const HeightFunction contour = plane_tree_contour(tau);
    const auto visits = contour_first_visits(tau);

    auto graph_dist = [&](int m, int n) {
      int a = m;
      int b = n;
      int steps = 0;
      while (a != b) {
        if (depths[static_cast<std::size_t>(a)] >= depths[static_cast<std::size_t>(b)]) {
          a = parents[static_cast<std::size_t>(a)];
        } else {
          b = parents[static_cast<std::size_t>(b)];
        }
        ++steps;
      }
      return steps;
    };

    bool formula_ok = true;
    bool contour_ok = true;
    const int n = static_cast<int>(tau.child_counts.size());
    for (int m = 0; m < n && (formula_ok || contour_ok); ++m) {
      for (int k = m; k < n; ++k) {
        int mn = depths[static_cast<std::size_t>(m)];
        for (int j = m; j <= k; ++j) mn = std::min(mn, depths[static_cast<std::size_t>(j)]);
        const int formula = depths[static_cast<std::size_t>(m)] +
                            depths[static_cast<std::size_t>(k)] - 2 * mn;
        if (quotient_distance(interp, Rat(m), Rat(k)) != formula) formula_ok = false;
        if (quotient_distance(contour, Rat(visits[static_cast<std::size_t>(m)]),
                              Rat(visits[static_cast<std::size_t>(k)])) != graph_dist(m, k)) {
          contour_ok = false;
        }
      }
    }
    s.check(formula_ok, tag("depth formula matches quotient_distance", c));
    s.check(contour_ok, tag("contour quotient metric matches the graph metric", c));

    if (n > 1) {
      const StructuredTree dec = decode(contour);
      const auto probes = probe_points(dec.tree());
      const TreePoint& a = probes[sub.below(probes.size())];
      const TreePoint& b = probes[sub.below(probes.size())];
      const TreePoint& d = probes[sub.below(probes.size())];
      const TreePoint& e = probes[sub.below(probes.size())];
      s.check(four_point_check(dec.tree(), a, b, d, e),
              tag("decoded contour satisfies the four-point condition", c));
    }

    const std::uint64_t lifo_seed = sub.bits();
    Rng l1(lifo_seed);
    Rng l2(lifo_seed);
    const HeightFunction lifo = lifo_height(0.8, {0.5, 0.3, 0.2}, 2, 30.0, l1);
    s.check(lifo_height(0.8, {0.5, 0.3, 0.2}, 2, 30.0, l2) == lifo,
            tag("lifo sampler deterministic in the seed", c));
    bool caglad = true;
    for (const Knot& k : lifo.knots()) caglad = caglad && k.y_right <= k.y_left;
    s.check(caglad && lifo.knots().front().t == 0, tag("lifo output is a valid path", c));

    const std::uint64_t ex_seed = sub.bits();
    Rng e1(ex_seed);
    Rng e2(ex_seed);
    const HeightFunction exc = excursion_walk(9, e1);
    s.check(excursion_walk(9, e2) == exc, tag("excursion sampler deterministic", c));
    s.check(eval(exc, exc.lifetime()) == 0 && exc.lifetime() == Rat(2),
            tag("excursion returns to zero at lifetime 2n/s^2", c));
  }
  return s.take();
}

// ------------------------------------------------------------- roundtrip ----

SuiteReport suite_roundtrip(int cases, std::uint64_t seed) {
  Suite s("roundtrip");
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    Rng sub(rng.fork());
    const StructuredTree st = random_structured_tree({}, sub);
    const HeightFunction h = encode(st);
    s.check(equivalent(decode(h), st, true, true), tag("decode(encode(S)) ~ S", c));
    s.check(encode(decode(h)) == h, tag("encode(decode(h)) = h", c));

    const HeightFunction hr = random_height_function(sub);
    s.check(encode(decode(hr)) == hr, tag("random minimal path round-trips", c));

    Rng shuffler(sub.fork());
    const StructuredTree other(st.tree(), shuffle(st.tree(), shuffler), st.measure());
    const HeightFunction ho = encode(other);
    s.check(equivalent(decode(ho), other, true, true), tag("round trip after shuffle", c));
    s.check(equivalent(decode(ho), decode(h), true, false),
            tag("shuffles agree up to order", c));
    s.check((ho == h) == equivalent(decode(ho), decode(h), true, true),
            tag("code equality coincides with ordered equivalence", c));
  }
  return s.take();
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"height_fn",     "tree_core",
                                              "order_measure", "codec",
                                              "random_gen",    "roundtrip"};
  return names;
}

std::vector<SuiteReport> run_verify(const std::string& name, int cases,
                                    std::uint64_t seed) {
  if (cases < 1) throw domain_error("verify: cases must be at least 1");
  std::vector<SuiteReport> out;
  auto run_one = [&](const std::string& suite) {
    if (suite == "height_fn") {
      out.push_back(suite_height_fn(cases, seed));
    } else if (suite == "tree_core") {
      out.push_back(suite_tree_core(cases, seed));
    } else if (suite == "order_measure") {
      out.push_back(suite_order_measure(cases, seed));
    } else if (suite == "codec") {
      out.push_back(suite_codec(cases, seed));
    } else if (suite == "random_gen") {
      out.push_back(suite_random_gen(cases, seed));
    } else if (suite == "roundtrip") {
      out.push_back(suite_roundtrip(cases, seed));
    } else {
      throw domain_error("verify: unknown suite \"" + suite + "\"");
    }
  };
  if (name == "all") {
    for (const auto& suite : verify_suite_names()) run_one(suite);
  } else {
    run_one(name);
  }
  return out;
}

}  // namespace dendro
