#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dendro/rational.hpp"
#include "dendro/rng.hpp"
#include "dendro/tree.hpp"

namespace dendro {

enum class Ordering { Less, Equal, Greater };

// Per-vertex permutation of child edge ids; the depth-first order it induces
// is the linear order used by the codec. Vertices without children are
// omitted.
struct PlanarOrder {
  std::map<int, std::vector<int>> child_order;
  bool operator==(const PlanarOrder&) const = default;
};

std::vector<std::string> order_violations(const RealTree& t, const PlanarOrder& o);

// Index of edge e among the children of v under o; throws domain_error when
// absent.
int order_position(const PlanarOrder& o, int v, int e);

struct Atom {
  TreePoint point;
  Rat mass;  // > 0
  bool operator==(const Atom&) const = default;
};

// Finite measure on a tree: a uniform density per edge plus point masses.
struct TreeMeasure {
  std::map<int, Rat> densities;  // edge id -> mass per unit length, >= 0
  std::vector<Atom> atoms;       // distinct locations
  bool operator==(const TreeMeasure&) const = default;
};

std::vector<std::string> measure_violations(const RealTree& t, const TreeMeasure& m);

Rat total_mass(const RealTree& t, const TreeMeasure& m);
Rat atom_mass_at(const TreeMeasure& m, const TreePoint& p);
// Interior atoms of an edge as (offset, mass), sorted by offset.
std::vector<std::pair<Rat, Rat>> atoms_on_edge(const TreeMeasure& m, int edge_id);
// Mass of the branch hanging off edge e: the edge itself, its interior atoms,
// and everything below its child endpoint.
Rat branch_mass(const RealTree& t, const TreeMeasure& m, int edge_id);

// A tree together with a planar order and a measure; construction validates
// all three parts jointly.
class StructuredTree {
 public:
  StructuredTree(RealTree tree, PlanarOrder order, TreeMeasure measure);

  const RealTree& tree() const { return tree_; }
  const PlanarOrder& order() const { return order_; }
  const TreeMeasure& measure() const { return measure_; }

  bool operator==(const StructuredTree&) const = default;

 private:
  RealTree tree_;
  PlanarOrder order_;
  TreeMeasure measure_;
};

// Linear order induced by the planar data: ancestors precede descendants, and
// otherwise points compare by the child slots their branches occupy at the
// common branch point.
Ordering compare(const RealTree& t, const PlanarOrder& o, const TreePoint& x,
                 const TreePoint& y);
Ordering compare(const StructuredTree& s, const TreePoint& x, const TreePoint& y);

using CompareFn = std::function<Ordering(const TreePoint&, const TreePoint&)>;

struct CompatReport {
  bool ok = true;
  int pairs_checked = 0;
  int triples_checked = 0;
  std::string counterexample;  // empty when ok
};

// Checks an arbitrary comparator against the two laws a tree order must obey:
// ancestors come first, and for x <= y <= z the deeper of x^y, x^z lies on
// the root path of y (and equals x^y). Samples points from probe_points.
CompatReport check_compatibility_fn(const RealTree& t, const CompareFn& cmp,
                                    int sample_count, std::uint64_t seed);
CompatReport check_compatibility(const StructuredTree& s, int sample_count,
                                 std::uint64_t seed);

// Uniform independent permutation of the child edges at every vertex.
PlanarOrder shuffle(const RealTree& t, Rng& rng);

// Mass of {p : p <= x} (strictly before x when include_x is false for the
// atom sitting exactly at x; density mass is unaffected by the flag).
Rat left_set_measure(const RealTree& t, const PlanarOrder& o, const TreeMeasure& m,
                     const TreePoint& x, bool include_x);
Rat left_set_measure(const StructuredTree& s, const TreePoint& x, bool include_x);

// True iff every edge density is strictly positive. For this measure class
// that is equivalent to "every open order-interval between distinct
// comparable points carries mass": such an interval always contains an open
// edge segment, and a zero-density segment conversely yields an empty one.
bool check_mes(const StructuredTree& s);

struct IncReport {
  bool ok = true;
  int pairs_checked = 0;
  std::string counterexample;
};

// Samples point pairs and asserts x < y implies mu(L_x) < mu(L_y).
IncReport check_inc(const StructuredTree& s, int sample_count, std::uint64_t seed);

// Every planar order of t (cartesian product of child permutations). Throws
// domain_error when there are more than 100000.
std::vector<PlanarOrder> enumerate_compatible_orders(const RealTree& t);

// Adds eps > 0 to every edge density, making any measure pass check_mes.
StructuredTree regularize(const StructuredTree& s, const Rat& eps);

// Deterministic witness set: all vertices, then the 1/4, 1/2, 3/4 points of
// every edge.
std::vector<TreePoint> probe_points(const RealTree& t);

}  // namespace dendro
