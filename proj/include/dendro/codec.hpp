#pragma once

#include <string>
#include <vector>

#include "dendro/height_function.hpp"
#include "dendro/order_measure.hpp"
#include "dendro/rational.hpp"
#include "dendro/rng.hpp"
#include "dendro/tree.hpp"

namespace dendro {

// Where the mass-parametrized walk stands at time t: sigma_minus is the point
// occupied at t, sigma_plus the right limit (the landing point when the walk
// jumps back at t). m_t and M_t bracket the visit: m_t is the mass already
// fully swept at t, M_t the mass swept once the walk leaves sigma_minus.
struct ExplorationState {
  Rat t;
  TreePoint sigma_minus;
  TreePoint sigma_plus;
  Rat m_t;
  Rat M_t;
};

// One breakpoint of a nondecreasing left-continuous piecewise-affine map.
// v_left is the value at t, v_right the limit from the right (>= v_left, so
// jumps only go up).
struct MapKnot {
  Rat t;
  Rat v_left;
  Rat v_right;

  bool operator==(const MapKnot&) const = default;
};

std::vector<std::string> validate_map_knots(const std::vector<MapKnot>& knots);

// Monotone (nondecreasing) left-continuous piecewise-affine map starting at
// (0, 0), stored in canonical knot form like HeightFunction.
class PiecewiseMap {
 public:
  PiecewiseMap();  // the trivial map: single knot (0,0,0)
  explicit PiecewiseMap(std::vector<MapKnot> knots);  // throws validation_error

  const std::vector<MapKnot>& knots() const { return knots_; }
  const Rat& domain_end() const { return knots_.back().t; }

  bool operator==(const PiecewiseMap&) const = default;

 private:
  std::vector<MapKnot> knots_;
};

// Value phi(t); throws domain_error outside [0, domain_end].
Rat eval_map(const PiecewiseMap& phi, const Rat& t);

// Limit phi(t+); pre t < domain_end.
Rat map_right_limit(const PiecewiseMap& phi, const Rat& t);

// Depth-first sweep of the tree in planar order, spending measure mass as
// time: climbing an edge of density d rises with slope 1/d, an atom of mass m
// holds a plateau for m, and finishing a subtree drops back instantly. The
// result is the unique height function that codes s and never lingers on
// already explored points. Throws mes_violation on a zero-density edge and
// empty_measure when there is no mass at all.
HeightFunction encode(const StructuredTree& s);

// Quotient of [0, lifetime] by the pseudo-distance of h, read off the knots:
// rises open fresh edges, descents pour extra density onto the stretch they
// retrace, plateaus pile mass onto the current point, and jumps only move the
// active point back. Output is canonical: invisible degree-2 vertices are
// dissolved, the rest are marked, ids follow depth-first order.
StructuredTree decode(const HeightFunction& h);

// Walk state at mass-time t (see ExplorationState). Pre: check_mes(s) and
// 0 <= t <= total mass; throws mes_violation / domain_error.
ExplorationState exploration_point(const StructuredTree& s, const Rat& t);

// Root- and order-preserving isometry test, optionally also matching the
// measures; with compare_order false the children may be permuted. Decided by
// comparing canonical signatures.
bool equivalent(const StructuredTree& a, const StructuredTree& b, bool compare_measure,
                bool compare_order = true);

// Canonical string form of the structured tree: atoms are pushed onto
// subdividing vertices, invisible degree-2 vertices dissolved, children
// listed in planar order (or sorted when with_order is false). Two trees get
// the same signature exactly when they are equivalent at that level.
std::string canonical_signature(const StructuredTree& s, bool with_measure,
                                bool with_order);

struct TimeChange {
  PiecewiseMap map;
  bool unique = true;                   // false iff the measures share an atom
  std::vector<TreePoint> shared_atoms;  // the locations responsible
};

// The reparametrization phi with encode(t,o,mu) == encode(t,o,mu_prime) ∘ phi:
// walks the tree once, pairing the mass clocks of the two measures. A shared
// atom leaves a genuine choice; the map interpolates affinely across it and
// reports uniqueness lost. Throws mes_violation when either measure has a
// zero-density edge.
TimeChange time_change(const RealTree& t, const PlanarOrder& o, const TreeMeasure& mu,
                       const TreeMeasure& mu_prime);

// Sampled approximation of the height function on [0, 1]: draws n uniform
// times, reads each point off at the corresponding mass quantile of mu, and
// connects (time, depth) pairs with dips down to the wedge depth between
// neighbors; past the last sample the depth is held constant. Converges
// uniformly to encode(s) with time rescaled by 1/mass as n grows. Throws
// domain_error for n < 1 and empty_measure for a massless measure.
HeightFunction aldous_height(const RealTree& t, const PlanarOrder& o,
                             const TreeMeasure& mu, int n, Rng& rng);

}  // namespace dendro
