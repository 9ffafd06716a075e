#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dendro/interval_set.hpp"
#include "dendro/rational.hpp"

namespace dendro {

// One breakpoint of a left-continuous piecewise-affine path. y_left is the
// value at time t, y_right the limit from the right; y_right <= y_left, so
// jumps only go down.
struct Knot {
  Rat t;
  Rat y_left;
  Rat y_right;

  bool operator==(const Knot&) const = default;
};

struct KnotViolation {
  std::size_t index;   // offending knot
  std::string code;    // "empty", "first-knot", "time-order", "negative-height", "upward-jump"
  std::string detail;
};

// Structural checks on a raw knot list; empty result means admissible.
std::vector<KnotViolation> validate_knots(const std::vector<Knot>& knots);

// Pre: valid. Drops interior knots that carry no jump and no slope change,
// and clears the (invisible) jump on the final knot.
std::vector<Knot> canonical_knots(std::vector<Knot> knots);

// Nonnegative left-continuous piecewise-affine path h on [0, lifetime] with
// h(0) = h(0+) = 0 and no upward jumps. Values between knots interpolate
// affinely from y_right of the earlier knot to y_left of the later one.
// Instances are stored in canonical knot form; equality is knot equality.
class HeightFunction {
 public:
  HeightFunction();  // the point path: single knot (0,0,0)
  explicit HeightFunction(std::vector<Knot> knots);  // throws validation_error

  const std::vector<Knot>& knots() const { return knots_; }
  const Rat& lifetime() const { return knots_.back().t; }

  bool operator==(const HeightFunction&) const = default;

 private:
  std::vector<Knot> knots_;
};

// Value h(t); throws domain_error outside [0, lifetime].
Rat eval(const HeightFunction& h, const Rat& t);

// Limit h(t+); pre t < lifetime.
Rat right_limit(const HeightFunction& h, const Rat& t);

// Infimum of h over the closed interval [s∧t, s∨t]. Right limits at knots
// inside the interval participate (including at the left endpoint), matching
// the infimum of a left-continuous path.
Rat min_on(const HeightFunction& h, const Rat& s, const Rat& t);

// Same value plus whether the infimum is attained by some h(u), u in [s,t].
std::pair<Rat, bool> min_on_attained(const HeightFunction& h, const Rat& s, const Rat& t);

// d_h(s,t) = h(s) + h(t) - 2 inf h over [s∧t, s∨t].
Rat quotient_distance(const HeightFunction& h, const Rat& s, const Rat& t);

// Splits [0, lifetime] into first-visit times F and latter-visit times S of
// the coded points. Returned as exact interval sets with F ∪ S = [0, lifetime]
// and F ∩ S = ∅.
std::pair<IntervalSet, IntervalSet> visit_sets(const HeightFunction& h);

// True when the latter-visit set has zero length: h never lingers on already
// explored points, which pins h uniquely among the codes of its tree.
bool is_minimal(const HeightFunction& h);

// Total variation of h over [a, b]: affine |slope|·length plus every jump at
// knots in [a, b). Throws domain_error unless 0 <= a <= b <= lifetime.
Rat total_variation(const HeightFunction& h, const Rat& a, const Rat& b);

// Continuous surrogate: the k-th jump in time order is replaced by an affine
// descent of duration 2^-k; all later times shift right accordingly. Heights
// are untouched, so the coded rooted ordered tree is preserved.
HeightFunction continuify(const HeightFunction& h);

// Exactness of the running-infimum calculus on a time quadruple
// t1 <= t2 <= t3 <= t4: min(m(t1,t3), m(t2,t4)) == min(m(t1,t4), m(t2,t3)).
bool four_times_check(const HeightFunction& h, const Rat& t1, const Rat& t2, const Rat& t3,
                      const Rat& t4);

// Same path on [0, factor * lifetime]: every knot time is multiplied by
// factor > 0, heights stay put.
HeightFunction rescale_domain(const HeightFunction& h, const Rat& factor);

// Exact sup of |a - b| over the common domain; throws domain_error when the
// lifetimes differ. The sup is reached at or arbitrarily near a knot of one
// of the paths, so it is computed from knot values and right limits only.
Rat sup_difference(const HeightFunction& a, const HeightFunction& b);

}  // namespace dendro
