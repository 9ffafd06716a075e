#pragma once

#include <string>
#include <vector>

#include "dendro/height_function.hpp"
#include "dendro/order_measure.hpp"
#include "dendro/rng.hpp"
#include "dendro/tree.hpp"

namespace dendro {

// Finite rooted tree with ordered children, stored as the child count of
// each vertex in depth-first order (children visited first to last). This
// listing coincides with the lexicographic order on the vertex labels.
struct PlaneTree {
  std::vector<int> child_counts;

  bool operator==(const PlaneTree&) const = default;
};

// Human-readable reasons the child-count sequence is not a valid tree:
// empty, negative counts, vertices with no open parent slot, or declared
// children that never appear.
std::vector<std::string> plane_tree_violations(const PlaneTree& tau);

// Parent index of each vertex (-1 for the root). Parents always precede
// children in depth-first order. Throws validation_error on invalid input.
std::vector<int> plane_tree_parents(const PlaneTree& tau);

// Depth of each vertex, in the same depth-first order.
// Examples pinned by tests: single vertex -> [0]; root with two leaves ->
// [0,1,1]; root whose first child has one child -> [0,1,2,1].
std::vector<int> discrete_height_process(const PlaneTree& tau);

// Piecewise-linear function through (k, depth of k-th vertex), k = 0..n-1.
// Distances between vertices m <= n satisfy
//   depth(m) + depth(n) - 2 * min(depth(k), m <= k <= n)
// which equals quotient_distance of this function at m and n.
HeightFunction discrete_height_interpolation(const PlaneTree& tau);

// Contour walk of the tree with unit edge lengths: travel each edge down
// and up at unit speed in depth-first order. Lifetime 2(n-1); a single
// vertex yields the point function.
HeightFunction plane_tree_contour(const PlaneTree& tau);

// Time at which the contour walk first reaches each vertex (depth-first
// order); entry 0 is always 0.
std::vector<int> contour_first_visits(const PlaneTree& tau);

// Galton-Watson tree sampled root-first: every vertex draws its child count
// independently from offspring_pmf (index = count). Whole samples that
// exceed max_size vertices are rejected and redrawn, so the result is the
// offspring law conditioned on size <= max_size.
// Throws domain_error on a degenerate pmf or max_size < 1.
PlaneTree gw_plane_tree(const std::vector<double>& offspring_pmf, int max_size,
                        Rng& rng);

// Geometric(1/2) child counts truncated at 16, the default offspring law.
std::vector<double> default_offspring_pmf();

// Uniform simple-walk excursion: a nonnegative lattice path of 2n unit
// steps from 0 back to 0, drawn uniformly via the cycle construction,
// then rescaled (heights by 1/s, time by 1/s^2, s = round(sqrt(n))) so that
// large n approximates a Brownian excursion on a span near [0, 2].
// excursion_walk(1, rng) is the tent of height 1 on [0, 2].
HeightFunction excursion_walk(int n, Rng& rng);

// Last-in-first-out queue load, time-reversed. Forward process: start at
// x0, drift down at unit rate, jump up by an integer service size (drawn
// from service_pmf, index k meaning size k+1) at exponential(arrival_rate)
// spaced arrival times; arrivals stop after `horizon`, and the path runs
// until it first hits 0 at time M. Output is h(t) = X(M - t) on [0, M]:
// upward drift with downward jumps only. Zero arrival rate with x0 = 1
// gives h(t) = t on [0, 1].
// Throws domain_error when x0 <= 0, arrival_rate < 0, horizon < 0, or
// (for positive rates) the service pmf is empty, negative, or sums to 0.
HeightFunction lifo_height(double arrival_rate, const std::vector<double>& service_pmf,
                           int x0, double horizon, Rng& rng);

// Bounds for random_structured_tree. Densities are drawn from a rational
// grid inside [min_density, max_density]; at most max_atoms atoms are
// placed at vertices or interior edge points.
struct RandomTreeParams {
  int max_vertices = 20;
  Rat min_density = Rat(1, 4);
  Rat max_density = Rat(4);
  int max_atoms = 5;
};

// Random valid structured tree with strictly positive densities (so every
// instance is accepted by encode). Degree-2 vertices produced by the shape
// draw are either given a second child, kept with an atom, or kept with a
// density change across them, and are marked; a single-vertex draw yields
// the point tree with one atom at the root. Deterministic given the rng.
// Throws domain_error on out-of-range params.
StructuredTree random_structured_tree(const RandomTreeParams& params, Rng& rng);

// Random member of the height-function class built from rises, first-visit
// plateaus and instantaneous downward jumps; every output decodes and
// re-encodes to itself knot-for-knot. Deterministic given the rng.
HeightFunction random_height_function(Rng& rng, int max_pieces = 12);

}  // namespace dendro
