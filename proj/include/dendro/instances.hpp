#pragma once

#include "dendro/order_measure.hpp"
#include "dendro/tree.hpp"

namespace dendro {

// Canned example instances shared by the CLI generator, the verify suites
// and the tests.

// Unit segment carrying density 2/3 plus a mass-1/3 atom at its midpoint.
inline StructuredTree make_segment_instance() {
  RealTree t(0, {0, 1}, {{0, 0, 1, Rat(1)}});
  PlanarOrder o;
  o.child_order[0] = {0};
  TreeMeasure m;
  m.densities[0] = rat(2, 3);
  m.atoms.push_back({TreePoint::on_edge(t, 0, Rat(1, 2)), rat(1, 3)});
  return StructuredTree(std::move(t), std::move(o), std::move(m));
}

// Root with three unit arms, unit densities.
inline StructuredTree make_three_star() {
  RealTree t(0, {0, 1, 2, 3},
             {{0, 0, 1, Rat(1)}, {1, 0, 2, Rat(1)}, {2, 0, 3, Rat(1)}});
  PlanarOrder o;
  o.child_order[0] = {0, 1, 2};
  TreeMeasure m;
  m.densities[0] = Rat(1);
  m.densities[1] = Rat(1);
  m.densities[2] = Rat(1);
  return StructuredTree(std::move(t), std::move(o), std::move(m));
}

// Unit stem that splits into two unit arms, unit densities.
inline StructuredTree make_ytree() {
  RealTree t(0, {0, 1, 2, 3},
             {{0, 0, 1, Rat(1)}, {1, 1, 2, Rat(1)}, {2, 1, 3, Rat(1)}});
  PlanarOrder o;
  o.child_order[0] = {0};
  o.child_order[1] = {1, 2};
  TreeMeasure m;
  m.densities[0] = Rat(1);
  m.densities[1] = Rat(1);
  m.densities[2] = Rat(1);
  return StructuredTree(std::move(t), std::move(o), std::move(m));
}

// Same shape with arms of lengths 1 and 2, so arm swaps are visible.
inline StructuredTree make_asymmetric_ytree() {
  RealTree t(0, {0, 1, 2, 3},
             {{0, 0, 1, Rat(1)}, {1, 1, 2, Rat(1)}, {2, 1, 3, Rat(2)}});
  PlanarOrder o;
  o.child_order[0] = {0};
  o.child_order[1] = {1, 2};
  TreeMeasure m;
  m.densities[0] = Rat(1);
  m.densities[1] = Rat(1);
  m.densities[2] = Rat(1);
  return StructuredTree(std::move(t), std::move(o), std::move(m));
}

}  // namespace dendro
