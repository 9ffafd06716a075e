#pragma once

#include "dendro/height_function.hpp"
#include "dendro/rational.hpp"

namespace dendro::testing {

// Minimal code of the unit segment carrying density 2/3 plus a mass-1/3 atom
// at its midpoint: rise, plateau, rise.
inline HeightFunction make_h1() {
  return HeightFunction({{Rat(0), Rat(0), Rat(0)},
                         {rat(1, 3), rat(1, 2), rat(1, 2)},
                         {rat(2, 3), rat(1, 2), rat(1, 2)},
                         {Rat(1), Rat(1), Rat(1)}});
}

// Non-minimal code of the same structured segment: runs h1 at double speed on
// [0, 1/2] and retraces it backwards on (1/2, 1].
inline HeightFunction make_h2() {
  return HeightFunction({{Rat(0), Rat(0), Rat(0)},
                         {rat(1, 6), rat(1, 2), rat(1, 2)},
                         {rat(1, 3), rat(1, 2), rat(1, 2)},
                         {rat(1, 2), Rat(1), Rat(1)},
                         {rat(2, 3), rat(1, 2), rat(1, 2)},
                         {rat(5, 6), rat(1, 2), rat(1, 2)},
                         {Rat(1), Rat(0), Rat(0)}});
}

// Minimal code of the Y tree with unit densities: climb stem plus first arm,
// jump back to the branch point, climb the second arm.
inline HeightFunction make_hy() {
  return HeightFunction(
      {{Rat(0), Rat(0), Rat(0)}, {Rat(2), Rat(2), Rat(1)}, {Rat(3), Rat(2), Rat(2)}});
}

}  // namespace dendro::testing
