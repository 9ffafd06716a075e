#include <doctest.h>

#include <vector>

#include "dendro/errors.hpp"
#include "dendro/height_function.hpp"
#include "helpers.hpp"

using namespace dendro;
using dendro::testing::make_h1;
using dendro::testing::make_h2;
using dendro::testing::make_hy;

namespace {

bool has_code(const std::vector<KnotViolation>& vs, const std::string& code) {
  for (const auto& v : vs) {
    if (v.code == code) return true;
  }
  return false;
}

// Exact minimum of a continuous piecewise-affine path over [s, t], computed
// the slow way: sample a dyadic grid and every knot time in range. Valid only
// for jump-free paths, where the minimum is attained at a knot or an endpoint.
Rat grid_min(const HeightFunction& h, const Rat& s, const Rat& t) {
  Rat best = eval(h, s);
  const Rat step = (t - s) / 4096;
  if (step > 0) {
    for (int k = 1; k <= 4096; ++k) {
      best = rat_min(best, eval(h, s + step * k));
    }
  }
  for (const Knot& k : h.knots()) {
    if (s <= k.t && k.t <= t) best = rat_min(best, k.y_left);
  }
  return best;
}

}  // namespace

TEST_CASE("knot validation pins the admissible shapes") {
  CHECK(validate_knots(make_h1().knots()).empty());
  CHECK(validate_knots({{Rat(0), Rat(0), Rat(0)}}).empty());

  CHECK(has_code(validate_knots({}), "empty"));
  CHECK(has_code(validate_knots({{Rat(0), Rat(1), Rat(1)}}), "first-knot"));
  CHECK(has_code(validate_knots({{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(2)}}),
                 "upward-jump"));
  CHECK(has_code(validate_knots({{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(1)}}),
                 "time-order"));
  CHECK(has_code(
      validate_knots({{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(-1), Rat(-1)}}),
      "negative-height"));
  CHECK_THROWS_AS(HeightFunction({{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(2)}}),
                  validation_error);
}

TEST_CASE("canonical form drops pass-through knots and the trailing jump") {
  const HeightFunction collinear(
      {{Rat(0), Rat(0), Rat(0)}, {rat(1, 2), rat(1, 2), rat(1, 2)}, {Rat(1), Rat(1), Rat(1)}});
  CHECK(collinear.knots() ==
        std::vector<Knot>{{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}});

  const HeightFunction trailing({{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}});
  CHECK(trailing.knots() ==
        std::vector<Knot>{{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}});

  CHECK(HeightFunction().knots() == std::vector<Knot>{{Rat(0), Rat(0), Rat(0)}});
  CHECK(HeightFunction().lifetime() == Rat(0));

  // A knot that carries a jump stays even if the slopes around it agree.
  const HeightFunction jump(
      {{Rat(0), Rat(0), Rat(0)}, {Rat(2), Rat(2), Rat(1)}, {Rat(3), Rat(2), Rat(2)}});
  CHECK(jump.knots().size() == 3);
}

TEST_CASE("evaluation interpolates affinely and honors jumps") {
  const HeightFunction h1 = make_h1();
  const HeightFunction hy = make_hy();

  CHECK(eval(h1, rat(1, 6)) == rat(1, 4));
  CHECK(eval(h1, Rat(0)) == Rat(0));
  CHECK(eval(h1, rat(1, 2)) == rat(1, 2));
  CHECK(eval(h1, Rat(1)) == Rat(1));
  CHECK(eval(hy, Rat(2)) == Rat(2));
  CHECK(right_limit(hy, Rat(2)) == Rat(1));
  CHECK(eval(hy, rat(5, 2)) == rat(3, 2));
  CHECK(right_limit(h1, rat(1, 3)) == rat(1, 2));

  CHECK_THROWS_AS(eval(h1, Rat(2)), domain_error);
  CHECK_THROWS_AS(eval(h1, rat(-1, 2)), domain_error);
  CHECK_THROWS_AS(right_limit(h1, Rat(1)), domain_error);
}

TEST_CASE("interval minima see right limits, attained or not") {
  const HeightFunction h1 = make_h1();
  const HeightFunction hy = make_hy();

  CHECK(min_on(h1, rat(1, 6), rat(5, 6)) == rat(1, 4));
  CHECK(min_on(h1, rat(5, 6), rat(1, 6)) == rat(1, 4));  // order-insensitive
  CHECK(min_on(h1, rat(1, 2), rat(1, 2)) == eval(h1, rat(1, 2)));

  const auto [v, attained] = min_on_attained(hy, rat(3, 2), rat(5, 2));
  CHECK(v == Rat(1));
  CHECK_FALSE(attained);
  CHECK(min_on(hy, rat(3, 2), Rat(3)) == Rat(1));
  CHECK(min_on_attained(hy, Rat(0), Rat(3)) == std::pair<Rat, bool>{Rat(0), true});
}

TEST_CASE("quotient distance of the coded points") {
  const HeightFunction h1 = make_h1();
  CHECK(quotient_distance(h1, rat(1, 6), rat(5, 6)) == rat(1, 2));
  CHECK(quotient_distance(h1, rat(1, 3), rat(2, 3)) == Rat(0));  // same plateau point
  CHECK(quotient_distance(h1, rat(1, 2), rat(1, 2)) == Rat(0));
  CHECK(quotient_distance(h1, Rat(0), Rat(1)) ==
        quotient_distance(h1, Rat(1), Rat(0)));
}

TEST_CASE("first and latter visit times split the domain") {
  const HeightFunction h1 = make_h1();
  const HeightFunction h2 = make_h2();
  const HeightFunction hy = make_hy();

  const auto [f1, s1] = visit_sets(h1);
  CHECK(f1.parts() == std::vector<Interval>{{Rat(0), Rat(1), true, true}});
  CHECK(s1.empty());
  CHECK(is_minimal(h1));

  const auto [f2, s2] = visit_sets(h2);
  CHECK(f2.parts() == std::vector<Interval>{{Rat(0), rat(1, 2), true, true}});
  CHECK(s2.parts() == std::vector<Interval>{{rat(1, 2), Rat(1), false, true}});
  CHECK(s2.total_length() == rat(1, 2));
  CHECK_FALSE(is_minimal(h2));

  const auto [fy, sy] = visit_sets(hy);
  CHECK(fy.parts() == std::vector<Interval>{{Rat(0), Rat(3), true, true}});
  CHECK(sy.empty());
  CHECK(is_minimal(hy));
  CHECK(is_minimal(HeightFunction()));
}

TEST_CASE("total variation adds slopes and interior jumps") {
  const HeightFunction h1 = make_h1();
  const HeightFunction h2 = make_h2();
  const HeightFunction hy = make_hy();

  CHECK(total_variation(hy, Rat(0), Rat(3)) == Rat(4));
  CHECK(total_variation(h1, Rat(0), Rat(1)) == Rat(1));  // monotone
  CHECK(total_variation(h2, Rat(0), Rat(1)) == Rat(2));
  CHECK(total_variation(hy, rat(1, 2), rat(5, 2)) == Rat(3));
  CHECK(total_variation(hy, Rat(1), Rat(2)) == Rat(1));  // jump at b itself excluded
  CHECK(total_variation(hy, Rat(2), Rat(3)) == Rat(2));  // jump at a included
  CHECK(total_variation(h1, rat(1, 3), rat(2, 3)) == Rat(0));
  CHECK_THROWS_AS(total_variation(h1, rat(2, 3), rat(1, 3)), domain_error);
}

TEST_CASE("continuify replaces each jump by a short descent") {
  const HeightFunction hy = make_hy();
  const HeightFunction cy = continuify(hy);
  CHECK(cy.knots() == std::vector<Knot>{{Rat(0), Rat(0), Rat(0)},
                                        {Rat(2), Rat(2), Rat(2)},
                                        {rat(5, 2), Rat(1), Rat(1)},
                                        {rat(7, 2), Rat(2), Rat(2)}});
  CHECK(cy.lifetime() == rat(7, 2));

  CHECK(continuify(make_h1()) == make_h1());
  CHECK(continuify(make_h2()) == make_h2());

  const HeightFunction drop({{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}, {Rat(2), Rat(1), Rat(1)}});
  CHECK(continuify(drop).knots() == std::vector<Knot>{{Rat(0), Rat(0), Rat(0)},
                                                      {Rat(1), Rat(1), Rat(1)},
                                                      {rat(3, 2), Rat(0), Rat(0)},
                                                      {rat(5, 2), Rat(1), Rat(1)}});
}

TEST_CASE("running-minimum exchange law on ordered quadruples") {
  const HeightFunction h1 = make_h1();
  CHECK(four_times_check(h1, Rat(0), rat(1, 6), rat(1, 2), Rat(1)));
  CHECK(four_times_check(h1, rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)));
  const HeightFunction hy = make_hy();
  CHECK(four_times_check(hy, rat(1, 2), rat(3, 2), Rat(2), rat(5, 2)));
  CHECK_THROWS_AS(four_times_check(h1, Rat(1), Rat(0), Rat(0), Rat(0)), domain_error);
}

TEST_CASE("domain rescale moves times only") {
  const HeightFunction hy = make_hy();
  const HeightFunction r = rescale_domain(hy, rat(1, 3));
  CHECK(r.knots() == std::vector<Knot>{{Rat(0), Rat(0), Rat(0)},
                                       {rat(2, 3), Rat(2), Rat(1)},
                                       {Rat(1), Rat(2), Rat(2)}});
  CHECK_THROWS_AS(rescale_domain(hy, Rat(0)), domain_error);
  CHECK_THROWS_AS(rescale_domain(hy, Rat(-1)), domain_error);
}

TEST_CASE("sup difference is exact and needs matching lifetimes") {
  const HeightFunction h1 = make_h1();
  const HeightFunction h2 = make_h2();
  CHECK(sup_difference(h1, h1) == Rat(0));
  CHECK(sup_difference(h1, h2) == Rat(1));  // at t = 1: h1 = 1, h2 = 0
  CHECK(sup_difference(h2, h1) == Rat(1));
  CHECK_THROWS_AS(sup_difference(h1, make_hy()), domain_error);
}

TEST_CASE("dyadic grid oracle agrees with min_on on jump-free paths") {
  const HeightFunction h2 = make_h2();
  const std::vector<std::pair<Rat, Rat>> spans = {
      {Rat(0), Rat(1)}, {rat(1, 6), rat(5, 6)}, {rat(1, 4), rat(3, 4)}, {rat(1, 3), rat(1, 2)}};
  for (const auto& [s, t] : spans) {
    CHECK(min_on(h2, s, t) == grid_min(h2, s, t));
  }
  const HeightFunction cy = continuify(make_hy());
  CHECK(min_on(cy, rat(3, 2), rat(13, 4)) == grid_min(cy, rat(3, 2), rat(13, 4)));
}
