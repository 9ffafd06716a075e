#include "dendro/height_function.hpp"

#include <algorithm>

#include "dendro/errors.hpp"

namespace dendro {

std::vector<KnotViolation> validate_knots(const std::vector<Knot>& knots) {
  std::vector<KnotViolation> out;
  if (knots.empty()) {
    out.push_back({0, "empty", "a path needs at least the knot (0,0,0)"});
    return out;
  }
  const Knot& first = knots.front();
  if (first.t != 0 || first.y_left != 0 || first.y_right != 0) {
    out.push_back({0, "first-knot", "path must start with (0,0,0)"});
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const Knot& k = knots[i];
    if (i > 0 && !(knots[i - 1].t < k.t)) {
      out.push_back({i, "time-order", "knot times must be strictly increasing"});
    }
    if (k.y_left < 0 || k.y_right < 0) {
      out.push_back({i, "negative-height", "heights must be nonnegative"});
    }
    if (k.y_left < k.y_right) {
      out.push_back({i, "upward-jump", "y_right must not exceed y_left (positive jump)"});
    }
  }
  return out;
}

namespace {

// Slope of the affine piece between consecutive knots a -> b.
Rat piece_slope(const Knot& a, const Knot& b) {
  return (b.y_left - a.y_right) / (b.t - a.t);
}

}  // namespace

std::vector<Knot> canonical_knots(std::vector<Knot> knots) {
  knots.back().y_right = knots.back().y_left;  // a trailing jump is invisible
  if (knots.size() <= 2) return knots;
  std::vector<Knot> out;
  out.reserve(knots.size());
  out.push_back(knots.front());
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const Knot& k = knots[i];
    if (k.y_left == k.y_right && piece_slope(out.back(), k) == piece_slope(k, knots[i + 1])) {
      continue;  // collinear pass-through knot
    }
    out.push_back(k);
  }
  out.push_back(knots.back());
  return out;
}

HeightFunction::HeightFunction() : knots_{{Rat(0), Rat(0), Rat(0)}} {}

HeightFunction::HeightFunction(std::vector<Knot> knots) {
  const auto violations = validate_knots(knots);
  if (!violations.empty()) {
    std::string msg = "height function rejected:";
    for (const auto& v : violations) {
      msg += " [knot " + std::to_string(v.index) + "] " + v.code + ": " + v.detail + ";";
    }
    throw validation_error(msg);
  }
  knots_ = canonical_knots(std::move(knots));
}

namespace {

void check_time(const HeightFunction& h, const Rat& t) {
  if (t < 0 || h.lifetime() < t) {
    throw domain_error("time " + rat_to_string(t) + " outside [0, " +
                       rat_to_string(h.lifetime()) + "]");
  }
}

// Index of the last knot with time <= t.
std::size_t knot_before(const std::vector<Knot>& ks, const Rat& t) {
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

Rat eval(const HeightFunction& h, const Rat& t) {
  check_time(h, t);
  const auto& ks = h.knots();
  const std::size_t i = knot_before(ks, t);
  if (ks[i].t == t) return ks[i].y_left;
  const Knot& a = ks[i];
  const Knot& b = ks[i + 1];
  return a.y_right + (b.y_left - a.y_right) * (t - a.t) / (b.t - a.t);
}

Rat right_limit(const HeightFunction& h, const Rat& t) {
  check_time(h, t);
  if (t == h.lifetime()) throw domain_error("right limit at lifetime is undefined");
  const auto& ks = h.knots();
  const std::size_t i = knot_before(ks, t);
  if (ks[i].t == t) return ks[i].y_right;
  return eval(h, t);
}

std::pair<Rat, bool> min_on_attained(const HeightFunction& h, const Rat& s, const Rat& t) {
  check_time(h, s);
  check_time(h, t);
  const Rat& lo = rat_min(s, t);
  const Rat& hi = rat_max(s, t);
  Rat attained = rat_min(eval(h, lo), eval(h, hi));
  Rat inf = attained;
  const auto& ks = h.knots();
  for (std::size_t i = knot_before(ks, lo); i < ks.size() && ks[i].t <= hi; ++i) {
    if (lo < ks[i].t && ks[i].y_left < attained) attained = ks[i].y_left;
    if (ks[i].t < hi && lo <= ks[i].t && ks[i].y_right < inf) inf = ks[i].y_right;
  }
  if (attained < inf) inf = attained;
  return {inf, inf == attained};
}

Rat min_on(const HeightFunction& h, const Rat& s, const Rat& t) {
  return min_on_attained(h, s, t).first;
}

Rat quotient_distance(const HeightFunction& h, const Rat& s, const Rat& t) {
  return eval(h, s) + eval(h, t) - 2 * min_on(h, s, t);
}

std::pair<IntervalSet, IntervalSet> visit_sets(const HeightFunction& h) {
  IntervalSet first, latter;
  first.add({Rat(0), Rat(0), true, true});
  const auto& ks = h.knots();
  // Piece i runs on (t_i, t_{i+1}] from y_right_i to y_left_{i+1}. Rises
  // always explore fresh points; descents always retrace (every point at a
  // lower height on the current root path was already crossed on the way up,
  // jumps only skip downward). A plateau sits on one point: it is fresh
  // exactly when the path comes up into it, i.e. no jump at its left knot and
  // a rising piece before it.
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    const Rat& a = ks[i].y_right;
    const Rat& b = ks[i + 1].y_left;
    Interval piece{ks[i].t, ks[i + 1].t, false, true};
    if (a < b) {
      first.add(piece);
    } else if (b < a) {
      latter.add(piece);
    } else {
      bool fresh = true;
      if (ks[i].y_left != ks[i].y_right) {
        fresh = false;  // jump lands on an already explored point
      } else if (i > 0) {
        fresh = ks[i - 1].y_right < ks[i].y_left;  // reached from below?
      }
      (fresh ? first : latter).add(piece);
    }
  }
  return {first, latter};
}

bool is_minimal(const HeightFunction& h) {
  return visit_sets(h).second.total_length() == 0;
}

Rat total_variation(const HeightFunction& h, const Rat& a, const Rat& b) {
  check_time(h, a);
  check_time(h, b);
  if (b < a) throw domain_error("total_variation: reversed interval");
  if (a == b) return Rat(0);
  const auto& ks = h.knots();
  Rat v = 0;
  Rat prev_t = a;
  Rat prev_right = right_limit(h, a);
  if (ks[knot_before(ks, a)].t == a) {
    v += eval(h, a) - prev_right;  // jump at the left endpoint is seen
  }
  for (std::size_t i = knot_before(ks, a) + 1; i < ks.size() && ks[i].t <= b; ++i) {
    v += rat_abs(ks[i].y_left - prev_right);
    if (ks[i].t < b) {
      v += ks[i].y_left - ks[i].y_right;
      prev_t = ks[i].t;
      prev_right = ks[i].y_right;
    } else {
      prev_t = b;
    }
  }
  if (prev_t < b) v += rat_abs(eval(h, b) - prev_right);
  return v;
}

HeightFunction continuify(const HeightFunction& h) {
  std::vector<Knot> out;
  Rat shift = 0;
  Rat budget(1, 2);
  for (const Knot& k : h.knots()) {
    if (k.y_right < k.y_left) {
      out.push_back({k.t + shift, k.y_left, k.y_left});
      shift += budget;
      budget /= 2;
      out.push_back({k.t + shift, k.y_right, k.y_right});
    } else {
      out.push_back({k.t + shift, k.y_left, k.y_right});
    }
  }
  return HeightFunction(std::move(out));
}

bool four_times_check(const HeightFunction& h, const Rat& t1, const Rat& t2, const Rat& t3,
                      const Rat& t4) {
  if (t2 < t1 || t3 < t2 || t4 < t3) {
    throw domain_error("four_times_check: times must be nondecreasing");
  }
  const Rat lhs = rat_min(min_on(h, t1, t3), min_on(h, t2, t4));
  const Rat rhs = rat_min(min_on(h, t1, t4), min_on(h, t2, t3));
  return lhs == rhs;
}

HeightFunction rescale_domain(const HeightFunction& h, const Rat& factor) {
  if (!(factor > 0)) throw domain_error("rescale_domain: factor must be positive");
  std::vector<Knot> out = h.knots();
  for (Knot& k : out) k.t *= factor;
  return HeightFunction(std::move(out));
}

Rat sup_difference(const HeightFunction& a, const HeightFunction& b) {
  if (a.lifetime() != b.lifetime()) {
    throw domain_error("sup_difference: lifetimes differ");
  }
  std::vector<Rat> times;
  times.reserve(a.knots().size() + b.knots().size());
  for (const Knot& k : a.knots()) times.push_back(k.t);
  for (const Knot& k : b.knots()) times.push_back(k.t);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  Rat best = 0;
  for (const Rat& t : times) {
    best = rat_max(best, rat_abs(eval(a, t) - eval(b, t)));
    if (t < a.lifetime()) {
      best = rat_max(best, rat_abs(right_limit(a, t) - right_limit(b, t)));
    }
  }
  return best;
}

}  // namespace dendro
