#pragma once

#include <string>
#include <vector>

#include "dendro/rational.hpp"

namespace dendro {

// Nonempty interval with rational endpoints; half-open forms allowed.
// Valid when lo < hi, or lo == hi with both ends closed (a single point).
struct Interval {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool operator==(const Interval&) const = default;
};

std::string interval_to_string(const Interval& iv);

// Finite union of disjoint intervals, kept sorted and merged: two parts never
// overlap and never touch in a joinable way (e.g. (a,b] followed by (b,c]
// collapses into (a,c]).
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  void add(Interval iv);

  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }
  Rat total_length() const;
  bool contains(const Rat& t) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

std::string interval_set_to_string(const IntervalSet& s);

}  // namespace dendro
