#include "dendro/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace dendro {

namespace {

void check_valid(const Interval& iv) {
  if (iv.lo < iv.hi) return;
  if (iv.lo == iv.hi && iv.lo_closed && iv.hi_closed) return;
  throw std::invalid_argument("interval: empty or reversed");
}

// True when a ∪ b is a single interval, assuming a.lo <= b.lo order.
bool joinable(const Interval& a, const Interval& b) {
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi && (a.hi_closed || b.lo_closed)) return true;
  return false;
}

}  // namespace

std::string interval_to_string(const Interval& iv) {
  std::string s = iv.lo_closed ? "[" : "(";
  s += rat_to_string(iv.lo) + "," + rat_to_string(iv.hi);
  s += iv.hi_closed ? "]" : ")";
  return s;
}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  for (auto& p : parts) add(std::move(p));
}

void IntervalSet::add(Interval iv) {
  check_valid(iv);
  parts_.push_back(std::move(iv));
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> merged;
  for (auto& p : parts_) {
    if (!merged.empty() && joinable(merged.back(), p)) {
      Interval& cur = merged.back();
      if (cur.hi < p.hi) {
        cur.hi = p.hi;
        cur.hi_closed = p.hi_closed;
      } else if (cur.hi == p.hi) {
        cur.hi_closed = cur.hi_closed || p.hi_closed;
      }
    } else {
      merged.push_back(std::move(p));
    }
  }
  parts_ = std::move(merged);
}

Rat IntervalSet::total_length() const {
  Rat sum = 0;
  for (const auto& p : parts_) sum += p.hi - p.lo;
  return sum;
}

bool IntervalSet::contains(const Rat& t) const {
  for (const auto& p : parts_) {
    if (t < p.lo) return false;
    if (t == p.lo) return p.lo_closed;
    if (t < p.hi) return true;
    if (t == p.hi) return p.hi_closed;
  }
  return false;
}

std::string interval_set_to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& p : s.parts()) {
    if (!out.empty()) out += " u ";
    out += interval_to_string(p);
  }
  return out;
}

}  // namespace dendro
