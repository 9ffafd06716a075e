#pragma once

#include <gmpxx.h>

#include <string>

namespace dendro {

// Exact rational scalar. Values stay reduced with positive denominator as
// long as they are produced by arithmetic or by the helpers below.
using Rat = mpq_class;

// num/den, canonicalized. Throws std::invalid_argument when den == 0.
Rat rat(long num, long den = 1);

// Parses "p/q" or "p", optional leading '-', no whitespace, no decimals.
// Throws std::invalid_argument on any other shape, including q == 0.
Rat rat_from_string(const std::string& text);

// Canonical "p/q" with q > 0 and gcd(|p|, q) == 1; integers render as "p/1".
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

// Exact conversion: every finite double is a dyadic rational.
Rat rat_from_double_exact(double value);

Rat rat_abs(const Rat& value);
const Rat& rat_min(const Rat& a, const Rat& b);
const Rat& rat_max(const Rat& a, const Rat& b);

}  // namespace dendro
