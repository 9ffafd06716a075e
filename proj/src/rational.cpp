#include "dendro/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace dendro {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool digits_only(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  // Strict shape check first: GMP's own parser skips whitespace, which we
  // must not accept in serialized payloads.
  const std::size_t slash = text.find('/');
  const std::size_t num_begin = (!text.empty() && text[0] == '-') ? 1 : 0;
  const std::size_t num_end = (slash == std::string::npos) ? text.size() : slash;
  bool ok = digits_only(text, num_begin, num_end);
  if (ok && slash != std::string::npos) {
    ok = digits_only(text, slash + 1, text.size());
  }
  if (!ok) throw std::invalid_argument("rational: malformed literal '" + text + "'");

  mpz_class num(text.substr(0, num_end));
  mpz_class den = (slash == std::string::npos) ? mpz_class(1)
                                               : mpz_class(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

Rat rat_from_double_exact(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("rational: non-finite double");
  Rat r(value);
  r.canonicalize();
  return r;
}

Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }

const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace dendro
