#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "dendro/rational.hpp"

namespace dendro {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic random source. mt19937_64 is fully specified by the
// standard and every draw below goes through fixed-width integer paths, so a
// seed pins the stream on all platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits() { return engine_(); }

  // Uniform in [0, n); unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    std::uint64_t r = bits();
    while (r < threshold) r = bits();
    return r % n;
  }

  // 53-bit uniform double in [0, 1).
  double unit_double() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  // Uniform k/2^32 in [0, 1).
  Rat unit_rat() {
    const unsigned long k = static_cast<unsigned long>(bits() >> 32);
    Rat r(mpz_class(k), mpz_class(1) << 32);
    r.canonicalize();
    return r;
  }

  // Uniform (2k+1)/2^33, strictly inside (0, 1).
  Rat open_unit_rat() {
    const unsigned long k = static_cast<unsigned long>(bits() >> 32);
    Rat r(2 * mpz_class(k) + 1, mpz_class(1) << 33);
    r.canonicalize();
    return r;
  }

  // Uniform on a 2^64-point grid of [lo, hi); lo when hi <= lo.
  Rat rat_in(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) return lo;
    const unsigned long k = static_cast<unsigned long>(bits() >> 32);
    Rat u(mpz_class(k), mpz_class(1) << 32);
    u.canonicalize();
    return lo + u * (hi - lo);
  }

  // Uniform strictly inside (lo, hi); pre lo < hi.
  Rat rat_in_open(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("Rng::rat_in_open: empty interval");
    return lo + open_unit_rat() * (hi - lo);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // Derived seed for an independent child stream.
  std::uint64_t fork() {
    ++forks_;
    return splitmix64(seed_ ^ (0x9E3779B97F4A7C15ULL * forks_));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t forks_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace dendro
