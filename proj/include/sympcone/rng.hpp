#ifndef SYMPCONE_RNG_HPP
#define SYMPCONE_RNG_HPP

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace sympcone {

// Deterministic seeded randomness. std::mt19937_64's output sequence is fixed
// by the standard; the integer draws below avoid std::uniform_int_distribution
// (whose mapping is implementation-defined) so identical seeds give identical
// values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [lo, hi], inclusive. Rejection sampling, bias-free.
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("rng: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next_u64());  // full 64-bit range
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  long nonzero_uniform(long lo, long hi) {
    long v;
    do {
      v = uniform(lo, hi);
    } while (v == 0);
    return v;
  }

  Rational small_rational(long bound) { return Rational(uniform(-bound, bound)); }

 private:
  std::mt19937_64 eng_;
};

// splitmix64, used to derive independent per-sample seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sympcone

#endif
