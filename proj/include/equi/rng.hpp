#ifndef EQUI_RNG_HPP
#define EQUI_RNG_HPP

#include <cstdint>
#include <random>

namespace equi {

// Seeded generator with a platform-independent uniform mapping.
// std::uniform_real_distribution is implementation-defined, so anything that
// must be byte-identical across toolchains (reports, frozen test data) uses
// this instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  // independent stream derived from this one's seed (per-suite seeds etc.)
  Rng fork(std::uint64_t salt) const {
    return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace equi

#endif
