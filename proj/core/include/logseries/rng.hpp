#ifndef LOGSERIES_RNG_HPP
#define LOGSERIES_RNG_HPP

#include <cstdint>
#include <random>

namespace logseries {

/// One splitmix64 step; used to mix words into sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seedable 64-bit generator. Uniform doubles are built from the raw
/// bits directly so streams are identical across standard libraries.
///
/// Stream splitting: substream(seed, a, b) derives an independent
/// generator by folding (seed, a, b) through splitmix64; the simulation
/// harness uses (seed, sample_size, replication_index).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = seed;
    std::uint64_t m = splitmix64(s);
    s ^= a * 0x9e3779b97f4a7c15ULL;
    m ^= splitmix64(s);
    s ^= b * 0xc2b2ae3d27d4eb4fULL;
    m ^= splitmix64(s);
    return Rng(m);
  }

  std::uint64_t next() { return eng_(); }

  /// Uniform in (0,1): 53 random bits, offset by half an ulp so 0 is
  /// never returned.
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace logseries

#endif  // LOGSERIES_RNG_HPP
