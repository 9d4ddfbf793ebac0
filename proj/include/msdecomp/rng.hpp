#ifndef MSDECOMP_RNG_HPP
#define MSDECOMP_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace msd {

// splitmix64 finalizer, used to derive independent substreams from a base
// seed. Results must not depend on how work is scheduled, so every consumer
// (grid init, each resampling round, each cell) gets its own stream keyed by
// (seed, salt...).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt_a,
                                 std::uint64_t salt_b = 0) {
  return mix64(mix64(seed ^ mix64(salt_a)) ^ mix64(salt_b));
}

// Deterministic RNG facade. std::shuffle and std::discrete_distribution are
// implementation-defined, so the few primitives we need are spelled out.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, n).
  std::size_t below(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    return static_cast<std::size_t>(engine_() % n);
  }

  // Uniform double in [0, 1).
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      std::swap(v[i], v[below(i + 1)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

// Draws `count` distinct indices from [0, weights.size()) without
// replacement, probability of each draw proportional to its weight among the
// remaining candidates. Weights must be nonnegative with a positive total.
std::vector<std::size_t> weighted_sample_without_replacement(
    const std::vector<double>& weights, std::size_t count, Rng& rng);

} // namespace msd

#endif
