#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace gossip {

// Seeded, splittable random stream. Streams are addressed by
// (master_seed, stream_index): equal addresses replay the exact same
// sequence, distinct stream indices give streams that are independent
// for simulation purposes. The generator is xoshiro256** with its state
// filled from a SplitMix64 walk over the two address words.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
      : master_seed_(master_seed), stream_index_(stream_index) {
    std::uint64_t x = master_seed ^ 0x9e3779b97f4a7c15ull;
    x = splitmix(x);
    x ^= splitmix(stream_index + 0xbf58476d1ce4e5b9ull);
    for (auto& word : state_) {
      x = splitmix(x);
      word = x;
    }
    // xoshiro256** must not start from the all-zero state
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[3] = 1;
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  result_type operator()() { return next_u64(); }

  // Uniform double in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Consumes exactly one draw, also for p in {0, 1}.
  bool bernoulli(double p) { return next_double() < p; }

  // Unbiased integer in [0, bound) via rejection on the top bits.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  std::int64_t binomial(std::int64_t trials, double p) {
    std::binomial_distribution<std::int64_t> dist(trials, p);
    return dist(*this);
  }

 private:
  static std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t state_[4];
};

}  // namespace gossip
