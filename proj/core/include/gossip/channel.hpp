#pragma once

#include <cstdint>
#include <stdexcept>

#include "gossip/random_stream.hpp"

namespace gossip {

// Binary symmetric channel: a transmitted bit arrives intact with
// probability 1/2 + eps and flipped with probability 1/2 - eps.
// eps = 1/2 is the noiseless channel.
class NoiseChannel {
 public:
  explicit NoiseChannel(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0) || epsilon > 0.5) {
      throw std::invalid_argument("NoiseChannel: epsilon must lie in (0, 1/2]");
    }
  }

  double epsilon() const { return epsilon_; }
  double flip_probability() const { return 0.5 - epsilon_; }
  bool noiseless() const { return epsilon_ == 0.5; }

  // Consumes exactly one draw regardless of eps, so two runs with the
  // same seed stay aligned when only the noise level differs.
  int transmit(int bit, RandomStream& rng) const {
    const bool flip = rng.bernoulli(flip_probability());
    return flip ? 1 - bit : bit;
  }

 private:
  double epsilon_;
};

// Exact probability that one uniform pull (self included) through the
// channel shows opinion 0, as a function of the configuration bias:
// p_r = 1/2 + eps * b / n.
inline double observe_probability(std::int64_t bias, std::int64_t n, const NoiseChannel& ch) {
  if (n < 1) throw std::invalid_argument("observe_probability: need n >= 1");
  if (bias < -n || bias > n) throw std::invalid_argument("observe_probability: need |bias| <= n");
  return 0.5 + ch.epsilon() * static_cast<double>(bias) / static_cast<double>(n);
}

}  // namespace gossip
