#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gossip/random_stream.hpp"

namespace gossip {

// Global binary configuration of n nodes. Nodes are numbered 1..n in
// reports; internally vectors are 0-indexed. Bias follows the
// zeros-minus-ones convention (b = 2R - n with R the number of zeros),
// so the sign is positive when 0 is the majority opinion.
class OpinionVector {
 public:
  explicit OpinionVector(std::vector<std::uint8_t> bits);

  static OpinionVector unanimous(std::size_t n, int bit);
  static OpinionVector random(std::size_t n, RandomStream& rng);

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_[i]; }

  void set(std::size_t i, int bit);

  std::int64_t count_zeros() const { return zeros_; }
  std::int64_t count_ones() const { return static_cast<std::int64_t>(bits_.size()) - zeros_; }
  std::int64_t bias() const { return 2 * zeros_ - static_cast<std::int64_t>(bits_.size()); }

  // Engaged with the shared bit when all nodes agree.
  std::optional<int> unanimous_value() const;

  bool contains(int bit) const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const OpinionVector& other) const { return bits_ == other.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::int64_t zeros_;
};

std::int64_t bias(const OpinionVector& v);

// Vector x_k: nodes 1..k hold 0, nodes k+1..n hold 1.
OpinionVector make_canonical(std::size_t n, std::size_t k);

// Compressed form of x_k.
struct CanonicalVector {
  std::size_t n;
  std::size_t k;
  OpinionVector expand() const { return make_canonical(n, k); }
};

// The two initial vectors of the majority-consensus lower-bound
// construction: both have (n-b)/2 zeros then (n-b)/2 ones on the first
// n-b nodes; the last b nodes hold 0 in the first vector and 1 in the
// second. Requires n - b even and 0 < b <= n.
std::pair<OpinionVector, OpinionVector> make_majority_pair(std::size_t n, std::int64_t b);

// Vector with exactly (n + b) / 2 zeros: bias b. Requires n + b even
// and |b| <= n.
OpinionVector make_biased(std::size_t n, std::int64_t b);

}  // namespace gossip
