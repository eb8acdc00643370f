#include "gossip/opinion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gossip {

namespace {

std::int64_t count_zero_bits(const std::vector<std::uint8_t>& bits) {
  return static_cast<std::int64_t>(std::count(bits.begin(), bits.end(), std::uint8_t{0}));
}

}  // namespace

OpinionVector::OpinionVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)), zeros_(count_zero_bits(bits_)) {
  if (bits_.size() < 2) throw std::invalid_argument("OpinionVector: need n >= 2 nodes");
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("OpinionVector: opinions must be 0 or 1");
  }
}

OpinionVector OpinionVector::unanimous(std::size_t n, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("unanimous: bit must be 0 or 1");
  return OpinionVector(std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(bit)));
}

OpinionVector OpinionVector::random(std::size_t n, RandomStream& rng) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_u64() & 1u);
  return OpinionVector(std::move(bits));
}

void OpinionVector::set(std::size_t i, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("set: bit must be 0 or 1");
  zeros_ += (bit == 0) - (bits_[i] == 0);
  bits_[i] = static_cast<std::uint8_t>(bit);
}

std::optional<int> OpinionVector::unanimous_value() const {
  if (zeros_ == static_cast<std::int64_t>(bits_.size())) return 0;
  if (zeros_ == 0) return 1;
  return std::nullopt;
}

bool OpinionVector::contains(int bit) const {
  return bit == 0 ? zeros_ > 0 : count_ones() > 0;
}

std::int64_t bias(const OpinionVector& v) { return v.bias(); }

OpinionVector make_canonical(std::size_t n, std::size_t k) {
  if (k > n) {
    throw std::invalid_argument("make_canonical: k = " + std::to_string(k) +
                                " out of range [0, " + std::to_string(n) + "]");
  }
  std::vector<std::uint8_t> bits(n, 1);
  std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(k), std::uint8_t{0});
  return OpinionVector(std::move(bits));
}

std::pair<OpinionVector, OpinionVector> make_majority_pair(std::size_t n, std::int64_t b) {
  const auto sn = static_cast<std::int64_t>(n);
  if (b <= 0 || b > sn) throw std::invalid_argument("make_majority_pair: need 0 < b <= n");
  if ((sn - b) % 2 != 0) {
    throw std::invalid_argument("make_majority_pair: n - b must be even, got n = " +
                                std::to_string(n) + ", b = " + std::to_string(b));
  }
  const std::size_t half = static_cast<std::size_t>((sn - b) / 2);
  std::vector<std::uint8_t> common(n, 0);
  std::fill(common.begin() + static_cast<std::ptrdiff_t>(half),
            common.begin() + static_cast<std::ptrdiff_t>(2 * half), std::uint8_t{1});
  std::vector<std::uint8_t> zeros_side = common;
  std::vector<std::uint8_t> ones_side = common;
  std::fill(ones_side.begin() + static_cast<std::ptrdiff_t>(2 * half), ones_side.end(),
            std::uint8_t{1});
  return {OpinionVector(std::move(zeros_side)), OpinionVector(std::move(ones_side))};
}

OpinionVector make_biased(std::size_t n, std::int64_t b) {
  const auto sn = static_cast<std::int64_t>(n);
  if (b < -sn || b > sn) throw std::invalid_argument("make_biased: need |b| <= n");
  if ((sn + b) % 2 != 0) {
    throw std::invalid_argument("make_biased: n + b must be even (bias parity), got n = " +
                                std::to_string(n) + ", b = " + std::to_string(b));
  }
  const std::size_t zeros = static_cast<std::size_t>((sn + b) / 2);
  std::vector<std::uint8_t> bits(n, 1);
  std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(zeros), std::uint8_t{0});
  return OpinionVector(std::move(bits));
}

}  // namespace gossip
