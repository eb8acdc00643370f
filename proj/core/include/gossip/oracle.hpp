#pragma once

#include <cstdint>

namespace gossip {

// Exact combinatorial and information-theoretic calculators used as
// ground truth by the simulator cross-checks. All probabilities are
// computed to relative error <= 1e-12; the identity checks are carried
// out in exact rational arithmetic internally.

// ln C(n, k)
double log_binomial(std::int64_t n, std::int64_t k);

// P(Bin(n, p) = k)
double binomial_pmf(std::int64_t n, std::int64_t k, double p);

// P(Bin(n, p) >= m), evaluated through the regularized incomplete beta
// function, stable for n up to ~1e9.
double binomial_tail_ge(std::int64_t n, std::int64_t m, double p);

// Probability that more than ell/2 of ell independent Bernoulli(p)
// trials succeed. Requires ell >= 1 odd; even ell is rejected (use the
// tie-break variant).
double majority_win_prob(std::int64_t ell, double p);

// Even-ell variant with uniform random tie breaking:
// P(X > ell/2) + P(X = ell/2) / 2. Also accepts odd ell.
double majority_win_prob_tiebreak(std::int64_t ell, double p);

// Reference evaluation of majority_win_prob in exact rational
// arithmetic (p taken as the exact binary rational of the double).
// Intended for cross-checks; requires ell <= 2000.
double majority_win_prob_exact(std::int64_t ell, double p);

// Both sides of the binomial-tail / beta-integral identity
//   sum_{j<i<=ell} C(ell,i) p^i (1-p)^(ell-i)
//     = C(ell,j+1) (j+1) Int_0^p z^j (1-z)^(ell-j-1) dz
// evaluated in exact rational arithmetic; the identity is exact, so the
// reported gap measures only the final rounding to double.
struct IdentityCheck {
  double lhs;
  double rhs;
  double gap;
  bool exact_equal;  // rational equality before rounding
};
IdentityCheck binomial_beta_check(int ell, int j, double p);

// Exact Pr(supports 0) - Pr(supports 1) after one k-majority update
// against a configuration with bias s out of n, across the channel:
// majority_win_prob(k, 1/2 + eps*s/n) - majority_win_prob(k, 1/2 - eps*s/n).
double drift_gap(std::int64_t n, std::int64_t s, double epsilon, std::int64_t k);

// Central binomial bracket (sign-corrected Stirling consequence):
//   4^r/sqrt(pi r) e^(-1/(8r)) <= C(2r, r) <= 4^r/sqrt(pi r) e^(-1/(9r)).
// As printed in the source material the exponent signs are swapped and
// the lower bound already fails at r = 1; printed_bracket_holds reports
// that variant. The comparison is done in log space against the exact
// big-integer value.
struct CentralBinomialBracket {
  double lower;
  double exact;
  double upper;
  bool holds;
  bool printed_bracket_holds;
};
CentralBinomialBracket central_binomial_check(int r);

// Bernoulli Kullback-Leibler divergence in nats:
//   p ln(p/q) + (1-p) ln((1-p)/(1-q)).
// p and q must lie strictly inside (0, 1).
double kl_bernoulli(double p, double q);

// Minimum number of rounds for the asymmetric two-party bit-recovery
// problem over a binary symmetric channel with parameter eps: party A
// must output 1 with probability >= p = 1/4 - delta/4 on input 1 and
// <= q = 5*delta on input 0. Each received bit contributes at most
// kl_bernoulli(1/2+eps, 1/2-eps) nats, so
//   rounds_real = kl_bernoulli(p, q) / kl_bernoulli(1/2+eps, 1/2-eps),
//   t_min       = max(1, ceil(rounds_real)).
struct TwoPartyBound {
  double delta;
  double epsilon;
  double p;
  double q;
  double kl_gap;         // numerator: divergence A must accumulate
  double per_round_cap;  // denominator: per-received-bit divergence cap
  double rounds_real;
  std::int64_t t_min;
};
TwoPartyBound two_party_min_rounds(double delta, double epsilon);

}  // namespace gossip
