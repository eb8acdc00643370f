#include "gossip/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gossip {

namespace {

constexpr double kPi = 3.14159265358979323846;

double lgamma_safe(double x) {
#if defined(__GLIBC__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

// Continued fraction for the regularized incomplete beta (Lentz).
double ibeta_cf(double a, double b, double x) {
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

// Regularized incomplete beta I_x(a, b).
double ibeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = lgamma_safe(a + b) - lgamma_safe(a) - lgamma_safe(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * ibeta_cf(a, b, x) / a;
  }
  return 1.0 - front * ibeta_cf(b, a, 1.0 - x) / b;
}

mpq_class rational_tail_ge(std::int64_t ell, std::int64_t m, const mpq_class& p) {
  const mpq_class one_minus_p = 1 - p;
  mpq_class sum = 0;
  mpz_class coeff;
  for (std::int64_t i = m; i <= ell; ++i) {
    mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(ell),
                 static_cast<unsigned long>(i));
    mpq_class term(coeff);
    mpq_class pp = 1;
    for (std::int64_t t = 0; t < i; ++t) pp *= p;
    mpq_class qq = 1;
    for (std::int64_t t = 0; t < ell - i; ++t) qq *= one_minus_p;
    sum += term * pp * qq;
  }
  return sum;
}

void check_probability_argument(double p, const char* where) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(where) + ": p must lie in [0, 1]");
  }
}

}  // namespace

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: need 0 <= k <= n");
  return lgamma_safe(static_cast<double>(n) + 1.0) -
         lgamma_safe(static_cast<double>(k) + 1.0) -
         lgamma_safe(static_cast<double>(n - k) + 1.0);
}

double binomial_pmf(std::int64_t n, std::int64_t k, double p) {
  check_probability_argument(p, "binomial_pmf");
  if (k < 0 || k > n) return 0.0;
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  return std::exp(log_binomial(n, k) + k * std::log(p) + (n - k) * std::log1p(-p));
}

double binomial_tail_ge(std::int64_t n, std::int64_t m, double p) {
  check_probability_argument(p, "binomial_tail_ge");
  if (m <= 0) return 1.0;
  if (m > n) return 0.0;
  return ibeta(static_cast<double>(m), static_cast<double>(n - m + 1), p);
}

double majority_win_prob(std::int64_t ell, double p) {
  if (ell < 1) throw std::invalid_argument("majority_win_prob: need ell >= 1");
  if (ell % 2 == 0) {
    throw std::invalid_argument(
        "majority_win_prob: ell must be odd (use majority_win_prob_tiebreak for even ell)");
  }
  check_probability_argument(p, "majority_win_prob");
  return binomial_tail_ge(ell, (ell + 1) / 2, p);
}

double majority_win_prob_tiebreak(std::int64_t ell, double p) {
  if (ell < 1) throw std::invalid_argument("majority_win_prob_tiebreak: need ell >= 1");
  check_probability_argument(p, "majority_win_prob_tiebreak");
  if (ell % 2 == 1) return majority_win_prob(ell, p);
  return binomial_tail_ge(ell, ell / 2 + 1, p) + 0.5 * binomial_pmf(ell, ell / 2, p);
}

double majority_win_prob_exact(std::int64_t ell, double p) {
  if (ell < 1 || ell > 2000) throw std::invalid_argument("majority_win_prob_exact: ell out of range");
  if (ell % 2 == 0) throw std::invalid_argument("majority_win_prob_exact: ell must be odd");
  check_probability_argument(p, "majority_win_prob_exact");
  return rational_tail_ge(ell, (ell + 1) / 2, mpq_class(p)).get_d();
}

IdentityCheck binomial_beta_check(int ell, int j, double p) {
  if (ell < 1 || j < 0 || j > ell - 1) {
    throw std::invalid_argument("binomial_beta_check: need 0 <= j <= ell - 1");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("binomial_beta_check: p must lie in (0, 1)");
  }
  const mpq_class pq(p);
  const mpq_class lhs = rational_tail_ge(ell, j + 1, pq);

  // Int_0^p z^j (1-z)^(ell-j-1) dz expanded to a rational polynomial:
  // sum_m C(ell-j-1, m) (-1)^m p^(j+m+1) / (j+m+1).
  const int d = ell - j - 1;
  mpz_class coeff;
  mpq_class integral = 0;
  mpq_class p_power = 1;
  for (int t = 0; t < j + 1; ++t) p_power *= pq;
  for (int m = 0; m <= d; ++m) {
    mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(m));
    mpq_class term(coeff);
    term *= p_power;
    term /= (j + m + 1);
    if (m % 2 == 0) {
      integral += term;
    } else {
      integral -= term;
    }
    p_power *= pq;
  }
  mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(ell),
               static_cast<unsigned long>(j + 1));
  mpq_class rhs = mpq_class(coeff) * (j + 1) * integral;

  IdentityCheck out;
  out.lhs = lhs.get_d();
  out.rhs = rhs.get_d();
  out.gap = std::fabs(out.lhs - out.rhs);
  out.exact_equal = (cmp(lhs, rhs) == 0);
  return out;
}

double drift_gap(std::int64_t n, std::int64_t s, double epsilon, std::int64_t k) {
  if (n < 1 || s < 0 || s > n) throw std::invalid_argument("drift_gap: need 0 <= s <= n");
  if (!(epsilon > 0.0) || epsilon > 0.5) {
    throw std::invalid_argument("drift_gap: epsilon must lie in (0, 1/2]");
  }
  const double shift = epsilon * static_cast<double>(s) / static_cast<double>(n);
  return majority_win_prob(k, 0.5 + shift) - majority_win_prob(k, 0.5 - shift);
}

CentralBinomialBracket central_binomial_check(int r) {
  if (r < 1) throw std::invalid_argument("central_binomial_check: need r >= 1");
  mpz_class exact;
  mpz_bin_uiui(exact.get_mpz_t(), static_cast<unsigned long>(2 * r),
               static_cast<unsigned long>(r));

  // log of the exact value from the big integer, accurate to ~1e-16.
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, exact.get_mpz_t());
  const double log_exact = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);

  const double log_base = r * std::log(4.0) - 0.5 * std::log(kPi * r);
  const double log_lower = log_base - 1.0 / (8.0 * r);
  const double log_upper = log_base - 1.0 / (9.0 * r);

  CentralBinomialBracket out;
  out.lower = std::exp(log_lower);
  out.exact = exact.get_d();
  out.upper = std::exp(log_upper);
  out.holds = (log_lower <= log_exact) && (log_exact <= log_upper);
  // The bracket with the exponent signs as printed: e^(+1/(9r)) below,
  // e^(+1/(8r)) above.
  out.printed_bracket_holds =
      (log_base + 1.0 / (9.0 * r) <= log_exact) && (log_exact <= log_base + 1.0 / (8.0 * r));
  return out;
}

double kl_bernoulli(double p, double q) {
  if (!(p > 0.0 && p < 1.0) || !(q > 0.0 && q < 1.0)) {
    throw std::domain_error("kl_bernoulli: p and q must lie strictly inside (0, 1)");
  }
  return p * std::log(p / q) + (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
}

TwoPartyBound two_party_min_rounds(double delta, double epsilon) {
  if (!(delta > 0.0 && delta < 1.0 / 21.0)) {
    throw std::domain_error("two_party_min_rounds: need delta in (0, 1/21) so that p > q");
  }
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::domain_error("two_party_min_rounds: need epsilon in (0, 1/2)");
  }
  TwoPartyBound out;
  out.delta = delta;
  out.epsilon = epsilon;
  out.p = 0.25 - delta / 4.0;
  out.q = 5.0 * delta;
  out.kl_gap = kl_bernoulli(out.p, out.q);
  out.per_round_cap = kl_bernoulli(0.5 + epsilon, 0.5 - epsilon);
  out.rounds_real = out.kl_gap / out.per_round_cap;
  out.t_min = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(out.rounds_real)));
  return out;
}

}  // namespace gossip
