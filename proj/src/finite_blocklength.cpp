#include "rdlab/finite_blocklength.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rdlab/bernoulli_rd.hpp"
#include "rdlab/binomial.hpp"
#include "rdlab/info_core.hpp"
#include "rdlab/tilted.hpp"

namespace rdlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kMaxExactBlocklength = 4000;

void validate_query(const FBLQuery& q, const char* what) {
  if (!(q.p > 0.0 && q.p < 1.0)) {
    throw std::domain_error(std::string(what) + ": p outside (0, 1)");
  }
  if (!(q.eps > 0.0 && q.eps < 1.0)) {
    throw std::domain_error(std::string(what) + ": eps outside (0, 1)");
  }
  if (q.n < 1) throw std::domain_error(std::string(what) + ": n must be >= 1");
  if (!(q.D > 0.0 && q.D < std::min(q.p, 1.0 - q.p))) {
    throw std::domain_error(std::string(what) + ": D outside (0, min(p, 1-p))");
  }
}

void check_exact_blocklength(std::int64_t n, const char* what) {
  if (n > kMaxExactBlocklength) {
    throw capacity_error(std::string(what) + ": exact bounds support n <= " +
                         std::to_string(kMaxExactBlocklength));
  }
}

// floor(n D), nudged so that products like 3 * (1/3) that round just below an
// integer still count the boundary as a success.
std::int64_t mismatch_budget(std::int64_t n, double D) {
  return static_cast<std::int64_t>(std::floor(n * D + 1e-9));
}

// Hit and miss statistics of one random codeword against a weight-k sequence.
// `hit` is P(mismatches <= t); `log_miss` is log(1 - hit) computed from
// whichever tail is small, so it stays meaningful when hit is within an ulp
// of 0 or 1.
struct HitTail {
  double hit;
  double log_miss;
};

HitTail ball_hit_tail(double q1, std::int64_t n, std::int64_t k, std::int64_t t) {
  if (t >= n) return {1.0, -kInf};
  if (t < 0) return {0.0, 0.0};
  // Mismatches on the k one-positions flip with probability 1-q1, on the
  // n-k zero-positions with probability q1.
  const Eigen::VectorXd pmf_ones = binomial_pmf(k, 1.0 - q1);
  const Eigen::VectorXd pmf_zeros = binomial_pmf(n - k, q1);
  const std::int64_t nb = n - k;
  Eigen::VectorXd cdf_zeros(nb + 1);   // P(B <= j)
  Eigen::VectorXd tail_zeros(nb + 2);  // P(B >= j), top-down partial sums
  double acc = 0.0;
  for (std::int64_t j = 0; j <= nb; ++j) {
    acc += pmf_zeros(j);
    cdf_zeros(j) = acc;
  }
  tail_zeros(nb + 1) = 0.0;
  acc = 0.0;
  for (std::int64_t j = nb; j >= 0; --j) {
    acc += pmf_zeros(j);
    tail_zeros(j) = acc;
  }

  double lower = 0.0;  // P(A + B <= t)
  double upper = 0.0;  // P(A + B > t), summed directly
  const std::int64_t a_hi = std::min(k, t);
  for (std::int64_t a = 0; a <= a_hi; ++a) {
    const std::int64_t j = t - a;
    lower += pmf_ones(a) * (j >= nb ? 1.0 : cdf_zeros(j));
    if (j + 1 <= nb) upper += pmf_ones(a) * tail_zeros(j + 1);
  }
  for (std::int64_t a = a_hi + 1; a <= k; ++a) upper += pmf_ones(a);

  const double hit = std::min(lower, 1.0);
  double log_miss;
  if (hit <= 0.5) {
    log_miss = hit < 1.0 ? std::log1p(-hit) : -kInf;
  } else {
    log_miss = upper > 0.0 ? std::log(upper) : -kInf;
  }
  return {hit, log_miss};
}

// Codeword component distribution Q*(1) used by the random-coding bound.
double codebook_bias(double p, double D) {
  const double d_max = std::min(p, 1.0 - p);
  if (!(D >= 0.0 && D <= d_max)) {
    throw std::domain_error("achievability: D outside [0, min(p, 1-p)]");
  }
  return (p - D) / (1.0 - 2.0 * D);
}

struct AchievabilityKernel {
  Eigen::VectorXd weights;   // source weight-class probabilities
  Eigen::VectorXd log_miss;  // log(1 - hit) per weight class
};

AchievabilityKernel make_kernel(double p, double D, std::int64_t n) {
  const double q1 = codebook_bias(p, D);
  const std::int64_t t = mismatch_budget(n, D);
  AchievabilityKernel kern;
  kern.weights = binomial_pmf(n, p);
  kern.log_miss.resize(n + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    kern.log_miss(k) = ball_hit_tail(q1, n, k, t).log_miss;
  }
  return kern;
}

// sum_k w_k (1 - hit_k)^M with M = 2^log2_M, all powers in the log domain.
double kernel_epsilon(const AchievabilityKernel& kern, double log2_M) {
  double eps = 0.0;
  for (Eigen::Index k = 0; k < kern.weights.size(); ++k) {
    const double w = kern.weights(k);
    if (w == 0.0) continue;
    const double lm = kern.log_miss(k);
    if (lm == -kInf) continue;  // ball always hit
    if (lm == 0.0) {            // ball never hit
      eps += w;
      continue;
    }
    // exponent = -M * (-log_miss), assembled in log2 to survive M >> DBL_MAX
    const double e2 = log2_M + std::log2(-lm);
    if (e2 > 1023.0) continue;  // term underflows to zero
    eps += w * std::exp(-std::exp2(e2));
  }
  return eps;
}

}  // namespace

double normal_approx_rate(const FBLQuery& q) {
  validate_query(q, "normal_approx_rate");
  const double v = dispersion(q.p, q.D);
  if (v == 0.0 && q.eps != 0.5) {
    throw std::domain_error(
        "normal_approx_rate: dispersion is zero (p = 1/2); the normal approximation "
        "only applies at eps = 1/2");
  }
  return rate_distortion(q.p, q.D) +
         std::sqrt(v / static_cast<double>(q.n)) * gaussian_q_inv(q.eps);
}

std::int64_t required_blocklength(double p, double D, double eps, double delta_rate) {
  if (!(delta_rate > 0.0)) {
    throw std::domain_error("required_blocklength: delta_rate must be > 0");
  }
  FBLQuery probe{p, D, eps, 1};
  validate_query(probe, "required_blocklength");
  const double v = dispersion(p, D);
  const double qi = gaussian_q_inv(eps);
  return static_cast<std::int64_t>(std::ceil(v * qi * qi / (delta_rate * delta_rate)));
}

double ball_hit_prob(double q1, std::int64_t n, std::int64_t k, double D) {
  if (!(q1 >= 0.0 && q1 <= 1.0)) throw std::domain_error("ball_hit_prob: q1 outside [0, 1]");
  if (n < 1 || k < 0 || k > n) throw std::domain_error("ball_hit_prob: need 0 <= k <= n");
  if (!(D >= 0.0)) throw std::domain_error("ball_hit_prob: D negative");
  check_exact_blocklength(n, "ball_hit_prob");
  if (D >= 1.0) return 1.0;
  return ball_hit_tail(q1, n, k, mismatch_budget(n, D)).hit;
}

double achievability_epsilon(double p, double D, std::int64_t n, double M) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("achievability_epsilon: p outside (0, 1)");
  if (n < 1) throw std::domain_error("achievability_epsilon: n must be >= 1");
  if (!(M >= 1.0)) throw std::domain_error("achievability_epsilon: M must be >= 1");
  if (!(D >= 0.0)) throw std::domain_error("achievability_epsilon: D negative");
  check_exact_blocklength(n, "achievability_epsilon");
  if (D >= 1.0) return 0.0;
  return kernel_epsilon(make_kernel(p, D, n), std::log2(M));
}

double converse_epsilon(double p, double D, std::int64_t n, double M) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("converse_epsilon: p outside (0, 1)");
  if (n < 1) throw std::domain_error("converse_epsilon: n must be >= 1");
  if (!(M >= 1.0)) throw std::domain_error("converse_epsilon: M must be >= 1");
  if (!(D >= 0.0)) throw std::domain_error("converse_epsilon: D negative");
  check_exact_blocklength(n, "converse_epsilon");

  const std::int64_t t = std::min(mismatch_budget(n, D), n);
  // Ball volume and coverage capacity in extended precision: counts reach
  // 2^n, far past double range at the supported n.
  long double ball = 0.0L;
  for (std::int64_t j = 0; j <= t; ++j) {
    ball += std::exp(static_cast<long double>(log_binomial_coeff(n, j)));
  }
  long double capacity = static_cast<long double>(M) * ball;

  const Eigen::VectorXd class_prob = binomial_pmf(n, p);
  double covered = 0.0;
  // Weight classes in decreasing per-sequence probability.
  for (std::int64_t step = 0; step <= n && capacity > 0.0L; ++step) {
    const std::int64_t k = p <= 0.5 ? step : n - step;
    const long double class_count =
        std::exp(static_cast<long double>(log_binomial_coeff(n, k)));
    if (capacity >= class_count) {
      covered += class_prob(k);
      capacity -= class_count;
    } else {
      const long double log_per_seq = static_cast<long double>(
          k * std::log(p) + (n - k) * std::log1p(-p));
      covered += static_cast<double>(capacity * std::exp(log_per_seq));
      capacity = 0.0L;
    }
  }
  return std::max(0.0, 1.0 - std::min(covered, 1.0));
}

RateSearchResult achievability_rate(const FBLQuery& q) {
  validate_query(q, "achievability_rate");
  check_exact_blocklength(q.n, "achievability_rate");
  const AchievabilityKernel kern = make_kernel(q.p, q.D, q.n);

  if (kernel_epsilon(kern, 0.0) <= q.eps) {
    return {0.0, 0.0, 1.0};
  }
  // Double M until the bound meets eps. The weight of classes whose ball is
  // essentially unhittable is far below any eps in (0, 1), so the doubling
  // terminates well before log2(M) reaches a few multiples of n.
  double hi = 0.0;
  bool found = false;
  for (std::int64_t j = 1; j <= 4 * q.n + 64; ++j) {
    if (kernel_epsilon(kern, static_cast<double>(j)) <= q.eps) {
      hi = static_cast<double>(j);
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::runtime_error("achievability_rate: doubling search failed to bracket");
  }
  double lo = hi - 1.0;
  if (hi <= 53.0) {
    // Exact integer binary search.
    std::int64_t lo_i = static_cast<std::int64_t>(std::exp2(lo));
    std::int64_t hi_i = static_cast<std::int64_t>(std::exp2(hi));
    while (hi_i - lo_i > 1) {
      const std::int64_t mid = lo_i + (hi_i - lo_i) / 2;
      if (kernel_epsilon(kern, std::log2(static_cast<double>(mid))) <= q.eps) {
        hi_i = mid;
      } else {
        lo_i = mid;
      }
    }
    const double log2_m = std::log2(static_cast<double>(hi_i));
    return {log2_m / static_cast<double>(q.n), log2_m, static_cast<double>(hi_i)};
  }
  // Past exact-integer range: bisect log2(M); the integer rounding error is
  // below the 1e-9 resolution used here.
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (kernel_epsilon(kern, mid) <= q.eps) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi / static_cast<double>(q.n), hi, std::exp2(hi)};
}

RateSearchResult converse_rate(const FBLQuery& q) {
  validate_query(q, "converse_rate");
  check_exact_blocklength(q.n, "converse_rate");

  const std::int64_t t = mismatch_budget(q.n, q.D);
  long double ball = 0.0L;
  for (std::int64_t j = 0; j <= t; ++j) {
    ball += std::exp(static_cast<long double>(log_binomial_coeff(q.n, j)));
  }
  // Find the smallest sequence count whose top-probability mass reaches
  // 1 - eps, then the smallest M with M * ball >= that count.
  const Eigen::VectorXd class_prob = binomial_pmf(q.n, q.p);
  const double target = 1.0 - q.eps;
  double cum = 0.0;
  long double count = 0.0L;
  // The shave before each ceil keeps counts that are integers up to rounding
  // from being bumped one past the boundary.
  constexpr long double kShave = 1.0L - 1e-15L;
  for (std::int64_t step = 0; step <= q.n; ++step) {
    const std::int64_t k = q.p <= 0.5 ? step : q.n - step;
    if (cum + class_prob(k) >= target) {
      const long double log_per_seq = static_cast<long double>(
          k * std::log(q.p) + (q.n - k) * std::log1p(-q.p));
      count += std::ceil(static_cast<long double>(target - cum) * std::exp(-log_per_seq) *
                          kShave);
      break;
    }
    cum += class_prob(k);
    count += std::exp(static_cast<long double>(log_binomial_coeff(q.n, k)));
  }
  const long double m = std::max(1.0L, std::ceil(count / ball * kShave));
  const double log2_m = static_cast<double>(std::log2(m));
  return {log2_m / static_cast<double>(q.n), log2_m, static_cast<double>(m)};
}

BoundBracket bound_bracket(const FBLQuery& q) {
  const RateSearchResult ach = achievability_rate(q);
  const RateSearchResult conv = converse_rate(q);
  return {ach.rate, conv.rate, normal_approx_rate(q), ach.codebook_size, conv.codebook_size};
}

}  // namespace rdlab
