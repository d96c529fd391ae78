#pragma once

#include <cstdint>

namespace rdlab {

/// One finite-blocklength query: block length n, target distortion D and
/// excess-distortion probability eps for a Bernoulli(p) source.
struct FBLQuery {
  double p;
  double D;
  double eps;
  std::int64_t n;
};

/// Result of a minimum-codebook-size search. The codebook size is carried in
/// log2 form because it can exceed any integer type; `codebook_size` is the
/// rounded 2^log2_M and may overflow to infinity for very large n.
struct RateSearchResult {
  double rate;           // bits per symbol, log2(M)/n
  double log2_M;
  double codebook_size;  // 2^log2_M
};

/// Achievability and converse rates bracketing R(n, D, eps), together with
/// the normal approximation.
struct BoundBracket {
  double achievability_rate;
  double converse_rate;
  double normal_approx_rate;
  double achievability_M;
  double converse_M;
};

/// R(D) + sqrt(V(D)/n) Qinv(eps), without the O(log n / n) remainder.
/// Rejects V(D) = 0 with eps != 1/2 (the expansion does not apply there).
double normal_approx_rate(const FBLQuery& q);

/// Block length needed to come within delta_rate of R(D):
/// ceil(V(D) Qinv(eps)^2 / delta_rate^2).
std::int64_t required_blocklength(double p, double D, double eps, double delta_rate);

/// Probability that one codeword drawn i.i.d. Bernoulli(q1) lands within
/// per-symbol distortion D of a fixed sequence with k ones:
/// P(Binomial(k, 1-q1) + Binomial(n-k, q1) <= floor(n D)), by exact convolution.
double ball_hit_prob(double q1, std::int64_t n, std::int64_t k, double D);

/// Random-coding upper bound on the best excess-distortion probability with M
/// codewords drawn i.i.d. from the optimal reproduction distribution.
/// M may be any real count >= 1; powers are taken in the log domain.
double achievability_epsilon(double p, double D, std::int64_t n, double M);

/// Sphere-covering counting lower bound on the excess-distortion probability
/// of every (n, M) code: M balls of radius floor(n D) cover at most M V_n(D)
/// sequences, taken in decreasing probability order.
double converse_epsilon(double p, double D, std::int64_t n, double M);

/// Smallest M whose random-coding bound meets eps, by doubling then binary
/// search; exact over integers while M fits one, on log2(M) beyond.
RateSearchResult achievability_rate(const FBLQuery& q);

/// Smallest M the counting converse cannot rule out at eps.
RateSearchResult converse_rate(const FBLQuery& q);

/// All three rates at once.
BoundBracket bound_bracket(const FBLQuery& q);

}  // namespace rdlab
