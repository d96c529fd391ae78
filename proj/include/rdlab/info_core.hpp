#pragma once

#include "rdlab/types.hpp"

namespace rdlab {

/// Binary entropy H(p) in bits, with 0 log 0 = 0 at the endpoints.
double binary_entropy(double p);

/// Shannon entropy of a pmf in bits. Zero-probability entries contribute 0.
double entropy(const ProbVector& pmf);

/// Kullback-Leibler divergence sum_i p(i) log2(p(i)/q(i)) in bits.
/// Requires q(i) > 0 wherever p(i) > 0.
double kl_divergence(const ProbVector& p, const ProbVector& q);

/// Output marginal of `source` pushed through `channel`.
ProbVector output_marginal(const ProbVector& source, const TestChannel& channel);

/// Mutual information I(X; Xhat) in bits of the joint distribution
/// source(x) * channel(xhat | x).
double mutual_information(const ProbVector& source, const TestChannel& channel);

/// Expected per-symbol distortion sum_{x,xhat} source(x) channel(xhat|x) d(x,xhat).
double expected_distortion(const ProbVector& source, const TestChannel& channel,
                           const DistortionMatrix& d);

/// Upper tail Q(x) of the standard normal distribution.
double gaussian_q(double x);

/// Inverse of the Gaussian Q-function: the x with Q(x) = eps, eps in (0, 1).
/// Accurate to better than 1e-10.
double gaussian_q_inv(double eps);

}  // namespace rdlab
