#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace rdlab {

/// log C(n, k), natural log.
double log_binomial_coeff(std::int64_t n, std::int64_t k);

/// log of the Binomial(n, p) pmf at k; -inf where the mass is zero.
double log_binomial_pmf(std::int64_t n, double p, std::int64_t k);

/// Full Binomial(n, p) pmf as a vector of n+1 probabilities. Uses the
/// multiplicative recurrence at desk scale and switches to the log-gamma
/// path when the recurrence's starting term would underflow.
Eigen::VectorXd binomial_pmf(std::int64_t n, double p);

}  // namespace rdlab
