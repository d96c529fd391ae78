#include "rdlab/binomial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rdlab {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_binomial_coeff(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("log_binomial_coeff: need 0 <= k <= n");
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_binomial_pmf(std::int64_t n, double p, std::int64_t k) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("log_binomial_pmf: p outside [0, 1]");
  if (n < 0 || k < 0 || k > n) throw std::domain_error("log_binomial_pmf: need 0 <= k <= n");
  if (p == 0.0) return k == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return k == n ? 0.0 : kNegInf;
  return log_binomial_coeff(n, k) + k * std::log(p) + (n - k) * std::log1p(-p);
}

Eigen::VectorXd binomial_pmf(std::int64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial_pmf: p outside [0, 1]");
  if (n < 0) throw std::domain_error("binomial_pmf: n negative");
  Eigen::VectorXd pmf = Eigen::VectorXd::Zero(n + 1);
  if (p == 0.0) {
    pmf(0) = 1.0;
    return pmf;
  }
  if (p == 1.0) {
    pmf(n) = 1.0;
    return pmf;
  }
  const double log_w0 = n * std::log1p(-p);
  if (n <= 10000 && log_w0 > -690.0) {
    // w_{k+1} = w_k * (n-k)/(k+1) * p/(1-p); stays within double range since
    // the sequence is unimodal with peak <= 1.
    const double ratio = p / (1.0 - p);
    double w = std::exp(log_w0);
    pmf(0) = w;
    for (std::int64_t k = 0; k < n; ++k) {
      w *= static_cast<double>(n - k) / static_cast<double>(k + 1) * ratio;
      pmf(k + 1) = w;
    }
    return pmf;
  }
  for (std::int64_t k = 0; k <= n; ++k) {
    pmf(k) = std::exp(log_binomial_pmf(n, p, k));
  }
  return pmf;
}

}  // namespace rdlab
