#include "rdlab/bernoulli_rd.hpp"

#include <algorithm>
#include <cmath>

#include "rdlab/info_core.hpp"

namespace rdlab {

namespace {

void check_bias(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error(std::string(what) + ": p = " + std::to_string(p) +
                            " outside (0, 1)");
  }
}

}  // namespace

double rate_distortion(double p, double D) {
  check_bias(p, "rate_distortion");
  if (!(D >= 0.0)) {
    throw std::domain_error("rate_distortion: D = " + std::to_string(D) + " negative");
  }
  const double d_max = std::min(p, 1.0 - p);
  if (D >= d_max) return 0.0;
  return binary_entropy(p) - binary_entropy(D);
}

double distortion_at_rate(double p, double rate_bits) {
  check_bias(p, "distortion_at_rate");
  const double h = binary_entropy(p);
  if (!(rate_bits >= 0.0 && rate_bits <= h)) {
    throw std::domain_error("distortion_at_rate: rate outside [0, H(p)]");
  }
  if (rate_bits == 0.0) return std::min(p, 1.0 - p);
  if (rate_bits == h) return 0.0;
  // R(D) is strictly decreasing on [0, min(p, 1-p)], so bisection is safe.
  double lo = 0.0, hi = std::min(p, 1.0 - p);
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (rate_distortion(p, mid) > rate_bits) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double lambda_star(double D) {
  if (!(D > 0.0 && D < 1.0)) {
    throw std::domain_error("lambda_star: D = " + std::to_string(D) + " outside (0, 1)");
  }
  return std::log2((1.0 - D) / D);
}

ProbVector q_star(double p, double D) {
  check_bias(p, "q_star");
  const double d_max = std::min(p, 1.0 - p);
  if (!(D >= 0.0 && D <= d_max) || !(D < 0.5)) {
    throw std::domain_error("q_star: D = " + std::to_string(D) +
                            " outside [0, min(p, 1-p)]");
  }
  const double denom = 1.0 - 2.0 * D;
  Eigen::VectorXd q(2);
  q << (1.0 - p - D) / denom, (p - D) / denom;
  // Boundary D = min(p, 1-p) gives an exact point mass up to rounding.
  q = q.cwiseMax(0.0);
  return ProbVector(std::move(q));
}

TestChannel forward_channel(double p, double D) {
  check_bias(p, "forward_channel");
  const double d_max = std::min(p, 1.0 - p);
  if (!(D > 0.0 && D < d_max)) {
    throw std::domain_error("forward_channel: D = " + std::to_string(D) +
                            " outside (0, min(p, 1-p))");
  }
  const ProbVector q = q_star(p, D);
  Eigen::MatrixXd rows(2, 2);
  rows << q[0] * (1.0 - D) / (1.0 - p), q[1] * D / (1.0 - p),
          q[0] * D / p,                 q[1] * (1.0 - D) / p;
  return TestChannel(std::move(rows));
}

TestChannel backward_channel(double D) {
  if (!(D >= 0.0 && D < 0.5)) {
    throw std::domain_error("backward_channel: D = " + std::to_string(D) +
                            " outside [0, 1/2)");
  }
  return TestChannel::bsc(D);
}

OptimalSolution optimal_solution(double p, double D) {
  return OptimalSolution{rate_distortion(p, D), lambda_star(D), q_star(p, D),
                         forward_channel(p, D), backward_channel(D)};
}

}  // namespace rdlab
