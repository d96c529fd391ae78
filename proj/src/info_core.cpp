#include "rdlab/info_core.hpp"

#include <cmath>
#include <numbers>

namespace rdlab {

namespace {

// -p * log2(p) with the 0 log 0 = 0 convention.
double neg_p_log2_p(double p) {
  return p > 0.0 ? -p * std::log2(p) : 0.0;
}

// Lower-region rational approximation for the inverse normal cdf
// (Acklam's coefficients), used as the seed for a Newton polish.
double inv_norm_cdf_seed(double prob) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (prob < plow) {
    const double q = std::sqrt(-2.0 * std::log(prob));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (prob > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - prob));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = prob - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p = " + std::to_string(p) + " outside [0, 1]");
  }
  return neg_p_log2_p(p) + neg_p_log2_p(1.0 - p);
}

double entropy(const ProbVector& pmf) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < pmf.size(); ++i) h += neg_p_log2_p(pmf[i]);
  return h;
}

double kl_divergence(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) {
    throw std::domain_error("kl_divergence: length mismatch");
  }
  double kl = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;  // 0 log (0/q) = 0
    if (q[i] <= 0.0) {
      throw std::domain_error("kl_divergence: q has zero mass on the support of p");
    }
    kl += p[i] * std::log2(p[i] / q[i]);
  }
  return kl;
}

ProbVector output_marginal(const ProbVector& source, const TestChannel& channel) {
  if (channel.input_size() != source.size()) {
    throw std::domain_error("output_marginal: channel rows do not match source alphabet");
  }
  return ProbVector(channel.rows().transpose() * source.probs());
}

double mutual_information(const ProbVector& source, const TestChannel& channel) {
  if (channel.input_size() != source.size()) {
    throw std::domain_error("mutual_information: channel rows do not match source alphabet");
  }
  const Eigen::VectorXd marginal = channel.rows().transpose() * source.probs();
  double mi = 0.0;
  for (Eigen::Index x = 0; x < source.size(); ++x) {
    if (source[x] == 0.0) continue;
    for (Eigen::Index y = 0; y < channel.output_size(); ++y) {
      const double w = channel(x, y);
      if (w == 0.0) continue;
      mi += source[x] * w * std::log2(w / marginal(y));
    }
  }
  // Tiny negative values are rounding noise around independence.
  return mi < 0.0 && mi > -1e-15 ? 0.0 : mi;
}

double expected_distortion(const ProbVector& source, const TestChannel& channel,
                           const DistortionMatrix& d) {
  if (channel.input_size() != source.size() || d.source_size() != channel.input_size() ||
      d.repro_size() != channel.output_size()) {
    throw std::domain_error("expected_distortion: dimension mismatch");
  }
  return source.probs().dot((channel.rows().array() * d.entries().array()).rowwise().sum().matrix());
}

double gaussian_q(double x) {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double gaussian_q_inv(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("gaussian_q_inv: eps = " + std::to_string(eps) +
                            " outside (0, 1)");
  }
  // Q(x) = eps is the inverse cdf at 1 - eps.
  double x = inv_norm_cdf_seed(1.0 - eps);
  // Newton steps on Q(x) - eps; two suffice from the seed's 1e-9 accuracy.
  for (int i = 0; i < 3; ++i) {
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    if (pdf == 0.0) break;
    x += (gaussian_q(x) - eps) / pdf;
  }
  return x;
}

}  // namespace rdlab
