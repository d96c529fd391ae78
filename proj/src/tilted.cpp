#include "rdlab/tilted.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rdlab/binomial.hpp"

namespace rdlab {

TiltedPair tilted_information(double p, double D) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("tilted_information: p outside (0, 1)");
  }
  const double d_max = std::min(p, 1.0 - p);
  if (!(D >= 0.0 && D < d_max)) {
    throw std::domain_error("tilted_information: D = " + std::to_string(D) +
                            " outside [0, min(p, 1-p))");
  }
  if (D == 0.0) {
    return {-std::log2(1.0 - p), -std::log2(p)};
  }
  const double common = -D * std::log2((1.0 - D) / D);
  return {common + std::log2((1.0 - D) / (1.0 - p)),
          common + std::log2((1.0 - D) / p)};
}

double dispersion(double p, double D) {
  const TiltedPair j = tilted_information(p, D);
  const double gap = j.j1 - j.j0;
  return p * (1.0 - p) * gap * gap;
}

TiltedPMF tilted_pmf(double p, double D, std::int64_t n) {
  if (n < 1) throw std::domain_error("tilted_pmf: n must be >= 1");
  const TiltedPair j = tilted_information(p, D);
  const Eigen::VectorXd weights = binomial_pmf(n, p);

  TiltedPMF out;
  out.n = n;
  out.atoms.reserve(n + 1);
  double mean = 0.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double value = (k * j.j1 + (n - k) * j.j0) / n;
    out.atoms.push_back({value, weights(k)});
    mean += weights(k) * value;
  }
  double var = 0.0;
  for (const TiltedAtom& a : out.atoms) {
    var += a.probability * (a.value - mean) * (a.value - mean);
  }
  out.mean = mean;
  out.variance = var;
  return out;
}

}  // namespace rdlab
