#pragma once

#include <cstdint>
#include <vector>

namespace rdlab {

/// The two d-tilted information values of a Bernoulli(p) source at target
/// distortion D, in bits. Their source-weighted mean is R(D) and
/// j1 - j0 = log2((1-p)/p) regardless of D.
struct TiltedPair {
  double j0;
  double j1;
};

struct TiltedAtom {
  double value;        // bits
  double probability;  // binomial weight
};

/// Exact distribution of the blockwise-average tilted information over the
/// n+1 weight classes of a length-n block.
struct TiltedPMF {
  std::vector<TiltedAtom> atoms;  // index k = number of ones
  std::int64_t n;
  double mean;      // equals R(D)
  double variance;  // equals V(D)/n
};

/// Closed-form tilted information; D = 0 yields the self-informations.
TiltedPair tilted_information(double p, double D);

/// Source dispersion V(D) = p(1-p) (j1 - j0)^2 in bits^2.
double dispersion(double p, double D);

/// Exact pmf of the per-symbol average tilted information over a block of n.
TiltedPMF tilted_pmf(double p, double D, std::int64_t n);

}  // namespace rdlab
