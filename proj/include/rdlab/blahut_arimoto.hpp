#pragma once

#include <utility>
#include <vector>

#include "rdlab/types.hpp"

namespace rdlab {

/// One point on (or converging to) the rate-distortion curve.
struct RDPoint {
  double distortion;
  double rate;     // bits per symbol
  double slope_s;  // nats per unit distortion
  bool converged = false;  // true once the producing solve has converged
};

struct BASolverConfig {
  double slope_s = 1.0;     // nats per unit distortion, >= 0
  double tolerance = 1e-12; // absolute rate change in bits
  int max_iterations = 10000;
};

/// Full iteration history of one solve.
struct BATrace {
  std::vector<RDPoint> points;  // one per iteration
  bool converged;
  int iterations_used;
  TestChannel channel;  // final test channel
  ProbVector repro;     // final reproduction marginal

  const RDPoint& final_point() const { return points.back(); }
};

/// Converts a slope in bits per unit distortion to the solver's nats.
double slope_from_lambda_bits(double lambda_bits);

/// One alternating-minimization update: reweight the reproduction marginal by
/// exp(-s d) row-wise into a channel, then recompute the induced marginal.
std::pair<TestChannel, ProbVector> ba_step(const ProbVector& source, const DistortionMatrix& d,
                                           double slope_s, const ProbVector& repro);

/// Iterates ba_step from the uniform reproduction distribution until the rate
/// change drops below config.tolerance or max_iterations is hit.
BATrace ba_solve(const ProbVector& source, const DistortionMatrix& d,
                 const BASolverConfig& config);

/// One converged RDPoint per slope, in input order.
std::vector<RDPoint> ba_sweep(const ProbVector& source, const DistortionMatrix& d,
                              const std::vector<double>& slopes, const BASolverConfig& config);

}  // namespace rdlab
