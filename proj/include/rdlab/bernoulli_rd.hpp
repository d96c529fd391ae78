#pragma once

#include "rdlab/types.hpp"

namespace rdlab {

/// Everything the optimization pins down at one (p, D) point:
/// rate, slope, reproduction distribution and both channels.
/// The backward channel is always a BSC(D).
struct OptimalSolution {
  double rate;
  double lambda_star;
  ProbVector q_star;
  TestChannel forward;
  TestChannel backward;
};

/// R(D) = H(p) - H(D) for D < min(p, 1-p); 0 beyond; H(p) at D = 0.
double rate_distortion(double p, double D);

/// Inverse of rate_distortion in D, by bisection on [0, min(p, 1-p)].
double distortion_at_rate(double p, double rate_bits);

/// Slope magnitude of the rate-distortion curve: log2((1-D)/D).
double lambda_star(double D);

/// Optimal reproduction distribution ((1-p-D)/(1-2D), (p-D)/(1-2D)).
ProbVector q_star(double p, double D);

/// Optimal forward test channel for 0 < D < min(p, 1-p).
TestChannel forward_channel(double p, double D);

/// Optimal backward channel: BSC(D) for 0 <= D < 1/2.
TestChannel backward_channel(double D);

/// Assembles the full optimal solution at an interior point.
OptimalSolution optimal_solution(double p, double D);

}  // namespace rdlab
