#include "rdlab/blahut_arimoto.hpp"

#include <cmath>
#include <numbers>

#include "rdlab/info_core.hpp"

namespace rdlab {

namespace {

void check_config(const BASolverConfig& config) {
  if (!(config.slope_s >= 0.0)) throw std::domain_error("ba: slope_s must be >= 0");
  if (!(config.tolerance > 0.0)) throw std::domain_error("ba: tolerance must be > 0");
  if (config.max_iterations < 1) throw std::domain_error("ba: max_iterations must be >= 1");
}

}  // namespace

double slope_from_lambda_bits(double lambda_bits) {
  return lambda_bits * std::numbers::ln2;
}

std::pair<TestChannel, ProbVector> ba_step(const ProbVector& source, const DistortionMatrix& d,
                                           double slope_s, const ProbVector& repro) {
  if (d.source_size() != source.size() || d.repro_size() != repro.size()) {
    throw std::domain_error("ba_step: dimension mismatch");
  }
  if (!(slope_s >= 0.0)) throw std::domain_error("ba_step: slope_s must be >= 0");

  Eigen::MatrixXd weights =
      (-slope_s * d.entries().array()).exp().rowwise() * repro.probs().transpose().array();
  const Eigen::VectorXd z = weights.rowwise().sum();
  for (Eigen::Index x = 0; x < z.size(); ++x) {
    if (!(z(x) > 0.0)) {
      throw std::domain_error("ba_step: all reproduction mass carries infinite penalty for "
                              "source symbol " + std::to_string(x));
    }
  }
  Eigen::MatrixXd rows = weights.array().colwise() / z.array();
  Eigen::VectorXd next = rows.transpose() * source.probs();
  return {TestChannel(std::move(rows)), ProbVector(std::move(next))};
}

BATrace ba_solve(const ProbVector& source, const DistortionMatrix& d,
                 const BASolverConfig& config) {
  check_config(config);
  ProbVector repro(Eigen::VectorXd::Constant(d.repro_size(), 1.0 / d.repro_size()));
  TestChannel channel(Eigen::MatrixXd::Ones(d.source_size(), d.repro_size()) /
                      static_cast<double>(d.repro_size()));

  std::vector<RDPoint> points;
  points.reserve(16);
  bool converged = false;
  int iterations = 0;
  double prev_rate = 0.0;
  while (iterations < config.max_iterations) {
    ++iterations;
    std::tie(channel, repro) = ba_step(source, d, config.slope_s, repro);
    const double rate = mutual_information(source, channel);
    const double distortion = expected_distortion(source, channel, d);
    points.push_back({distortion, rate, config.slope_s, false});
    if (iterations > 1 && std::abs(rate - prev_rate) < config.tolerance) {
      converged = true;
      break;
    }
    prev_rate = rate;
  }
  points.back().converged = converged;
  return BATrace{std::move(points), converged, iterations, std::move(channel),
                 std::move(repro)};
}

std::vector<RDPoint> ba_sweep(const ProbVector& source, const DistortionMatrix& d,
                              const std::vector<double>& slopes, const BASolverConfig& config) {
  if (slopes.empty()) throw std::domain_error("ba_sweep: empty slope list");
  std::vector<RDPoint> out;
  out.reserve(slopes.size());
  for (double s : slopes) {
    if (!(s >= 0.0)) throw std::domain_error("ba_sweep: slopes must be >= 0");
    BASolverConfig c = config;
    c.slope_s = s;
    out.push_back(ba_solve(source, d, c).final_point());
  }
  return out;
}

}  // namespace rdlab
