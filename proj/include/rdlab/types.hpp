#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <stdexcept>
#include <string>

namespace rdlab {

/// Absolute tolerance on probability sums. Inputs whose sum deviates by less
/// than this are renormalized; anything worse is rejected.
inline constexpr double kProbSumTol = 1e-12;

/// Thrown when an enumeration or exact-computation limit is exceeded
/// (distinct from domain errors so callers can map it to a different
/// exit status).
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite probability mass function. Entries are clamped to [0, 1] and the
/// vector is renormalized so it sums to 1 exactly in double arithmetic.
class ProbVector {
 public:
  explicit ProbVector(Eigen::VectorXd probs);
  ProbVector(std::initializer_list<double> probs)
      : ProbVector(Eigen::Map<const Eigen::VectorXd>(probs.begin(),
                                                     static_cast<Eigen::Index>(probs.size()))) {}

  /// The two-point pmf (1-p, p) of a Bernoulli(p) source.
  static ProbVector bernoulli(double p);

  const Eigen::VectorXd& probs() const { return probs_; }
  Eigen::Index size() const { return probs_.size(); }
  double operator[](Eigen::Index i) const { return probs_(i); }

 private:
  Eigen::VectorXd probs_;
};

/// A row-stochastic conditional distribution p(xhat | x): one row per source
/// symbol, one column per reproduction symbol.
class TestChannel {
 public:
  explicit TestChannel(Eigen::MatrixXd rows);

  /// Binary symmetric channel with the given crossover probability.
  static TestChannel bsc(double crossover);

  const Eigen::MatrixXd& rows() const { return rows_; }
  Eigen::Index input_size() const { return rows_.rows(); }
  Eigen::Index output_size() const { return rows_.cols(); }
  double operator()(Eigen::Index x, Eigen::Index xhat) const { return rows_(x, xhat); }

  /// Row x as a ProbVector.
  ProbVector row(Eigen::Index x) const;

 private:
  Eigen::MatrixXd rows_;
};

/// Per-symbol distortion matrix d(x, xhat) >= 0.
class DistortionMatrix {
 public:
  explicit DistortionMatrix(Eigen::MatrixXd entries);

  /// Square Hamming distortion: 0 on the diagonal, 1 elsewhere.
  static DistortionMatrix hamming(Eigen::Index alphabet_size);

  const Eigen::MatrixXd& entries() const { return entries_; }
  Eigen::Index source_size() const { return entries_.rows(); }
  Eigen::Index repro_size() const { return entries_.cols(); }
  double operator()(Eigen::Index x, Eigen::Index xhat) const { return entries_(x, xhat); }

 private:
  Eigen::MatrixXd entries_;
};

}  // namespace rdlab
