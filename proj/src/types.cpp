#include "rdlab/types.hpp"

#include <cmath>

namespace rdlab {

namespace {

// Entries may carry rounding noise from upstream arithmetic; anything beyond
// the sum tolerance is a caller bug.
void check_entries(const Eigen::VectorXd& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v(i);
    if (!std::isfinite(x) || x < -kProbSumTol || x > 1.0 + kProbSumTol) {
      throw std::domain_error(std::string(what) + ": entry " + std::to_string(i) +
                              " = " + std::to_string(x) + " outside [0, 1]");
    }
  }
}

Eigen::VectorXd normalize_pmf(Eigen::VectorXd v, const char* what) {
  if (v.size() == 0) throw std::domain_error(std::string(what) + ": empty");
  check_entries(v, what);
  v = v.cwiseMax(0.0).cwiseMin(1.0);
  const double sum = v.sum();
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw std::domain_error(std::string(what) + ": entries sum to " + std::to_string(sum) +
                            ", not 1");
  }
  return v / sum;
}

}  // namespace

ProbVector::ProbVector(Eigen::VectorXd probs)
    : probs_(normalize_pmf(std::move(probs), "ProbVector")) {}

ProbVector ProbVector::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("ProbVector::bernoulli: p = " + std::to_string(p) +
                            " outside [0, 1]");
  }
  Eigen::VectorXd v(2);
  v << 1.0 - p, p;
  return ProbVector(std::move(v));
}

TestChannel::TestChannel(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.cols() == 0) {
    throw std::domain_error("TestChannel: empty matrix");
  }
  for (Eigen::Index x = 0; x < rows_.rows(); ++x) {
    rows_.row(x) = normalize_pmf(rows_.row(x).transpose(), "TestChannel row").transpose();
  }
}

TestChannel TestChannel::bsc(double crossover) {
  if (!(crossover >= 0.0 && crossover <= 1.0)) {
    throw std::domain_error("TestChannel::bsc: crossover outside [0, 1]");
  }
  Eigen::MatrixXd m(2, 2);
  m << 1.0 - crossover, crossover, crossover, 1.0 - crossover;
  return TestChannel(std::move(m));
}

ProbVector TestChannel::row(Eigen::Index x) const {
  return ProbVector(rows_.row(x).transpose());
}

DistortionMatrix::DistortionMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw std::domain_error("DistortionMatrix: empty matrix");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      const double d = entries_(i, j);
      if (!std::isfinite(d) || d < 0.0) {
        throw std::domain_error("DistortionMatrix: negative or non-finite entry");
      }
    }
  }
}

DistortionMatrix DistortionMatrix::hamming(Eigen::Index alphabet_size) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(alphabet_size, alphabet_size);
  m.diagonal().setZero();
  return DistortionMatrix(std::move(m));
}

}  // namespace rdlab
