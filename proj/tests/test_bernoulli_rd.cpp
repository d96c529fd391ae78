#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rdlab/bernoulli_rd.hpp"
#include "rdlab/info_core.hpp"

using namespace rdlab;

TEST_CASE("rate_distortion examples") {
  CHECK(rate_distortion(0.5, 0.25) == doctest::Approx(0.18872187554086714).epsilon(1e-12));
  CHECK(rate_distortion(0.3, 0.081) == doctest::Approx(0.47559791093688289).epsilon(1e-12));
  CHECK(rate_distortion(0.3, 0.3) == 0.0);
  CHECK(rate_distortion(0.3, 0.5) == 0.0);
  CHECK(rate_distortion(0.3, 0.1) == binary_entropy(0.3) - binary_entropy(0.1));
  CHECK(rate_distortion(0.3, 0.0) == binary_entropy(0.3));
  CHECK_THROWS_AS(rate_distortion(0.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(rate_distortion(1.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(rate_distortion(0.3, -0.01), std::domain_error);
}

TEST_CASE("distortion_at_rate examples and round trip") {
  CHECK(distortion_at_rate(0.3, 0.0) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(distortion_at_rate(0.3, binary_entropy(0.3)) == 0.0);
  CHECK(distortion_at_rate(0.5, 0.18872187554086714) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK_THROWS_AS(distortion_at_rate(0.3, -0.1), std::domain_error);
  CHECK_THROWS_AS(distortion_at_rate(0.3, 1.0), std::domain_error);

  for (double p : {0.2, 0.3, 0.5, 0.7}) {
    for (double frac : {0.1, 0.4, 0.9}) {
      const double D = std::min(p, 1.0 - p) * frac;
      CHECK(distortion_at_rate(p, rate_distortion(p, D)) == doctest::Approx(D).epsilon(1e-9));
    }
  }
}

TEST_CASE("lambda_star examples") {
  CHECK(lambda_star(0.5) == 0.0);
  CHECK(lambda_star(0.25) == doctest::Approx(1.5849625007211562).epsilon(1e-14));
  CHECK(lambda_star(0.1) == doctest::Approx(3.1699250014423126).epsilon(1e-14));
  CHECK_THROWS_AS(lambda_star(0.0), std::domain_error);
  CHECK_THROWS_AS(lambda_star(1.0), std::domain_error);
}

TEST_CASE("q_star examples") {
  const ProbVector q = q_star(0.3, 0.1);
  CHECK(q[0] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(q[1] == doctest::Approx(0.25).epsilon(1e-14));
  for (double D : {0.05, 0.2, 0.4}) {
    const ProbVector qq = q_star(0.5, D);
    CHECK(qq[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(qq[1] == doctest::Approx(0.5).epsilon(1e-14));
  }
  const ProbVector boundary = q_star(0.3, 0.3);
  CHECK(boundary[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(boundary[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(q_star(0.3, 0.31), std::domain_error);
}

TEST_CASE("forward_channel examples") {
  const TestChannel fwd = forward_channel(0.3, 0.1);
  CHECK(fwd(0, 0) == doctest::Approx(27.0 / 28.0).epsilon(1e-13));
  CHECK(fwd(0, 1) == doctest::Approx(1.0 / 28.0).epsilon(1e-13));
  CHECK(fwd(1, 0) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(fwd(1, 1) == doctest::Approx(0.75).epsilon(1e-13));

  for (double D : {0.05, 0.2, 0.45}) {
    const TestChannel bsc = forward_channel(0.5, D);
    CHECK(bsc(0, 0) == doctest::Approx(1.0 - D).epsilon(1e-13));
    CHECK(bsc(0, 1) == doctest::Approx(D).epsilon(1e-13));
    CHECK(bsc(1, 0) == doctest::Approx(D).epsilon(1e-13));
  }

  for (double p : {0.2, 0.4, 0.7}) {
    const TestChannel ch = forward_channel(p, 0.1);
    CHECK(ch.rows().row(0).sum() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ch.rows().row(1).sum() == doctest::Approx(1.0).epsilon(1e-14));
  }

  CHECK_THROWS_AS(forward_channel(0.3, 0.0), std::domain_error);
  CHECK_THROWS_AS(forward_channel(0.3, 0.3), std::domain_error);
}

TEST_CASE("backward_channel examples") {
  const TestChannel b = backward_channel(0.1);
  CHECK(b(0, 0) == 0.9);
  CHECK(b(0, 1) == 0.1);
  CHECK(b(1, 0) == 0.1);
  CHECK(b(1, 1) == 0.9);
  const TestChannel id = backward_channel(0.0);
  CHECK(id(0, 0) == 1.0);
  CHECK(id(0, 1) == 0.0);
  const TestChannel q = backward_channel(0.25);
  CHECK(q(0, 1) == 0.25);
  CHECK_THROWS_AS(backward_channel(0.5), std::domain_error);
  CHECK_THROWS_AS(backward_channel(-0.01), std::domain_error);
}

TEST_CASE("R(D) is convex and non-increasing") {
  for (double p : {0.2, 0.3, 0.5}) {
    const double d_max = std::min(p, 1.0 - p);
    double prev = rate_distortion(p, 0.0);
    for (int i = 1; i <= 60; ++i) {
      const double D = d_max * i / 60.0;
      const double r = rate_distortion(p, D);
      CHECK(r <= prev + 1e-12);
      prev = r;
    }
    for (int i = 1; i <= 29; ++i) {
      const double d1 = d_max * i / 30.0 * 0.5;
      const double d2 = d_max * (i + 1) / 30.0 * 0.5;
      CHECK(rate_distortion(p, 0.5 * (d1 + d2)) <=
            0.5 * (rate_distortion(p, d1) + rate_distortion(p, d2)) + 1e-12);
    }
  }
}

TEST_CASE("lambda_star equals minus the slope of R(D)") {
  const double h = 1e-6;
  for (double p : {0.3, 0.4}) {
    for (double D : {0.05, 0.1, 0.2}) {
      const double slope = (rate_distortion(p, D - h) - rate_distortion(p, D + h)) / (2.0 * h);
      CHECK(std::abs(slope - lambda_star(D)) <= 1e-5);
    }
  }
}

TEST_CASE("Bayes consistency of forward, backward, and q_star") {
  for (double p : {0.2, 0.3, 0.5, 0.8}) {
    for (double frac : {0.2, 0.5, 0.9}) {
      const double D = std::min(p, 1.0 - p) * frac;
      const OptimalSolution sol = optimal_solution(p, D);
      const ProbVector src = ProbVector::bernoulli(p);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          CHECK(src[x] * sol.forward(x, y) ==
                doctest::Approx(sol.q_star[y] * sol.backward(y, x)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("optimal channel meets the distortion budget exactly") {
  const DistortionMatrix hamming = DistortionMatrix::hamming(2);
  for (double p : {0.2, 0.3, 0.45, 0.7}) {
    for (double frac : {0.1, 0.5, 0.95}) {
      const double D = std::min(p, 1.0 - p) * frac;
      CHECK(expected_distortion(ProbVector::bernoulli(p), forward_channel(p, D), hamming) ==
            doctest::Approx(D).epsilon(1e-12));
    }
  }
}

TEST_CASE("conditional entropy at the optimum equals H(D)") {
  for (double p : {0.25, 0.3, 0.6}) {
    for (double frac : {0.25, 0.5, 0.8}) {
      const double D = std::min(p, 1.0 - p) * frac;
      const TestChannel fwd = forward_channel(p, D);
      const ProbVector src = ProbVector::bernoulli(p);
      const Eigen::VectorXd marg = fwd.rows().transpose() * src.probs();
      double cond = 0.0;
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const double joint = src[x] * fwd(x, y);
          if (joint > 0.0) cond -= joint * std::log2(joint / marg(y));
        }
      }
      CHECK(cond == doctest::Approx(binary_entropy(D)).epsilon(1e-12));
    }
  }
}

TEST_CASE("R(D) is symmetric in the source bias") {
  // 1 - (1 - p) is not bit-identical to p, so compare up to rounding.
  for (double p : {0.1, 0.25, 0.4}) {
    for (double frac : {0.2, 0.6, 0.99}) {
      const double D = std::min(p, 1.0 - p) * frac;
      CHECK(rate_distortion(p, D) ==
            doctest::Approx(rate_distortion(1.0 - p, D)).epsilon(1e-13));
    }
  }
}
