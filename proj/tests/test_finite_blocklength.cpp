#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rdlab/bernoulli_rd.hpp"
#include "rdlab/code_lab.hpp"
#include "rdlab/finite_blocklength.hpp"
#include "rdlab/info_core.hpp"
#include "rdlab/tilted.hpp"
#include "rdlab/types.hpp"

using namespace rdlab;

TEST_CASE("normal_approx_rate examples") {
  for (std::int64_t n : {std::int64_t{10}, std::int64_t{100}, std::int64_t{100000}}) {
    CHECK(normal_approx_rate({0.3, 0.1, 0.5, n}) == rate_distortion(0.3, 0.1));
  }
  // Frozen from a 40-digit evaluation of R(D) + sqrt(V/n) Qinv(eps).
  CHECK(normal_approx_rate({0.3, 0.1, 0.1, 100}) ==
        doctest::Approx(0.48408405401485685).epsilon(1e-9));
  CHECK(normal_approx_rate({0.3, 0.1, 0.1, 2000}) ==
        doctest::Approx(0.42834775777967655).epsilon(1e-9));
  // Zero dispersion outside eps = 1/2 is rejected.
  CHECK_THROWS_AS(normal_approx_rate({0.5, 0.1, 0.1, 100}), std::domain_error);
  CHECK(normal_approx_rate({0.5, 0.1, 0.5, 100}) == rate_distortion(0.5, 0.1));
  CHECK_THROWS_AS(normal_approx_rate({0.3, 0.3, 0.1, 100}), std::domain_error);
  CHECK_THROWS_AS(normal_approx_rate({0.3, 0.1, 0.0, 100}), std::domain_error);
  CHECK_THROWS_AS(normal_approx_rate({0.3, 0.1, 0.1, 0}), std::domain_error);
}

TEST_CASE("required_blocklength examples") {
  CHECK(required_blocklength(0.3, 0.1, 0.1, 0.01) == 5154);
  CHECK(required_blocklength(0.5, 0.1, 0.1, 0.02) == 0);
  CHECK(required_blocklength(0.3, 0.1, 0.5, 0.02) == 0);
  CHECK_THROWS_AS(required_blocklength(0.3, 0.1, 0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(required_blocklength(0.3, 0.1, 0.1, -1.0), std::domain_error);
}

TEST_CASE("ball_hit_prob examples") {
  CHECK(ball_hit_prob(0.3, 10, 4, 1.0) == 1.0);
  CHECK(ball_hit_prob(0.3, 10, 4, 1.5) == 1.0);
  CHECK(ball_hit_prob(0.25, 1, 1, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ball_hit_prob(0.25, 2, 0, 0.5) == doctest::Approx(0.9375).epsilon(1e-15));
  CHECK_THROWS_AS(ball_hit_prob(1.5, 10, 4, 0.1), std::domain_error);
  CHECK_THROWS_AS(ball_hit_prob(0.3, 10, 11, 0.1), std::domain_error);
}

TEST_CASE("ball_hit_prob agrees with brute-force enumeration") {
  for (std::int64_t n : {std::int64_t{4}, std::int64_t{7}, std::int64_t{10}}) {
    for (double q1 : {0.25, 0.5, 0.73}) {
      for (double D : {0.0, 0.15, 0.3, 0.6}) {
        for (std::int64_t k = 0; k <= n; k += 2) {
          CHECK(ball_hit_prob(q1, n, k, D) ==
                doctest::Approx(oracle::naive_ball_hit(q1, n, k, D)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("achievability_epsilon examples") {
  CHECK(achievability_epsilon(0.3, 1.0, 10, 1.0) == 0.0);
  CHECK(achievability_epsilon(0.3, 2.0, 10, 5.0) == 0.0);
  CHECK(achievability_epsilon(0.5, 0.0, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(achievability_epsilon(0.3, 0.1, 10, 2.0) <= achievability_epsilon(0.3, 0.1, 10, 1.0));
  CHECK_THROWS_AS(achievability_epsilon(0.3, 0.4, 10, 1.0), std::domain_error);  // D > min(p,1-p)
  CHECK_THROWS_AS(achievability_epsilon(0.3, -0.1, 10, 1.0), std::domain_error);
  CHECK_THROWS_AS(achievability_epsilon(0.3, 0.1, 10, 0.5), std::domain_error);
}

TEST_CASE("achievability_epsilon agrees with brute-force enumeration") {
  for (std::int64_t n : {std::int64_t{4}, std::int64_t{8}}) {
    for (double D : {0.1, 0.24}) {
      for (std::int64_t M : {std::int64_t{1}, std::int64_t{3}, std::int64_t{16}}) {
        CHECK(achievability_epsilon(0.3, D, n, static_cast<double>(M)) ==
              doctest::Approx(oracle::naive_achievability_epsilon(0.3, D, n, M))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("achievability_epsilon is monotone in M and D") {
  double prev = 1.0;
  for (double M : {1.0, 2.0, 8.0, 64.0, 1024.0}) {
    const double e = achievability_epsilon(0.3, 0.1, 20, M);
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
  prev = 1.0;
  for (double D : {0.02, 0.08, 0.15, 0.25}) {
    const double e = achievability_epsilon(0.3, D, 20, 8.0);
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
}

TEST_CASE("converse_epsilon examples") {
  CHECK(converse_epsilon(0.5, 0.25, 2, 4.0) == 0.0);
  CHECK(converse_epsilon(0.5, 0.25, 2, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(converse_epsilon(0.3, 1.0 / 3.0, 3, 4.0) == 0.0);
  CHECK_THROWS_AS(converse_epsilon(0.3, 0.1, 10, 0.0), std::domain_error);
}

TEST_CASE("converse_epsilon is monotone in M and D") {
  double prev = 1.0;
  for (double M : {1.0, 2.0, 4.0, 32.0, 1024.0}) {
    const double e = converse_epsilon(0.3, 0.1, 12, M);
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
  prev = 1.0;
  for (double D : {0.05, 0.1, 0.2, 0.4}) {
    const double e = converse_epsilon(0.3, D, 12, 3.0);
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
}

TEST_CASE("achievability_rate minimality contract") {
  const FBLQuery q{0.3, 0.1, 0.3, 12};
  const RateSearchResult r = achievability_rate(q);
  const auto m = static_cast<std::int64_t>(r.codebook_size);
  CHECK(achievability_epsilon(q.p, q.D, q.n, static_cast<double>(m)) <= q.eps);
  if (m > 1) {
    CHECK(achievability_epsilon(q.p, q.D, q.n, static_cast<double>(m - 1)) > q.eps);
  }
  CHECK(r.rate == doctest::Approx(std::log2(static_cast<double>(m)) / 12.0).epsilon(1e-12));
}

TEST_CASE("achievability_rate sits above the normal approximation at n = 100") {
  const FBLQuery q{0.3, 0.1, 0.1, 100};
  CHECK(achievability_rate(q).rate >= normal_approx_rate(q) - 0.02);
}

TEST_CASE("bracket rates shrink with n") {
  const RateSearchResult a100 = achievability_rate({0.3, 0.1, 0.1, 100});
  const RateSearchResult a500 = achievability_rate({0.3, 0.1, 0.1, 500});
  CHECK(a500.rate < a100.rate);
  const RateSearchResult c100 = converse_rate({0.3, 0.1, 0.1, 100});
  const RateSearchResult c500 = converse_rate({0.3, 0.1, 0.1, 500});
  CHECK(c500.rate < c100.rate);
  CHECK(c100.rate <= a100.rate);
  CHECK(c500.rate <= a500.rate);
}

TEST_CASE("achievability gap to the Shannon limit shrinks at the CLT rate") {
  const double shannon = rate_distortion(0.3, 0.1);
  const double v = dispersion(0.3, 0.1);
  for (std::int64_t n : {std::int64_t{100}, std::int64_t{500}, std::int64_t{1500}}) {
    const double gap = achievability_rate({0.3, 0.1, 0.1, n}).rate - shannon;
    CHECK(gap <= 2.0 * std::sqrt(v / static_cast<double>(n)) * gaussian_q_inv(0.1) + 0.05);
    CHECK(gap >= 0.0);
  }
}

TEST_CASE("converse_rate pins the toy case exactly") {
  const RateSearchResult r = converse_rate({0.5, 0.25, 0.5, 2});
  CHECK(r.codebook_size == 2.0);
  CHECK(r.rate == 0.5);
  // Below eps = 0.75 a single codeword cannot cover half the mass.
  CHECK(converse_epsilon(0.5, 0.25, 2, 1.0) == doctest::Approx(0.75).epsilon(1e-15));
  // Exhaustive search over real codes agrees: best M = 2 excess is 0.5,
  // best M = 1 excess is 0.75.
  const SearchResult two = optimal_code_search(0.5, 2, 2, SearchObjective::excess, 0.25);
  CHECK(two.evaluation.excess_prob_at.front().second == doctest::Approx(0.5).epsilon(1e-15));
  const SearchResult one = optimal_code_search(0.5, 2, 1, SearchObjective::excess, 0.25);
  CHECK(one.evaluation.excess_prob_at.front().second == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("tolerating near-certain failure needs almost no rate") {
  const RateSearchResult r = converse_rate({0.3, 0.1, 0.999, 50});
  CHECK(r.rate <= 0.1);
}

TEST_CASE("all three rates are non-increasing in eps") {
  double prev_a = 2.0, prev_c = 2.0, prev_n = 2.0;
  for (double eps : {0.05, 0.1, 0.2, 0.4, 0.6}) {
    const FBLQuery q{0.3, 0.1, eps, 200};
    const double a = achievability_rate(q).rate;
    const double c = converse_rate(q).rate;
    const double na = normal_approx_rate(q);
    CHECK(a <= prev_a + 1e-12);
    CHECK(c <= prev_c + 1e-12);
    CHECK(na <= prev_n + 1e-12);
    prev_a = a;
    prev_c = c;
    prev_n = na;
  }
}

TEST_CASE("exact bounds reject block lengths past the supported cap") {
  CHECK_THROWS_AS(achievability_rate({0.3, 0.1, 0.1, 4001}), capacity_error);
  CHECK_THROWS_AS(converse_rate({0.3, 0.1, 0.1, 5000}), capacity_error);
  CHECK_THROWS_AS(ball_hit_prob(0.25, 5000, 10, 0.1), capacity_error);
  CHECK_NOTHROW(normal_approx_rate({0.3, 0.1, 0.1, 1000000}));
}

TEST_CASE("bound_bracket is ordered") {
  const BoundBracket b = bound_bracket({0.3, 0.1, 0.1, 200});
  CHECK(b.converse_rate <= b.achievability_rate);
  CHECK(b.normal_approx_rate >= b.converse_rate - 0.02);
  CHECK(b.normal_approx_rate <= b.achievability_rate + 0.02);
  CHECK(b.achievability_M >= b.converse_M);
}
