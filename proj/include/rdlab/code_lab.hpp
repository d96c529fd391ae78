#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdlab/types.hpp"

namespace rdlab {

/// A binary word of up to 63 symbols, packed into an integer. The string form
/// reads most significant symbol first, so "001" is the value 1.
struct BinarySequence {
  std::int64_t n;
  std::uint64_t bits;

  static BinarySequence from_string(std::string_view s);
  std::string to_string() const;
  std::int64_t weight() const;
};

/// An (n, M) codebook of distinct reproduction words.
struct Codebook {
  std::int64_t n;
  std::vector<std::uint64_t> words;

  Codebook(std::int64_t n, std::vector<std::uint64_t> words);
  static Codebook from_strings(const std::vector<std::string>& rows);

  std::int64_t size() const { return static_cast<std::int64_t>(words.size()); }
  std::string word_string(std::size_t index) const;
};

struct CodeEvaluation {
  double rate;            // log2(M)/n
  double avg_distortion;  // expected per-symbol Hamming distortion
  // (threshold, P(distortion > threshold)) in input order.
  std::vector<std::pair<double, double>> excess_prob_at;
};

enum class SearchObjective { average, excess };

struct SearchResult {
  Codebook codebook;
  CodeEvaluation evaluation;
};

/// Fraction of disagreeing positions between two equal-length words.
double hamming_per_symbol(const BinarySequence& x, const BinarySequence& y);

/// Index of the closest codeword; ties break to the lowest index.
std::size_t nearest_codeword(const Codebook& cb, const BinarySequence& x);

/// Exact evaluation by enumerating all 2^n source sequences (n <= 24).
CodeEvaluation evaluate_code(double p, const Codebook& cb,
                             const std::vector<double>& thresholds);

/// Exhaustive search over every M-subset of {0,1}^n for the best codebook
/// under the objective. Ties break to the lexicographically smallest sorted
/// codebook. Requires n <= 12 and C(2^n, M) <= 1e8.
SearchResult optimal_code_search(double p, std::int64_t n, std::int64_t M,
                                 SearchObjective objective, double excess_D = 0.0);

/// Monte Carlo excess-distortion frequency under a fresh i.i.d. Bernoulli(q1)
/// codebook per trial. Deterministic for a fixed seed: trial i uses its own
/// generator seeded from (seed, i).
double mc_random_coding(double p, double q1, std::int64_t n, std::int64_t M, double D,
                        std::int64_t trials, std::uint64_t seed);

}  // namespace rdlab
