#include "rdlab/code_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "rdlab/binomial.hpp"

namespace rdlab {

namespace {

constexpr std::int64_t kMaxSequenceBits = 63;
constexpr std::int64_t kMaxEvalBits = 24;
constexpr std::int64_t kMaxSearchBits = 12;
constexpr double kMaxSearchCombinations = 1e8;

void check_length(std::int64_t n, const char* what) {
  if (n < 1 || n > kMaxSequenceBits) {
    throw std::domain_error(std::string(what) + ": length " + std::to_string(n) +
                            " outside [1, " + std::to_string(kMaxSequenceBits) + "]");
  }
}

// Probability of each Hamming weight class for sequences of length n.
std::vector<double> weight_probs(double p, std::int64_t n) {
  std::vector<double> w(n + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    w[k] = std::pow(p, static_cast<double>(k)) * std::pow(1.0 - p, static_cast<double>(n - k));
  }
  return w;
}

std::int64_t min_distance(const std::vector<std::uint64_t>& words, std::uint64_t x) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t c : words) {
    best = std::min<std::int64_t>(best, std::popcount(x ^ c));
  }
  return best;
}

// Uniform double in [0, 1) from the top 53 bits; keeps the draw sequence
// independent of the standard library's distribution implementations.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

BinarySequence BinarySequence::from_string(std::string_view s) {
  check_length(static_cast<std::int64_t>(s.size()), "BinarySequence");
  std::uint64_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::domain_error("BinarySequence: symbols must be 0 or 1");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return {static_cast<std::int64_t>(s.size()), bits};
}

std::string BinarySequence::to_string() const {
  std::string s(static_cast<std::size_t>(n), '0');
  for (std::int64_t i = 0; i < n; ++i) {
    if ((bits >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::int64_t BinarySequence::weight() const { return std::popcount(bits); }

Codebook::Codebook(std::int64_t n_, std::vector<std::uint64_t> words_)
    : n(n_), words(std::move(words_)) {
  check_length(n, "Codebook");
  if (words.empty()) throw std::domain_error("Codebook: needs at least one codeword");
  const std::uint64_t limit = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(words.size()) > limit) {
    throw std::domain_error("Codebook: more codewords than sequences");
  }
  for (std::uint64_t w : words) {
    if (w >= limit) throw std::domain_error("Codebook: codeword wider than n symbols");
  }
  std::vector<std::uint64_t> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::domain_error("Codebook: duplicate codeword");
  }
}

Codebook Codebook::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::domain_error("Codebook: needs at least one codeword");
  std::vector<std::uint64_t> words;
  words.reserve(rows.size());
  const std::int64_t n = static_cast<std::int64_t>(rows.front().size());
  for (const std::string& r : rows) {
    const BinarySequence seq = BinarySequence::from_string(r);
    if (seq.n != n) throw std::domain_error("Codebook: codeword lengths differ");
    words.push_back(seq.bits);
  }
  return Codebook(n, std::move(words));
}

std::string Codebook::word_string(std::size_t index) const {
  return BinarySequence{n, words.at(index)}.to_string();
}

double hamming_per_symbol(const BinarySequence& x, const BinarySequence& y) {
  if (x.n != y.n) throw std::domain_error("hamming_per_symbol: length mismatch");
  return static_cast<double>(std::popcount(x.bits ^ y.bits)) / static_cast<double>(x.n);
}

std::size_t nearest_codeword(const Codebook& cb, const BinarySequence& x) {
  if (x.n != cb.n) throw std::domain_error("nearest_codeword: length mismatch");
  std::size_t best_index = 0;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < cb.words.size(); ++i) {
    const int dist = std::popcount(x.bits ^ cb.words[i]);
    if (dist < best) {
      best = dist;
      best_index = i;
    }
  }
  return best_index;
}

CodeEvaluation evaluate_code(double p, const Codebook& cb,
                             const std::vector<double>& thresholds) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("evaluate_code: p outside (0, 1)");
  if (cb.n > kMaxEvalBits) {
    throw capacity_error("evaluate_code: exact enumeration supports n <= " +
                         std::to_string(kMaxEvalBits) + "; use mc_random_coding beyond");
  }
  const std::vector<double> wp = weight_probs(p, cb.n);
  const double inv_n = 1.0 / static_cast<double>(cb.n);

  CodeEvaluation eval;
  eval.rate = std::log2(static_cast<double>(cb.size())) / static_cast<double>(cb.n);
  eval.avg_distortion = 0.0;
  eval.excess_prob_at.reserve(thresholds.size());
  for (double t : thresholds) eval.excess_prob_at.emplace_back(t, 0.0);

  const std::uint64_t total = std::uint64_t{1} << cb.n;
  for (std::uint64_t x = 0; x < total; ++x) {
    const double prob = wp[static_cast<std::size_t>(std::popcount(x))];
    const double dist = static_cast<double>(min_distance(cb.words, x)) * inv_n;
    eval.avg_distortion += prob * dist;
    for (auto& [threshold, excess] : eval.excess_prob_at) {
      if (dist > threshold) excess += prob;
    }
  }
  return eval;
}

SearchResult optimal_code_search(double p, std::int64_t n, std::int64_t M,
                                 SearchObjective objective, double excess_D) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("optimal_code_search: p outside (0, 1)");
  check_length(n, "optimal_code_search");
  if (n > kMaxSearchBits) {
    throw capacity_error("optimal_code_search: supports n <= " +
                         std::to_string(kMaxSearchBits));
  }
  const std::int64_t space = std::int64_t{1} << n;
  if (M < 1 || M > space) throw std::domain_error("optimal_code_search: M outside [1, 2^n]");
  const double combos = std::exp(log_binomial_coeff(space, M));
  if (combos > kMaxSearchCombinations) {
    throw capacity_error("optimal_code_search: C(2^n, M) exceeds the search budget");
  }
  if (objective == SearchObjective::excess && !(excess_D >= 0.0)) {
    throw std::domain_error("optimal_code_search: excess threshold must be >= 0");
  }

  const std::vector<double> wp = weight_probs(p, n);
  const double inv_n = 1.0 / static_cast<double>(n);

  // Enumerate M-subsets of {0, ..., 2^n - 1} in lexicographic order of the
  // sorted codeword tuple; keeping strict improvements makes the first
  // optimum found the lexicographically smallest one.
  std::vector<std::uint64_t> pick(static_cast<std::size_t>(M));
  for (std::int64_t i = 0; i < M; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
  std::vector<std::uint64_t> best_words;
  double best_score = std::numeric_limits<double>::infinity();

  const auto score_of = [&](const std::vector<std::uint64_t>& words) {
    double score = 0.0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < total; ++x) {
      const double prob = wp[static_cast<std::size_t>(std::popcount(x))];
      const double dist = static_cast<double>(min_distance(words, x)) * inv_n;
      if (objective == SearchObjective::average) {
        score += prob * dist;
      } else if (dist > excess_D) {
        score += prob;
      }
    }
    return score;
  };

  while (true) {
    const double score = score_of(pick);
    if (score < best_score) {
      best_score = score;
      best_words = pick;
    }
    // Next combination.
    std::int64_t i = M - 1;
    while (i >= 0 &&
           pick[static_cast<std::size_t>(i)] == static_cast<std::uint64_t>(space - M + i)) {
      --i;
    }
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < M; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  Codebook best(n, std::move(best_words));
  std::vector<double> thresholds;
  if (objective == SearchObjective::excess) thresholds.push_back(excess_D);
  return {best, evaluate_code(p, best, thresholds)};
}

double mc_random_coding(double p, double q1, std::int64_t n, std::int64_t M, double D,
                        std::int64_t trials, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("mc_random_coding: p outside (0, 1)");
  if (!(q1 >= 0.0 && q1 <= 1.0)) throw std::domain_error("mc_random_coding: q1 outside [0, 1]");
  if (n < 1) throw std::domain_error("mc_random_coding: n must be >= 1");
  if (M < 1) throw std::domain_error("mc_random_coding: M must be >= 1");
  if (!(D >= 0.0)) throw std::domain_error("mc_random_coding: D negative");
  if (trials < 1) throw std::domain_error("mc_random_coding: trials must be >= 1");

  // Same boundary rule as the analytic bounds: floor(n D) with a nudge for
  // products that round just below an integer.
  const std::int64_t budget = static_cast<std::int64_t>(std::floor(n * D + 1e-9));
  const std::int64_t limbs = (n + 63) / 64;
  std::int64_t excess_count = 0;

  std::vector<std::uint64_t> source(static_cast<std::size_t>(limbs));
  std::vector<std::uint64_t> code(static_cast<std::size_t>(limbs));
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 eng(seq);

    const auto draw_word = [&](std::vector<std::uint64_t>& out, double bias) {
      for (std::int64_t limb = 0; limb < limbs; ++limb) {
        std::uint64_t w = 0;
        const std::int64_t hi = std::min<std::int64_t>(64, n - limb * 64);
        for (std::int64_t b = 0; b < hi; ++b) {
          w |= static_cast<std::uint64_t>(uniform01(eng) < bias) << b;
        }
        out[static_cast<std::size_t>(limb)] = w;
      }
    };

    draw_word(source, p);
    bool within = false;
    for (std::int64_t i = 0; i < M && !within; ++i) {
      draw_word(code, q1);
      std::int64_t dist = 0;
      for (std::int64_t limb = 0; limb < limbs; ++limb) {
        dist += std::popcount(source[static_cast<std::size_t>(limb)] ^
                              code[static_cast<std::size_t>(limb)]);
      }
      within = dist <= budget;
    }
    if (!within) ++excess_count;
  }
  return static_cast<double>(excess_count) / static_cast<double>(trials);
}

}  // namespace rdlab
