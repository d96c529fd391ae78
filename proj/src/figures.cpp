#include "rdlab/figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rdlab/bernoulli_rd.hpp"
#include "rdlab/blahut_arimoto.hpp"
#include "rdlab/code_lab.hpp"
#include "rdlab/finite_blocklength.hpp"
#include "rdlab/info_core.hpp"
#include "rdlab/tilted.hpp"
#include "rdlab/types.hpp"

namespace rdlab {

namespace {

std::vector<double> log_spaced(double lo, double hi, int points) {
  std::vector<double> out;
  out.reserve(points);
  const double la = std::log(lo), lb = std::log(hi);
  for (int i = 0; i < points; ++i) {
    out.push_back(std::exp(la + (lb - la) * i / (points - 1)));
  }
  return out;
}

void check_points(int points, int minimum = 2) {
  if (points < minimum) throw std::domain_error("figure: too few points");
}

}  // namespace

Dataset fig_entropy(int points) {
  check_points(points);
  Dataset d;
  d.figure_id = "f1_entropy";
  d.params = {{"points", format_num(points)}};
  d.columns = {"p", "H_bits"};
  for (int i = 0; i < points; ++i) {
    const double p = static_cast<double>(i) / (points - 1);
    d.add_row({p, binary_entropy(p)});
  }
  return d;
}

Dataset fig_ba_convergence(double p, const std::vector<double>& slopes) {
  Dataset d;
  d.figure_id = "f3_ba_convergence";
  d.params = {{"p", format_num(p)}};
  d.columns = {"s_nats", "iteration", "rate_bits", "distortion"};
  const ProbVector source = ProbVector::bernoulli(p);
  const DistortionMatrix hamming = DistortionMatrix::hamming(2);
  for (double s : slopes) {
    const BATrace trace = ba_solve(source, hamming, {s, 1e-12, 10000});
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
      d.add_row({s, static_cast<double>(i + 1), trace.points[i].rate,
                 trace.points[i].distortion});
    }
  }
  return d;
}

Dataset fig_ba_vs_closed(double p, int points, double s_min, double s_max) {
  check_points(points);
  Dataset d;
  d.figure_id = "f4_ba_vs_closed";
  d.params = {{"p", format_num(p)},
              {"s_min", format_num(s_min)},
              {"s_max", format_num(s_max)}};
  d.columns = {"s_nats", "D_ba", "R_ba", "R_closed", "abs_err"};
  const ProbVector source = ProbVector::bernoulli(p);
  const DistortionMatrix hamming = DistortionMatrix::hamming(2);
  for (const RDPoint& pt :
       ba_sweep(source, hamming, log_spaced(s_min, s_max, points), {1.0, 1e-12, 10000})) {
    const double closed = rate_distortion(p, pt.distortion);
    d.add_row({pt.slope_s, pt.distortion, pt.rate, closed, std::abs(pt.rate - closed)});
  }
  return d;
}

Dataset fig_code_example(double p, std::int64_t n, std::int64_t M) {
  const SearchResult best = optimal_code_search(p, n, M, SearchObjective::average);
  Dataset d;
  d.figure_id = "f5_code_example";
  d.comments = {"sequence and codeword columns hold the integer value of the binary word,"
                " most significant symbol first"};
  std::string words;
  for (std::size_t i = 0; i < best.codebook.words.size(); ++i) {
    if (i > 0) words += ' ';
    words += best.codebook.word_string(i);
  }
  d.params = {{"p", format_num(p)},
              {"n", format_num(static_cast<double>(n))},
              {"M", format_num(static_cast<double>(M))},
              {"codebook", words},
              {"rate_bits", format_num(best.evaluation.rate)},
              {"avg_distortion", format_num(best.evaluation.avg_distortion)},
              {"shannon_limit_at_avg",
               format_num(rate_distortion(p, best.evaluation.avg_distortion))}};
  d.columns = {"sequence", "weight", "probability", "codeword", "distortion"};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const BinarySequence seq{n, x};
    const std::size_t idx = nearest_codeword(best.codebook, seq);
    const BinarySequence code{n, best.codebook.words[idx]};
    const double prob = std::pow(p, static_cast<double>(seq.weight())) *
                        std::pow(1.0 - p, static_cast<double>(n - seq.weight()));
    d.add_row({static_cast<double>(x), static_cast<double>(seq.weight()), prob,
               static_cast<double>(code.bits), hamming_per_symbol(seq, code)});
  }
  return d;
}

Dataset fig_dispersion(const std::vector<double>& biases, int points) {
  check_points(points, 1);
  Dataset d;
  d.figure_id = "f6_dispersion";
  d.columns = {"D"};
  for (double p : biases) d.columns.push_back("V_p" + format_num(p));
  // Shared grid inside every bias's distortion domain (D < min over biases).
  double d_cap = 0.5;
  for (double p : biases) d_cap = std::min(d_cap, std::min(p, 1.0 - p));
  for (int i = 1; i <= points; ++i) {
    const double D = d_cap * i / (points + 1);
    std::vector<Cell> row{D};
    for (double p : biases) row.push_back(dispersion(p, D));
    d.add_row(std::move(row));
  }
  return d;
}

Dataset fig_fbl_bounds(double p, double D, double eps, const std::vector<std::int64_t>& ns) {
  Dataset d;
  d.figure_id = "f7_fbl_bounds";
  d.comments = {"achievability: random coding with codewords drawn i.i.d. from the optimal"
                " reproduction distribution",
                "converse: sphere-covering counting bound"};
  d.params = {{"p", format_num(p)}, {"D", format_num(D)}, {"eps", format_num(eps)}};
  d.columns = {"n", "converse_rate", "normal_approx_rate", "achievability_rate", "R_D"};
  const double shannon = rate_distortion(p, D);
  for (std::int64_t n : ns) {
    const BoundBracket b = bound_bracket({p, D, eps, n});
    d.add_row({static_cast<double>(n), b.converse_rate, b.normal_approx_rate,
               b.achievability_rate, shannon});
  }
  return d;
}

Dataset fig_rate_vs_n(double p, double D, const std::vector<double>& eps_list, int points) {
  check_points(points);
  Dataset d;
  d.figure_id = "f8_rate_vs_n";
  d.params = {{"p", format_num(p)}, {"D", format_num(D)}};
  d.columns = {"n"};
  for (double eps : eps_list) d.columns.push_back("R_eps" + format_num(eps));
  d.columns.push_back("R_D");
  const double shannon = rate_distortion(p, D);
  std::vector<std::int64_t> ns;
  for (double x : log_spaced(10.0, 5000.0, points)) {
    const auto n = static_cast<std::int64_t>(std::llround(x));
    if (ns.empty() || n > ns.back()) ns.push_back(n);
  }
  for (std::int64_t n : ns) {
    std::vector<Cell> row{static_cast<double>(n)};
    for (double eps : eps_list) row.push_back(normal_approx_rate({p, D, eps, n}));
    row.push_back(shannon);
    d.add_row(std::move(row));
  }
  return d;
}

Dataset fig_clt_pmf(double p, std::int64_t n, double eps, const std::vector<double>& distortions,
                    int overlay_points) {
  check_points(overlay_points);
  Dataset d;
  d.figure_id = "f9_clt_pmf";
  d.comments = {"kind 0 rows: (x, y) = (atom value bits, probability);"
                " kind 1 rows: (x, y) = (rate bits, gaussian density)"};
  d.params = {{"p", format_num(p)},
              {"n", format_num(static_cast<double>(n))},
              {"eps", format_num(eps)}};
  d.columns = {"D", "kind", "x", "y"};
  for (double D : distortions) {
    const TiltedPMF pmf = tilted_pmf(p, D, n);
    d.params.emplace_back("R_D_at_" + format_num(D), format_num(pmf.mean));
    d.params.emplace_back("R_fbl_at_" + format_num(D),
                          format_num(normal_approx_rate({p, D, eps, n})));
    for (const TiltedAtom& atom : pmf.atoms) {
      d.add_row({D, 0.0, atom.value, atom.probability});
    }
    const double sigma = std::sqrt(pmf.variance);
    for (int i = 0; i < overlay_points; ++i) {
      const double x = pmf.mean + sigma * (-4.0 + 8.0 * i / (overlay_points - 1));
      const double y = std::exp(-0.5 * (x - pmf.mean) * (x - pmf.mean) / pmf.variance) /
                       (sigma * std::sqrt(2.0 * std::numbers::pi));
      d.add_row({D, 1.0, x, y});
    }
  }
  return d;
}

Dataset fig_comprehensive(double p, double eps, const std::vector<std::int64_t>& ns,
                          int points) {
  check_points(points);
  Dataset d;
  d.figure_id = "f10_comprehensive";
  d.params = {{"p", format_num(p)}, {"eps", format_num(eps)}};
  d.columns = {"D", "R_D"};
  for (std::int64_t n : ns) d.columns.push_back("R_n" + format_num(static_cast<double>(n)));
  const double d_max = std::min(p, 1.0 - p);
  for (int i = 1; i <= points; ++i) {
    const double D = d_max * i / (points + 1);
    std::vector<Cell> row{D, rate_distortion(p, D)};
    for (std::int64_t n : ns) row.push_back(normal_approx_rate({p, D, eps, n}));
    d.add_row(std::move(row));
  }
  return d;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {
      "f1_entropy",     "f3_ba_convergence", "f4_ba_vs_closed",
      "f5_code_example", "f6_dispersion",    "f7_fbl_bounds",
      "f8_rate_vs_n",   "f9_clt_pmf",        "f10_comprehensive"};
  return ids;
}

Dataset make_figure(const std::string& id, const FigureOverrides& o) {
  if (id == "f1_entropy") return fig_entropy(o.points.value_or(201));
  if (id == "f3_ba_convergence") return fig_ba_convergence(o.p.value_or(0.3));
  if (id == "f4_ba_vs_closed") return fig_ba_vs_closed(o.p.value_or(0.3), o.points.value_or(60));
  if (id == "f5_code_example") return fig_code_example(o.p.value_or(0.3));
  if (id == "f6_dispersion") return fig_dispersion({0.1, 0.2, 0.3, 0.5}, o.points.value_or(19));
  if (id == "f7_fbl_bounds") {
    return fig_fbl_bounds(o.p.value_or(0.3), 0.1, o.eps.value_or(0.1));
  }
  if (id == "f8_rate_vs_n") {
    return fig_rate_vs_n(o.p.value_or(0.3), 0.1, {0.01, 0.05, 0.1, 0.25},
                         o.points.value_or(40));
  }
  if (id == "f9_clt_pmf") return fig_clt_pmf(o.p.value_or(0.3), 6, o.eps.value_or(0.05));
  if (id == "f10_comprehensive") {
    return fig_comprehensive(o.p.value_or(0.3), o.eps.value_or(0.1), {100, 500, 2000},
                             o.points.value_or(60));
  }
  throw std::domain_error("unknown figure id: " + id);
}

}  // namespace rdlab
