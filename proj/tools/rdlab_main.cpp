#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/bernoulli_rd.hpp"
#include "rdlab/blahut_arimoto.hpp"
#include "rdlab/code_lab.hpp"
#include "rdlab/dataset.hpp"
#include "rdlab/figures.hpp"
#include "rdlab/finite_blocklength.hpp"
#include "rdlab/info_core.hpp"
#include "rdlab/tilted.hpp"
#include "rdlab/types.hpp"

namespace {

using namespace rdlab;

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct OutputOptions {
  std::string format = "csv";
  std::string out;  // empty means stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out, "Output file (default: stdout)");
}

void emit(const Dataset& d, const OutputOptions& opts) {
  const std::string text = opts.format == "json" ? to_json(d) : to_csv(d);
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    write_atomic(opts.out, text);
  }
}

void require_open01(double v, const char* flag, const char* cmd) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::domain_error(std::string(cmd) + ": " + flag + " = " + format_num(v) +
                            " must be in (0, 1)");
  }
}

void require_nonneg(double v, const char* flag, const char* cmd) {
  if (!(v >= 0.0)) {
    throw std::domain_error(std::string(cmd) + ": " + flag + " = " + format_num(v) +
                            " must be >= 0");
  }
}

void require_at_least(std::int64_t v, std::int64_t min, const char* flag, const char* cmd) {
  if (v < min) {
    throw std::domain_error(std::string(cmd) + ": " + flag + " = " + std::to_string(v) +
                            " must be >= " + std::to_string(min));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Rate-distortion analysis toolkit for Bernoulli sources with Hamming "
               "distortion: closed forms, Blahut-Arimoto, dispersion, finite-blocklength "
               "bounds, code search and figure data."};
  app.require_subcommand(1);

  // rd-curve
  auto* rd_curve = app.add_subcommand("rd-curve", "Closed-form R(D) curve");
  double rc_p = 0.3;
  int rc_points = 200;
  OutputOptions rc_out;
  rd_curve->add_option("--p", rc_p, "Source bias");
  rd_curve->add_option("--points", rc_points, "Number of rows");
  add_output_flags(rd_curve, rc_out);
  rd_curve->callback([&] {
    require_open01(rc_p, "--p", "rd-curve");
    if (rc_points < 2) throw std::domain_error("rd-curve: --points must be >= 2");
    Dataset d;
    d.figure_id = "rd_curve";
    d.params = {{"p", format_num(rc_p)}};
    d.columns = {"D", "R_bits"};
    const double d_max = std::min(rc_p, 1.0 - rc_p);
    for (int i = 0; i < rc_points; ++i) {
      const double dist = d_max * i / (rc_points - 1);
      d.add_row({dist, rate_distortion(rc_p, dist)});
    }
    emit(d, rc_out);
  });

  // entropy-curve
  auto* entropy_curve = app.add_subcommand("entropy-curve", "Binary entropy function");
  int ec_points = 201;
  OutputOptions ec_out;
  entropy_curve->add_option("--points", ec_points, "Number of rows");
  add_output_flags(entropy_curve, ec_out);
  entropy_curve->callback([&] {
    if (ec_points < 2) throw std::domain_error("entropy-curve: --points must be >= 2");
    emit(fig_entropy(ec_points), ec_out);
  });

  // ba
  auto* ba = app.add_subcommand("ba", "Blahut-Arimoto solve at one slope");
  double ba_p = 0.3, ba_s = 5.0;
  OutputOptions ba_out;
  ba->add_option("--p", ba_p, "Source bias");
  ba->add_option("--s", ba_s, "Slope in nats per unit distortion")->required();
  add_output_flags(ba, ba_out);
  ba->callback([&] {
    require_open01(ba_p, "--p", "ba");
    require_nonneg(ba_s, "--s", "ba");
    const BATrace trace = ba_solve(ProbVector::bernoulli(ba_p), DistortionMatrix::hamming(2),
                                   {ba_s, 1e-12, 10000});
    Dataset d;
    d.figure_id = "ba_trace";
    d.params = {{"p", format_num(ba_p)},
                {"s_nats", format_num(ba_s)},
                {"converged", trace.converged ? "true" : "false"},
                {"iterations", std::to_string(trace.iterations_used)}};
    d.columns = {"iteration", "rate_bits", "distortion"};
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
      d.add_row({static_cast<double>(i + 1), trace.points[i].rate, trace.points[i].distortion});
    }
    emit(d, ba_out);
  });

  // ba-sweep
  auto* sweep = app.add_subcommand("ba-sweep", "Trace the R(D) curve by sweeping the slope");
  double sw_p = 0.3;
  int sw_points = 60;
  std::vector<double> sw_slopes;
  OutputOptions sw_out;
  sweep->add_option("--p", sw_p, "Source bias");
  sweep->add_option("--s", sw_slopes, "Explicit slopes in nats (repeatable)");
  sweep->add_option("--points", sw_points, "Log-spaced slope count when --s is absent");
  add_output_flags(sweep, sw_out);
  sweep->callback([&] {
    require_open01(sw_p, "--p", "ba-sweep");
    std::vector<double> slopes = sw_slopes;
    if (slopes.empty()) {
      if (sw_points < 2) throw std::domain_error("ba-sweep: --points must be >= 2");
      const double la = std::log(0.2), lb = std::log(20.0);
      for (int i = 0; i < sw_points; ++i) {
        slopes.push_back(std::exp(la + (lb - la) * i / (sw_points - 1)));
      }
    }
    for (double s : slopes) require_nonneg(s, "--s", "ba-sweep");
    Dataset d;
    d.figure_id = "ba_sweep";
    d.params = {{"p", format_num(sw_p)}};
    d.columns = {"s_nats", "D", "R_bits", "converged"};
    for (const RDPoint& pt : ba_sweep(ProbVector::bernoulli(sw_p), DistortionMatrix::hamming(2),
                                      slopes, {1.0, 1e-12, 10000})) {
      d.add_row({pt.slope_s, pt.distortion, pt.rate, pt.converged ? 1.0 : 0.0});
    }
    emit(d, sw_out);
  });

  // tilted
  auto* tilted_cmd = app.add_subcommand("tilted", "d-tilted information values");
  double ti_p = 0.3, ti_D = 0.1;
  OutputOptions ti_out;
  tilted_cmd->add_option("--p", ti_p, "Source bias");
  tilted_cmd->add_option("--D", ti_D, "Target distortion");
  add_output_flags(tilted_cmd, ti_out);
  tilted_cmd->callback([&] {
    require_open01(ti_p, "--p", "tilted");
    require_nonneg(ti_D, "--D", "tilted");
    const TiltedPair j = tilted_information(ti_p, ti_D);
    Dataset d;
    d.figure_id = "tilted";
    d.columns = {"p", "D", "j0_bits", "j1_bits", "mean_bits"};
    d.add_row({ti_p, ti_D, j.j0, j.j1, (1.0 - ti_p) * j.j0 + ti_p * j.j1});
    emit(d, ti_out);
  });

  // dispersion
  auto* disp = app.add_subcommand("dispersion", "Source dispersion V(D)");
  double dp_p = 0.3;
  std::optional<double> dp_D;
  OutputOptions dp_out;
  disp->add_option("--p", dp_p, "Source bias");
  disp->add_option("--D", dp_D, "Target distortion (default: min(p, 1-p)/2)");
  add_output_flags(disp, dp_out);
  disp->callback([&] {
    require_open01(dp_p, "--p", "dispersion");
    const double d_val = dp_D.value_or(0.5 * std::min(dp_p, 1.0 - dp_p));
    require_nonneg(d_val, "--D", "dispersion");
    Dataset d;
    d.figure_id = "dispersion";
    d.columns = {"p", "D", "V_bits2"};
    d.add_row({dp_p, d_val, dispersion(dp_p, d_val)});
    emit(d, dp_out);
  });

  // fbl
  auto* fbl = app.add_subcommand("fbl", "Finite-blocklength bounds at one query");
  double fb_p = 0.3, fb_D = 0.1, fb_eps = 0.1;
  std::int64_t fb_n = 100;
  OutputOptions fb_out;
  fbl->add_option("--p", fb_p, "Source bias");
  fbl->add_option("--D", fb_D, "Target distortion");
  fbl->add_option("--eps", fb_eps, "Excess-distortion probability");
  fbl->add_option("--n", fb_n, "Block length")->required();
  add_output_flags(fbl, fb_out);
  fbl->callback([&] {
    require_open01(fb_p, "--p", "fbl");
    require_open01(fb_eps, "--eps", "fbl");
    require_nonneg(fb_D, "--D", "fbl");
    require_at_least(fb_n, 1, "--n", "fbl");
    const FBLQuery q{fb_p, fb_D, fb_eps, fb_n};
    const RateSearchResult ach = achievability_rate(q);
    const RateSearchResult conv = converse_rate(q);
    Dataset d;
    d.figure_id = "fbl";
    d.params = {{"p", format_num(fb_p)}, {"D", format_num(fb_D)}, {"eps", format_num(fb_eps)}};
    d.columns = {"n", "converse_rate", "normal_approx_rate", "achievability_rate",
                 "R_D", "converse_log2M", "achievability_log2M"};
    d.add_row({static_cast<double>(fb_n), conv.rate, normal_approx_rate(q), ach.rate,
               rate_distortion(fb_p, fb_D), conv.log2_M, ach.log2_M});
    emit(d, fb_out);
  });

  // fbl-curve
  auto* fbl_curve = app.add_subcommand("fbl-curve", "Bounds across block lengths");
  double fc_p = 0.3, fc_D = 0.1, fc_eps = 0.1;
  std::vector<std::int64_t> fc_ns;
  OutputOptions fc_out;
  fbl_curve->add_option("--p", fc_p, "Source bias");
  fbl_curve->add_option("--D", fc_D, "Target distortion");
  fbl_curve->add_option("--eps", fc_eps, "Excess-distortion probability");
  fbl_curve->add_option("--n", fc_ns, "Block lengths (repeatable)");
  add_output_flags(fbl_curve, fc_out);
  fbl_curve->callback([&] {
    require_open01(fc_p, "--p", "fbl-curve");
    require_open01(fc_eps, "--eps", "fbl-curve");
    require_nonneg(fc_D, "--D", "fbl-curve");
    std::vector<std::int64_t> ns = fc_ns.empty()
        ? std::vector<std::int64_t>{100, 200, 500, 1000, 2000} : fc_ns;
    for (std::int64_t nn : ns) require_at_least(nn, 1, "--n", "fbl-curve");
    emit(fig_fbl_bounds(fc_p, fc_D, fc_eps, ns), fc_out);
  });

  // clt-pmf
  auto* clt = app.add_subcommand("clt-pmf", "Exact pmf of blockwise-average tilted information");
  double cl_p = 0.3, cl_D = 0.1, cl_eps = 0.05;
  std::int64_t cl_n = 6;
  OutputOptions cl_out;
  clt->add_option("--p", cl_p, "Source bias");
  clt->add_option("--D", cl_D, "Target distortion");
  clt->add_option("--eps", cl_eps, "Excess-distortion probability for the rate marker");
  clt->add_option("--n", cl_n, "Block length");
  add_output_flags(clt, cl_out);
  clt->callback([&] {
    require_open01(cl_p, "--p", "clt-pmf");
    require_open01(cl_eps, "--eps", "clt-pmf");
    require_nonneg(cl_D, "--D", "clt-pmf");
    require_at_least(cl_n, 1, "--n", "clt-pmf");
    const TiltedPMF pmf = tilted_pmf(cl_p, cl_D, cl_n);
    Dataset d;
    d.figure_id = "clt_pmf";
    d.params = {{"p", format_num(cl_p)},
                {"D", format_num(cl_D)},
                {"n", std::to_string(cl_n)},
                {"mean_bits", format_num(pmf.mean)},
                {"variance_bits2", format_num(pmf.variance)},
                {"R_fbl", format_num(normal_approx_rate({cl_p, cl_D, cl_eps, cl_n}))}};
    d.columns = {"k", "value_bits", "probability"};
    for (std::size_t k = 0; k < pmf.atoms.size(); ++k) {
      d.add_row({static_cast<double>(k), pmf.atoms[k].value, pmf.atoms[k].probability});
    }
    emit(d, cl_out);
  });

  // code-search
  auto* search = app.add_subcommand("code-search", "Exhaustive optimal codebook search");
  double cs_p = 0.3;
  std::int64_t cs_n = 3, cs_M = 4;
  std::optional<double> cs_D;
  OutputOptions cs_out;
  search->add_option("--p", cs_p, "Source bias");
  search->add_option("--n", cs_n, "Block length")->required();
  search->add_option("--M", cs_M, "Codebook size")->required();
  search->add_option("--D", cs_D, "Optimize excess probability at this threshold "
                                  "(default: average distortion)");
  add_output_flags(search, cs_out);
  search->callback([&] {
    require_open01(cs_p, "--p", "code-search");
    require_at_least(cs_n, 1, "--n", "code-search");
    require_at_least(cs_M, 1, "--M", "code-search");
    const SearchObjective obj = cs_D ? SearchObjective::excess : SearchObjective::average;
    if (cs_D) require_nonneg(*cs_D, "--D", "code-search");
    const SearchResult best = optimal_code_search(cs_p, cs_n, cs_M, obj, cs_D.value_or(0.0));
    Dataset d;
    d.figure_id = "code_search";
    d.params = {{"p", format_num(cs_p)},
                {"n", std::to_string(cs_n)},
                {"M", std::to_string(cs_M)},
                {"objective", cs_D ? "excess" : "average"},
                {"rate_bits", format_num(best.evaluation.rate)},
                {"avg_distortion", format_num(best.evaluation.avg_distortion)}};
    if (cs_D) {
      d.params.emplace_back("excess_at_" + format_num(*cs_D),
                            format_num(best.evaluation.excess_prob_at.front().second));
    }
    d.columns = {"index", "codeword", "weight"};
    for (std::size_t i = 0; i < best.codebook.words.size(); ++i) {
      d.add_row({static_cast<double>(i), best.codebook.word_string(i),
                 static_cast<double>(BinarySequence{cs_n, best.codebook.words[i]}.weight())});
    }
    emit(d, cs_out);
  });

  // code-eval
  auto* eval = app.add_subcommand("code-eval", "Exact evaluation of a given codebook");
  double ce_p = 0.3;
  std::vector<double> ce_thresholds;
  std::vector<std::string> ce_words;
  OutputOptions ce_out;
  eval->add_option("--p", ce_p, "Source bias");
  eval->add_option("--D", ce_thresholds, "Excess-probability thresholds (repeatable)");
  eval->add_option("codewords", ce_words, "Codewords as 0/1 strings")->required();
  add_output_flags(eval, ce_out);
  eval->callback([&] {
    require_open01(ce_p, "--p", "code-eval");
    for (double t : ce_thresholds) require_nonneg(t, "--D", "code-eval");
    const Codebook cb = Codebook::from_strings(ce_words);
    const CodeEvaluation ev = evaluate_code(ce_p, cb, ce_thresholds);
    Dataset d;
    d.figure_id = "code_eval";
    d.params = {{"p", format_num(ce_p)},
                {"n", std::to_string(cb.n)},
                {"M", std::to_string(cb.size())},
                {"rate_bits", format_num(ev.rate)},
                {"avg_distortion", format_num(ev.avg_distortion)}};
    for (const auto& [threshold, prob] : ev.excess_prob_at) {
      d.params.emplace_back("excess_at_" + format_num(threshold), format_num(prob));
    }
    d.columns = {"sequence", "weight", "probability", "codeword", "distortion"};
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cb.n); ++x) {
      const BinarySequence seq{cb.n, x};
      const std::size_t idx = nearest_codeword(cb, seq);
      const double prob = std::pow(ce_p, static_cast<double>(seq.weight())) *
                          std::pow(1.0 - ce_p, static_cast<double>(cb.n - seq.weight()));
      d.add_row({seq.to_string(), static_cast<double>(seq.weight()), prob,
                 cb.word_string(idx),
                 hamming_per_symbol(seq, BinarySequence{cb.n, cb.words[idx]})});
    }
    emit(d, ce_out);
  });

  // mc-sim
  auto* mc = app.add_subcommand("mc-sim", "Monte Carlo random-coding simulation");
  double mc_p = 0.3, mc_D = 0.1;
  std::int64_t mc_n = 20, mc_M = 32, mc_trials = 100000;
  std::uint64_t mc_seed = 1;
  OutputOptions mc_out;
  mc->add_option("--p", mc_p, "Source bias");
  mc->add_option("--D", mc_D, "Target distortion");
  mc->add_option("--n", mc_n, "Block length");
  mc->add_option("--M", mc_M, "Codebook size");
  mc->add_option("--trials", mc_trials, "Number of trials");
  mc->add_option("--seed", mc_seed, "RNG seed");
  add_output_flags(mc, mc_out);
  mc->callback([&] {
    require_open01(mc_p, "--p", "mc-sim");
    require_nonneg(mc_D, "--D", "mc-sim");
    require_at_least(mc_n, 1, "--n", "mc-sim");
    require_at_least(mc_M, 1, "--M", "mc-sim");
    require_at_least(mc_trials, 1, "--trials", "mc-sim");
    const double q1 = q_star(mc_p, mc_D)[1];
    const double est = mc_random_coding(mc_p, q1, mc_n, mc_M, mc_D, mc_trials, mc_seed);
    Dataset d;
    d.figure_id = "mc_sim";
    d.params = {{"p", format_num(mc_p)},     {"D", format_num(mc_D)},
                {"n", std::to_string(mc_n)}, {"M", std::to_string(mc_M)},
                {"q1", format_num(q1)},      {"seed", std::to_string(mc_seed)}};
    d.columns = {"trials", "excess_fraction", "analytic_epsilon"};
    d.add_row({static_cast<double>(mc_trials), est,
               achievability_epsilon(mc_p, mc_D, mc_n, static_cast<double>(mc_M))});
    emit(d, mc_out);
  });

  // figures
  auto* figures = app.add_subcommand("figures", "Write figure datasets to a directory");
  bool all = false;
  std::string fig_id;
  std::string out_dir = "data";
  std::string fig_format = "csv";
  FigureOverrides overrides;
  double ov_p = 0.0, ov_eps = 0.0;
  int ov_points = 0;
  figures->add_flag("--all", all, "Emit every figure dataset");
  figures->add_option("id", fig_id, "Single figure id (see --all for the full set)");
  figures->add_option("--out-dir", out_dir, "Output directory");
  figures->add_option("--format", fig_format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* ovp = figures->add_option("--p", ov_p, "Override source bias");
  auto* ove = figures->add_option("--eps", ov_eps, "Override excess probability");
  auto* ovn = figures->add_option("--points", ov_points, "Override point count");
  figures->callback([&] {
    if (ovp->count() > 0) {
      require_open01(ov_p, "--p", "figures");
      overrides.p = ov_p;
    }
    if (ove->count() > 0) {
      require_open01(ov_eps, "--eps", "figures");
      overrides.eps = ov_eps;
    }
    if (ovn->count() > 0) {
      if (ov_points < 2) throw std::domain_error("figures: --points must be >= 2");
      overrides.points = ov_points;
    }
    std::vector<std::string> ids;
    if (all) {
      ids = figure_ids();
    } else if (!fig_id.empty()) {
      ids.push_back(fig_id);
    } else {
      throw std::domain_error("figures: give a figure id or --all");
    }
    // Build everything before writing anything.
    std::vector<Dataset> datasets;
    datasets.reserve(ids.size());
    for (const std::string& id : ids) datasets.push_back(make_figure(id, overrides));
    const std::string ext = fig_format == "json" ? ".json" : ".csv";
    for (const Dataset& d : datasets) {
      const std::filesystem::path path = std::filesystem::path(out_dir) / (d.figure_id + ext);
      write_atomic(path, fig_format == "json" ? to_json(d) : to_csv(d));
      std::cout << path.string() << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rdlab::capacity_error& e) {
    std::cerr << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
