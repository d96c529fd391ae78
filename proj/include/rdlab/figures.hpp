#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/dataset.hpp"

namespace rdlab {

/// Knobs shared by the figure generators; unset fields use each figure's
/// default parameterization.
struct FigureOverrides {
  std::optional<double> p;
  std::optional<double> eps;
  std::optional<int> points;
};

Dataset fig_entropy(int points = 201);
Dataset fig_ba_convergence(double p = 0.3, const std::vector<double>& slopes = {2, 5, 10, 20});
Dataset fig_ba_vs_closed(double p = 0.3, int points = 60, double s_min = 0.2,
                         double s_max = 20.0);
Dataset fig_code_example(double p = 0.3, std::int64_t n = 3, std::int64_t M = 4);
Dataset fig_dispersion(const std::vector<double>& biases = {0.1, 0.2, 0.3, 0.5},
                       int points = 19);
Dataset fig_fbl_bounds(double p = 0.3, double D = 0.1, double eps = 0.1,
                       const std::vector<std::int64_t>& ns = {100, 200, 500, 1000, 2000});
Dataset fig_rate_vs_n(double p = 0.3, double D = 0.1,
                      const std::vector<double>& eps_list = {0.01, 0.05, 0.1, 0.25},
                      int points = 40);
Dataset fig_clt_pmf(double p = 0.3, std::int64_t n = 6, double eps = 0.05,
                    const std::vector<double>& distortions = {0.1, 0.2},
                    int overlay_points = 121);
Dataset fig_comprehensive(double p = 0.3, double eps = 0.1,
                          const std::vector<std::int64_t>& ns = {100, 500, 2000},
                          int points = 60);

/// The nine figure ids, in manifest order.
const std::vector<std::string>& figure_ids();

/// Builds a figure dataset by id with optional overrides.
/// Unknown ids raise std::domain_error.
Dataset make_figure(const std::string& id, const FigureOverrides& overrides = {});

}  // namespace rdlab
