// Copyright 2026 The aptk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>

#include "aptk/divergences.hpp"

namespace aptk {

// b_alpha = (1 - alpha) / (2 alpha - n (1 - alpha)); requires
// alpha > n / (n + 2). Negative for alpha > 1, positive for alpha < 1.
double b_alpha(const AlphaParam& a, int n);

struct GeneralizedGaussianSpec {
  int n = 1;
  double alpha = 2.0;
  Eigen::MatrixXd C;  // n x n symmetric positive definite
};

struct GridOptions {
  double cell_width = 1e-3;        // requested per-axis width (n = 1); scaled up for n = 2
  double tail_mass_tol = 1e-6;     // alpha < 1: extend until the tail estimate drops below this
  double cov_growth_tol = 1e-3;    // alpha < 1: and the covariance moves less than this per doubling
  double initial_extent_sigmas = 4.0;
  int max_doublings = 14;
  int max_cells_per_axis = 0;      // 0 = auto (50000 for n = 1, 400 for n = 2)
};

// Discretized density Z^-1 [1 + b x^T C^-1 x]_+^(1/(alpha-1)) on a midpoint
// grid, with the normalizer estimated on the grid. For alpha > 1 the support
// is the ellipsoid {x : x^T C^-1 x <= -1/b} and the grid is aligned to its
// bounding box (plus one padding cell); for alpha < 1 the tails follow a
// power law and the extent grows until the tail-mass and covariance rules
// are met.
struct GeneralizedGaussian {
  Density density;  // lives on the quadrature grid (density.space())
  double z_alpha = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  int n = 1;
  Eigen::MatrixXd C;
  double support_radius2 = 0.0;  // -1/b for alpha > 1 (x^T C^-1 x bound), +inf otherwise

  const WeightedSpace& grid() const { return density.space(); }
};

GeneralizedGaussian generalized_gaussian(const GeneralizedGaussianSpec& spec,
                                         const GridOptions& opts = {});

// Midpoint-rule tensor grid: cell centers as coordinates, volumes as weights.
WeightedSpace tensor_grid(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                          const Eigen::VectorXi& cells);

// Probability density proportional to f sampled at the cell centers.
Density discretize(const std::function<double(const Eigen::VectorXd&)>& f,
                   const WeightedSpace& grid);

Eigen::VectorXd mean(const Density& p);
Eigen::MatrixXd covariance(const Density& p);

// I_alpha(g, g_max) - (H_alpha(g_max) - H_alpha(g)) on the shared grid.
// Requires covariance(g) within 1% of C.
double moment_entropy_gap(const Density& g, const GeneralizedGaussian& gg);

}  // namespace aptk
