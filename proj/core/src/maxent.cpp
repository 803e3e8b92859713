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

#include "aptk/maxent.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace aptk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double b_alpha(const AlphaParam& a, int n) {
  if (n < 1) fail_domain("b_alpha: dimension must be positive");
  double denom = 2.0 * a.alpha() - n * (1.0 - a.alpha());
  if (!(denom > 0.0))
    fail_domain("b_alpha: alpha must exceed n/(n+2)");
  return (1.0 - a.alpha()) / denom;
}

WeightedSpace tensor_grid(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                          const Eigen::VectorXi& cells) {
  const int n = static_cast<int>(lo.size());
  if (hi.size() != n || cells.size() != n) fail_domain("tensor_grid: dimension mismatch");
  long total = 1;
  double vol = 1.0;
  Eigen::VectorXd width(n);
  for (int j = 0; j < n; ++j) {
    if (cells[j] < 1 || !(hi[j] > lo[j])) fail_domain("tensor_grid: bad axis");
    total *= cells[j];
    width[j] = (hi[j] - lo[j]) / cells[j];
    vol *= width[j];
  }
  std::vector<Eigen::VectorXd> coords;
  coords.reserve(total);
  Eigen::VectorXi idx = Eigen::VectorXi::Zero(n);
  for (long k = 0; k < total; ++k) {
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) x[j] = lo[j] + (idx[j] + 0.5) * width[j];
    coords.push_back(std::move(x));
    for (int j = n - 1; j >= 0; --j) {
      if (++idx[j] < cells[j]) break;
      idx[j] = 0;
    }
  }
  return WeightedSpace(std::move(coords), std::vector<double>(total, vol));
}

Density discretize(const std::function<double(const Eigen::VectorXd&)>& f,
                   const WeightedSpace& grid) {
  if (!grid.has_coords()) fail_domain("discretize: grid must carry coordinates");
  Eigen::ArrayXd v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) v[static_cast<Eigen::Index>(i)] = f(grid.coord(i));
  return normalize(v, grid);
}

Eigen::VectorXd mean(const Density& p) {
  if (!p.space().has_coords()) fail_domain("mean: space must carry coordinates");
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p.space().dim()));
  for (std::size_t i = 0; i < p.size(); ++i)
    m += p[i] * p.space().weight(i) * p.space().coord(i);
  return m;
}

Eigen::MatrixXd covariance(const Density& p) {
  if (!p.space().has_coords()) fail_domain("covariance: space must carry coordinates");
  const Eigen::Index d = static_cast<Eigen::Index>(p.space().dim());
  Eigen::VectorXd m = mean(p);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Eigen::VectorXd x = p.space().coord(i) - m;
    c += p[i] * p.space().weight(i) * x * x.transpose();
  }
  return c;
}

namespace {

struct Shape {
  Eigen::MatrixXd cinv;
  double b;
  double expo;
  double operator()(const Eigen::VectorXd& x) const {
    double q = 1.0 + b * x.dot(cinv * x);
    return q > 0.0 ? std::pow(q, expo) : 0.0;
  }
};

// Unnormalized grid sum of the shape (the Z estimate for a given grid).
double grid_mass(const Shape& s, const WeightedSpace& grid) {
  double z = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) z += s(grid.coord(i)) * grid.weight(i);
  return z;
}

Eigen::MatrixXd grid_cov(const Shape& s, const WeightedSpace& grid) {
  Eigen::ArrayXd v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) v[static_cast<Eigen::Index>(i)] = s(grid.coord(i));
  return covariance(normalize(v, grid));
}

WeightedSpace build_box(const Eigen::VectorXd& half, double cell, int max_cells) {
  const int n = static_cast<int>(half.size());
  Eigen::VectorXd lo(n), hi(n);
  Eigen::VectorXi cells(n);
  for (int j = 0; j < n; ++j) {
    int k = std::max(2, static_cast<int>(std::lround(2.0 * half[j] / cell)));
    if (k > max_cells) k = max_cells;
    // keep the box symmetric with an integer cell count per axis
    double w = 2.0 * half[j] / k;
    lo[j] = -half[j] - w;  // one padding cell per side
    hi[j] = half[j] + w;
    cells[j] = k + 2;
  }
  return tensor_grid(lo, hi, cells);
}

}  // namespace

GeneralizedGaussian generalized_gaussian(const GeneralizedGaussianSpec& spec,
                                         const GridOptions& opts) {
  const int n = spec.n;
  AlphaParam a(spec.alpha);
  if (spec.C.rows() != n || spec.C.cols() != n)
    fail_domain("generalized_gaussian: covariance must be n x n");
  if ((spec.C - spec.C.transpose()).cwiseAbs().maxCoeff() > 1e-12 * spec.C.cwiseAbs().maxCoeff())
    fail_domain("generalized_gaussian: covariance must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(spec.C);
  if (llt.info() != Eigen::Success)
    fail_domain("generalized_gaussian: covariance must be positive definite");
  if (n > 2) fail_domain("generalized_gaussian: quadrature supports n in {1, 2}");

  const double b = b_alpha(a, n);
  Shape shape{llt.solve(Eigen::MatrixXd::Identity(n, n)), b, 1.0 / (a.alpha() - 1.0)};

  double cell = opts.cell_width;
  if (n == 2 && cell < 5e-2) cell = 5e-2;  // quadrature cost cap
  int max_cells = opts.max_cells_per_axis > 0 ? opts.max_cells_per_axis : (n == 1 ? 50000 : 400);

  WeightedSpace grid = WeightedSpace::counting(1);  // replaced below
  double radius2 = kInf;

  if (a.alpha() > 1.0) {
    // compact support: ellipsoid x^T C^-1 x <= -1/b
    radius2 = -1.0 / b;
    Eigen::VectorXd half(n);
    for (int j = 0; j < n; ++j) half[j] = std::sqrt(radius2 * spec.C(j, j));
    grid = build_box(half, cell, max_cells);
  } else {
    // Power-law tails: grow the extent until the analytic tail bounds for
    // the truncated mass and the truncated second moment both vanish
    // relative to the grid estimates. The tail density in the C-metric is
    // ~ b^expo r^kappa with kappa = 2 expo, so the radial integrals beyond
    // the inscribed radius R are explicit.
    Eigen::VectorXd half(n);
    for (int j = 0; j < n; ++j) half[j] = opts.initial_extent_sigmas * std::sqrt(spec.C(j, j));
    const double kappa = 2.0 * shape.expo;  // negative; n + 2 + kappa < 0 in range
    const double detroot = std::sqrt(spec.C.determinant());
    bool ok = false;
    for (int it = 0; it < opts.max_doublings; ++it) {
      double coarse = std::max(cell, half.maxCoeff() / 200.0);
      WeightedSpace probe = build_box(half, coarse, max_cells);
      double z_in = grid_mass(shape, probe);
      Eigen::MatrixXd cov = grid_cov(shape, probe);
      double m2_in = cov.trace() * z_in;
      double rmin2 = kInf;
      for (int j = 0; j < n; ++j) rmin2 = std::min(rmin2, half[j] * half[j] / spec.C(j, j));
      double r = std::sqrt(rmin2);
      double surf = n == 1 ? 2.0 : 2.0 * M_PI;
      double pref = surf * std::pow(b, shape.expo) * detroot;
      double mass_tail = pref * std::pow(r, n + kappa) / (-(n + kappa));
      double m2_tail = pref * spec.C.norm() * std::pow(r, n + 2 + kappa) / (-(n + 2 + kappa));
      if (mass_tail < opts.tail_mass_tol * z_in && m2_tail < opts.cov_growth_tol * m2_in) {
        ok = true;
        break;
      }
      half *= 2.0;
    }
    if (!ok)
      fail_domain("generalized_gaussian: second-moment estimate keeps drifting under grid extension");
    grid = build_box(half, cell, max_cells);
  }

  Eigen::ArrayXd v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = shape(grid.coord(i));
  double z = (v * grid.weights()).sum();
  if (!(z > 0.0)) fail_domain("generalized_gaussian: grid too coarse (no mass)");

  GeneralizedGaussian out{Density::probability(grid, v / z), z, b, a.alpha(), n, spec.C, radius2};

  // convergence guards: the grid covariance must reproduce C, and the Z
  // estimate must be stable under coarsening
  Eigen::MatrixXd cov = covariance(out.density);
  if ((cov - spec.C).cwiseAbs().maxCoeff() > 0.01 * spec.C.cwiseAbs().maxCoeff())
    fail_domain("generalized_gaussian: grid too coarse (covariance off target)");
  {
    Eigen::VectorXd half(n);
    for (int j = 0; j < n; ++j) {
      double m = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) m = std::max(m, std::abs(grid.coord(i)[j]));
      half[j] = m;
    }
    double z2 = grid_mass(shape, build_box(half, cell * 2.0, max_cells));
    if (std::abs(z2 - z) > 0.01 * z)
      fail_domain("generalized_gaussian: grid too coarse (mass not converged)");
  }
  return out;
}

double moment_entropy_gap(const Density& g, const GeneralizedGaussian& gg) {
  if (!same_space(g.space(), gg.density.space()))
    fail_domain("moment_entropy_gap: densities must share the grid");
  AlphaParam a(gg.alpha);
  Eigen::MatrixXd cov = covariance(g);
  if ((cov - gg.C).cwiseAbs().maxCoeff() > 0.01 * gg.C.cwiseAbs().maxCoeff())
    fail_domain("moment_entropy_gap: covariance of g does not match C");
  DivergenceValue div = alpha_relative_entropy_direct(g, gg.density, a);
  if (!div.finite) fail_domain("moment_entropy_gap: divergence is infinite");
  double rhs = renyi_entropy(gg.density, a) - renyi_entropy(g, a);
  return div.value - rhs;
}

}  // namespace aptk
