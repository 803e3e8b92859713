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

#include <cstdint>
#include <memory>
#include <vector>

#include "aptk/geometry.hpp"
#include "aptk/polytope.hpp"

namespace aptk {

// One linear moment constraint: sum_i statistic[i] p_i w_i  (= or <=) target.
struct LinearConstraint {
  Eigen::VectorXd statistic;
  double target;
};

// Convex feasible set E of probability densities cut by linear moment
// constraints, an optional support restriction, and the implicit simplex
// constraints (p >= 0, mass 1). Feasibility is decided at construction;
// empty sets are rejected.
class ConstraintSet {
 public:
  ConstraintSet(WeightedSpace space, std::vector<LinearConstraint> equalities,
                std::vector<LinearConstraint> inequalities = {},
                std::vector<std::size_t> zero_support = {});

  const WeightedSpace& space() const { return space_; }
  const std::vector<LinearConstraint>& equalities() const { return eqs_; }
  const std::vector<LinearConstraint>& inequalities() const { return ineqs_; }
  const std::vector<std::size_t>& zero_support() const { return zeros_; }

  // The feasible region in density coordinates (mass row included).
  const Polytope& polytope() const { return *poly_; }

  bool contains(const Density& p, double tol = 1e-9) const;

  // Structural check that this set's constraint list includes all of
  // `outer`'s constraints (hence *this is a subset of outer).
  bool nested_in(const ConstraintSet& outer) const;

  Density vector_to_density(const Eigen::VectorXd& x) const;

 private:
  WeightedSpace space_;
  std::vector<LinearConstraint> eqs_, ineqs_;
  std::vector<std::size_t> zeros_;
  std::shared_ptr<Polytope> poly_;
};

struct SolverOptions {
  double tol = 1e-8;          // projected-gradient norm / relative objective change
  int max_iterations = 100000;
  int n_restarts = 16;
  int n_certificates = 200;
  std::uint64_t seed = 0;
};

struct CertificateSample {
  std::uint64_t sample_id;
  double residual;
};

struct ProjectionResult {
  Density q;
  double value = 0.0;          // I_alpha(Q, R) in nats
  int iterations = 0;          // iterations of the winning restart
  bool converged = false;
  std::vector<CertificateSample> certificate_residuals;
  double restarts_agreement = 0.0;  // max pairwise TV between restart solutions
  std::vector<double> restart_values;
};

// g_i = (r_i / ||r||)^(alpha - 1). At r_i = 0 the entry is 0 for alpha > 1
// and +infinity for alpha < 1 (such points are forced out of any
// finite-divergence solution).
Eigen::ArrayXd objective_transform(const Density& r, const AlphaParam& a);

// I_alpha-projection of r onto E: minimizes the ratio objective
// sgn(rho) sum_i p_i g_i w_i / ||p|| by projected gradient over the feasible
// polytope, multi-restart, with Pythagorean certificates.
ProjectionResult project(const Density& r, const ConstraintSet& e, const AlphaParam& a,
                         const SolverOptions& opts = {});

// Exhaustive grid oracle over the feasible polytope (|support| <= 4): grids
// the convex hull of the exact vertex set at `grid_step`, then shrinks the
// hull toward the incumbent until the effective step reaches `refine_step`.
// Ties broken lexicographically by density vector.
Density brute_force_project(const Density& r, const ConstraintSet& e, const AlphaParam& a,
                            double grid_step, double refine_step = 1e-5);

// Max pairwise TV distance among solutions from n_restarts random feasible
// initializations.
double uniqueness_probe(const Density& r, const ConstraintSet& e, const AlphaParam& a,
                        int n_restarts, std::uint64_t seed);

struct IteratedProjection {
  Density q;
  Density q1;
  Density q1_direct;
  double tv_gap;
};

// Q = proj(R,E), Q1 = proj(R,E1), Q1_direct = proj(Q,E1) for nested E1 of E.
IteratedProjection iterated_projection_check(const Density& r, const ConstraintSet& e,
                                             const ConstraintSet& e1, const AlphaParam& a,
                                             const SolverOptions& opts = {});

// Min Pythagorean residual of (P, q, r) over sampled feasible P (all exact
// vertices when available plus n_samples random points). q is accepted as the
// projection when the result is >= -1e-6.
double projection_characterization_check(const Density& q, const Density& r,
                                         const ConstraintSet& e, const AlphaParam& a,
                                         int n_samples, std::uint64_t seed);

}  // namespace aptk
