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

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "aptk/rng.hpp"

namespace aptk {

// Vertex enumeration switches to exact rational arithmetic at or below this
// dimension.
inline constexpr std::size_t kExactVertexLimit = 6;

// Bounded region {x >= 0, E x = d, G x <= h} in R^n. Nonnegativity is
// implicit and does not appear in G.
class Polytope {
 public:
  Polytope(Eigen::MatrixXd eq_lhs, Eigen::VectorXd eq_rhs, Eigen::MatrixXd in_lhs,
           Eigen::VectorXd in_rhs);

  std::size_t dim() const { return n_; }
  const Eigen::MatrixXd& eq_lhs() const { return E_; }
  const Eigen::VectorXd& eq_rhs() const { return d_; }
  const Eigen::MatrixXd& in_lhs() const { return G_; }
  const Eigen::VectorXd& in_rhs() const { return h_; }

  bool feasible() const;
  // A feasible vertex (from the phase-1 LP). Throws when infeasible.
  Eigen::VectorXd feasible_point() const;

  bool contains(const Eigen::VectorXd& x, double tol) const;

  // Exact vertex set (rational arithmetic), available when dim <= limit.
  bool vertices_available() const { return n_ <= kExactVertexLimit; }
  const std::vector<Eigen::VectorXd>& vertices() const;

  // Average of the vertex set when available, otherwise an average of LP
  // vertices optimizing +/- each coordinate.
  Eigen::VectorXd barycenter() const;

  // Euclidean projection of y, active-set QP warm-started from the feasible
  // point `start`.
  Eigen::VectorXd project(const Eigen::VectorXd& y, const Eigen::VectorXd& start) const;

  // Random feasible point: Dirichlet weights over the vertices when they are
  // available, otherwise the projection of a random scaled Dirichlet point.
  Eigen::VectorXd sample(Rng& rng) const;

 private:
  std::size_t n_;
  Eigen::MatrixXd E_, G_;
  Eigen::VectorXd d_, h_;
  mutable std::optional<bool> feasible_;
  mutable std::optional<Eigen::VectorXd> feasible_pt_;
  mutable std::optional<std::vector<Eigen::VectorXd>> vertices_;

  void solve_feasibility() const;
  void enumerate_vertices() const;
  Eigen::VectorXd project_dykstra(const Eigen::VectorXd& y) const;
};

}  // namespace aptk
