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

#include <Eigen/Core>

namespace aptk::lp {

struct Result {
  bool feasible = false;
  bool bounded = true;
  Eigen::VectorXd x;        // basic feasible solution (a vertex)
  double objective = 0.0;
};

// Solves min c.x subject to A x = b, x >= 0 with a dense two-phase simplex
// (Bland's rule). Intended for the small instances that arise here; the
// returned point is a vertex of the feasible polyhedron.
Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

// Feasibility of {A x = b, G x <= h, x >= 0} via slack variables and phase 1.
// On success x holds a feasible vertex of the augmented system truncated to
// the original variables.
Result feasible_point(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                      const Eigen::MatrixXd& G, const Eigen::VectorXd& h);

// min c.x over the same region.
Result minimize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::MatrixXd& G,
                const Eigen::VectorXd& h, const Eigen::VectorXd& c);

}  // namespace aptk::lp
