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

#include "aptk/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace aptk::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// Dense tableau simplex with Bland's rule. Columns [0, n) are structural,
// the last column is the rhs; `basis[r]` is the basic column of row r.
struct Tableau {
  Eigen::MatrixXd t;          // (m+1) x (n+1); last row is the objective
  std::vector<int> basis;
  int m, n;

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int r = 0; r <= m; ++r) {
      if (r == row) continue;
      double f = t(r, col);
      if (f != 0.0) t.row(r) -= f * t.row(row);
    }
    basis[row] = col;
  }

  // Returns false when unbounded.
  bool run(const std::vector<bool>& allowed) {
    for (long iter = 0;; ++iter) {
      if (iter > 50000L * (m + n + 1)) return true;  // stalled; caller re-checks feasibility
      int col = -1;
      for (int j = 0; j < n; ++j) {
        if (!allowed[j]) continue;
        if (t(m, j) < -kPivotTol) { col = j; break; }  // Bland: lowest index
      }
      if (col < 0) return true;
      int row = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        if (t(r, col) > kPivotTol) {
          double ratio = t(r, n) / t(r, col);
          if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 &&
                                       (row < 0 || basis[r] < basis[row]))) {
            best = ratio;
            row = r;
          }
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  Result res;

  // Phase 1 with one artificial per row; rhs normalized nonnegative.
  Tableau tb;
  tb.m = m;
  tb.n = n + m;
  tb.t = Eigen::MatrixXd::Zero(m + 1, tb.n + 1);
  for (int r = 0; r < m; ++r) {
    double s = b[r] < 0.0 ? -1.0 : 1.0;
    tb.t.block(r, 0, 1, n) = s * A.row(r);
    tb.t(r, n + r) = 1.0;
    tb.t(r, tb.n) = s * b[r];
  }
  tb.basis.resize(m);
  for (int r = 0; r < m; ++r) tb.basis[r] = n + r;
  // objective: sum of artificials, expressed in nonbasic terms
  for (int r = 0; r < m; ++r) tb.t.row(m) -= tb.t.row(r);
  for (int r = 0; r < m; ++r) tb.t(m, n + r) = 0.0;

  std::vector<bool> allowed(tb.n, true);
  tb.run(allowed);
  if (tb.t(m, tb.n) < -kFeasTol) {  // phase-1 optimum is -sum(artificials)
    res.feasible = false;
    return res;
  }

  // Drive leftover artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (tb.basis[r] >= n) {
      int col = -1;
      for (int j = 0; j < n; ++j)
        if (std::abs(tb.t(r, j)) > 1e-8) { col = j; break; }
      if (col >= 0) tb.pivot(r, col);
      // else the row is redundant; the artificial stays basic at value ~0
    }
  }

  // Phase 2: restrict to structural columns, install the real objective.
  for (int j = n; j < tb.n; ++j) allowed[j] = false;
  tb.t.row(m).setZero();
  tb.t.block(m, 0, 1, n) = c.transpose();
  for (int r = 0; r < m; ++r)
    if (tb.basis[r] < n) tb.t.row(m) -= tb.t(m, tb.basis[r]) * tb.t.row(r);

  bool bounded = tb.run(allowed);

  res.feasible = true;
  res.bounded = bounded;
  res.x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r)
    if (tb.basis[r] < n) res.x[tb.basis[r]] = tb.t(r, tb.n);
  res.objective = c.dot(res.x);
  return res;
}

namespace {

// Append slack variables for G x <= h.
void augment(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::MatrixXd& G,
             const Eigen::VectorXd& h, Eigen::MatrixXd& Afull, Eigen::VectorXd& bfull) {
  const int me = static_cast<int>(A.rows());
  const int mi = static_cast<int>(G.rows());
  const int n = static_cast<int>(A.cols() > 0 ? A.cols() : G.cols());
  Afull = Eigen::MatrixXd::Zero(me + mi, n + mi);
  bfull = Eigen::VectorXd::Zero(me + mi);
  if (me > 0) {
    Afull.block(0, 0, me, n) = A;
    bfull.head(me) = b;
  }
  if (mi > 0) {
    Afull.block(me, 0, mi, n) = G;
    Afull.block(me, n, mi, mi) = Eigen::MatrixXd::Identity(mi, mi);
    bfull.tail(mi) = h;
  }
}

}  // namespace

Result feasible_point(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::MatrixXd& G,
                      const Eigen::VectorXd& h) {
  Eigen::MatrixXd Af;
  Eigen::VectorXd bf;
  augment(A, b, G, h, Af, bf);
  Result r = solve(Af, bf, Eigen::VectorXd::Zero(Af.cols()));
  if (r.feasible) r.x = r.x.head(A.cols() > 0 ? A.cols() : G.cols()).eval();
  return r;
}

Result minimize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::MatrixXd& G,
                const Eigen::VectorXd& h, const Eigen::VectorXd& c) {
  Eigen::MatrixXd Af;
  Eigen::VectorXd bf;
  augment(A, b, G, h, Af, bf);
  Eigen::VectorXd cf = Eigen::VectorXd::Zero(Af.cols());
  cf.head(c.size()) = c;
  Result r = solve(Af, bf, cf);
  if (r.feasible) r.x = r.x.head(c.size()).eval();
  return r;
}

}  // namespace aptk::lp
