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

#include "aptk/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "aptk/error.hpp"
#include "aptk/lp.hpp"

namespace aptk {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

// Exact solve of a square rational system by Gaussian elimination.
// Returns false when singular.
bool rat_solve(RatMat m, RatVec rhs, RatVec& out) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
  return true;
}

std::size_t rat_rank(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::string rat_key(const RatVec& v) {
  std::string k;
  for (const auto& x : v) {
    k += x.str();
    k += '|';
  }
  return k;
}

}  // namespace

Polytope::Polytope(Eigen::MatrixXd eq_lhs, Eigen::VectorXd eq_rhs, Eigen::MatrixXd in_lhs,
                   Eigen::VectorXd in_rhs)
    : E_(std::move(eq_lhs)), G_(std::move(in_lhs)), d_(std::move(eq_rhs)), h_(std::move(in_rhs)) {
  n_ = static_cast<std::size_t>(E_.cols() > 0 ? E_.cols() : G_.cols());
  if (E_.rows() != d_.size() || G_.rows() != h_.size())
    fail_domain("Polytope: constraint matrix/rhs size mismatch");
  if (G_.rows() > 0 && E_.rows() > 0 && G_.cols() != E_.cols())
    fail_domain("Polytope: equality and inequality blocks disagree on dimension");
}

void Polytope::solve_feasibility() const {
  auto r = lp::feasible_point(E_, d_, G_, h_);
  feasible_ = r.feasible;
  if (r.feasible) feasible_pt_ = r.x;
}

bool Polytope::feasible() const {
  if (!feasible_) solve_feasibility();
  return *feasible_;
}

Eigen::VectorXd Polytope::feasible_point() const {
  if (!feasible()) fail(errc::infeasible, "Polytope: infeasible constraint set");
  return *feasible_pt_;
}

bool Polytope::contains(const Eigen::VectorXd& x, double tol) const {
  if (static_cast<std::size_t>(x.size()) != n_) return false;
  if ((x.array() < -tol).any()) return false;
  for (Eigen::Index r = 0; r < E_.rows(); ++r)
    if (std::abs(E_.row(r).dot(x) - d_[r]) > tol * (1.0 + std::abs(d_[r]))) return false;
  for (Eigen::Index r = 0; r < G_.rows(); ++r)
    if (G_.row(r).dot(x) - h_[r] > tol * (1.0 + std::abs(h_[r]))) return false;
  return true;
}

void Polytope::enumerate_vertices() const {
  const std::size_t n = n_;
  const std::size_t me = static_cast<std::size_t>(E_.rows());
  const std::size_t mi = static_cast<std::size_t>(G_.rows());

  // Exact rational copies; doubles convert exactly.
  RatMat eq(me, RatVec(n));
  RatVec eqr(me);
  for (std::size_t r = 0; r < me; ++r) {
    for (std::size_t c = 0; c < n; ++c) eq[r][c] = Rat(E_(r, c));
    eqr[r] = Rat(d_[r]);
  }
  // Candidate active rows: the mi inequalities then the n bounds x_i >= 0.
  auto cand_row = [&](std::size_t j, RatVec& row, Rat& rhs) {
    if (j < mi) {
      for (std::size_t c = 0; c < n; ++c) row[c] = Rat(G_(j, c));
      rhs = Rat(h_[j]);
    } else {
      for (std::size_t c = 0; c < n; ++c) row[c] = 0;
      row[j - mi] = -1;
      rhs = 0;
    }
  };

  std::size_t eq_rank = rat_rank(eq);
  if (eq_rank > n) eq_rank = n;
  const std::size_t k = n - eq_rank;
  const std::size_t ncand = mi + n;

  std::map<std::string, Eigen::VectorXd> found;
  std::vector<std::size_t> pick(k);
  RatVec row(n);
  Rat rhs;

  // Iterate over all k-subsets of candidate rows.
  auto attempt = [&]() {
    RatMat m = eq;
    RatVec b = eqr;
    for (std::size_t idx : pick) {
      cand_row(idx, row, rhs);
      m.push_back(row);
      b.push_back(rhs);
    }
    // Reduce to a square system: keep rows forming a basis.
    if (m.size() != n) {
      // pick n independent rows by elimination bookkeeping
      RatMat sq;
      RatVec sqr;
      RatMat work;
      for (std::size_t r = 0; r < m.size(); ++r) {
        work.push_back(m[r]);
        if (rat_rank(work) == work.size()) {
          sq.push_back(m[r]);
          sqr.push_back(b[r]);
        } else {
          work.pop_back();
        }
        if (sq.size() == n) break;
      }
      if (sq.size() != n) return;
      m = std::move(sq);
      b = std::move(sqr);
    }
    RatVec x;
    if (!rat_solve(m, b, x)) return;
    // Exact feasibility check.
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] < 0) return;
    for (std::size_t r = 0; r < me; ++r) {
      Rat s = 0;
      for (std::size_t c = 0; c < n; ++c) s += eq[r][c] * x[c];
      if (s != eqr[r]) return;
    }
    for (std::size_t j = 0; j < mi; ++j) {
      cand_row(j, row, rhs);
      Rat s = 0;
      for (std::size_t c = 0; c < n; ++c) s += row[c] * x[c];
      if (s > rhs) return;
    }
    std::string key = rat_key(x);
    if (found.count(key)) return;
    Eigen::VectorXd xd(n);
    for (std::size_t i = 0; i < n; ++i) xd[i] = static_cast<double>(x[i]);
    found.emplace(std::move(key), std::move(xd));
  };

  // k-subset enumeration (k is tiny here).
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      pick = idx;
      attempt();
      return;
    }
    for (std::size_t j = start; j < ncand; ++j) {
      idx[depth] = j;
      rec(j + 1, depth + 1);
    }
  };
  if (k == 0) {
    pick.clear();
    attempt();
  } else {
    rec(0, 0);
  }

  std::vector<Eigen::VectorXd> verts;
  verts.reserve(found.size());
  for (auto& kv : found) verts.push_back(std::move(kv.second));
  vertices_ = std::move(verts);
}

const std::vector<Eigen::VectorXd>& Polytope::vertices() const {
  if (!vertices_available()) fail_domain("Polytope: exact vertex enumeration limited to small dimensions");
  if (!vertices_) enumerate_vertices();
  return *vertices_;
}

Eigen::VectorXd Polytope::barycenter() const {
  if (vertices_available()) {
    const auto& v = vertices();
    if (v.empty()) fail(errc::infeasible, "Polytope: infeasible constraint set");
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n_);
    for (const auto& x : v) c += x;
    return c / static_cast<double>(v.size());
  }
  // Average LP vertices optimizing +/- each coordinate.
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n_);
  int cnt = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd obj = Eigen::VectorXd::Zero(n_);
      obj[i] = s;
      auto r = lp::minimize(E_, d_, G_, h_, obj);
      if (!r.feasible) fail(errc::infeasible, "Polytope: infeasible constraint set");
      c += r.x;
      ++cnt;
    }
  }
  return c / cnt;
}

// Primal active-set solve of min ||x - y||^2 over the polytope, starting from
// a feasible point. Inequality rows are [G; -I] with rhs [h; 0].
Eigen::VectorXd Polytope::project(const Eigen::VectorXd& y, const Eigen::VectorXd& start) const {
  const Eigen::Index n = static_cast<Eigen::Index>(n_);
  const Eigen::Index me = E_.rows();
  const Eigen::Index mi = G_.rows() + n;

  auto grow = [&](Eigen::Index j) -> Eigen::RowVectorXd {
    if (j < G_.rows()) return G_.row(j);
    Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(n);
    r[j - G_.rows()] = -1.0;
    return r;
  };
  auto ghs = [&](Eigen::Index j) { return j < G_.rows() ? h_[j] : 0.0; };

  Eigen::VectorXd x = start;
  std::vector<Eigen::Index> W;
  for (Eigen::Index j = 0; j < mi; ++j)
    if (std::abs(grow(j).dot(x) - ghs(j)) <= 1e-12) W.push_back(j);

  const int max_iter = 100 * static_cast<int>(n + mi + me) + 100;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Eigen::Index mw = me + static_cast<Eigen::Index>(W.size());
    Eigen::MatrixXd M(mw, n);
    Eigen::VectorXd rhs(mw);
    M.topRows(me) = E_;
    rhs.head(me) = d_;
    for (std::size_t i = 0; i < W.size(); ++i) {
      M.row(me + static_cast<Eigen::Index>(i)) = grow(W[i]);
      rhs[me + static_cast<Eigen::Index>(i)] = ghs(W[i]);
    }

    Eigen::VectorXd lambda;
    Eigen::VectorXd xstar;
    if (mw == 0) {
      xstar = y;
    } else {
      // Minimal-norm multipliers via a complete orthogonal decomposition so
      // redundant active rows stay harmless.
      Eigen::MatrixXd MMt = M * M.transpose();
      Eigen::VectorXd q = M * y - rhs;
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(MMt);
      lambda = cod.solve(q);
      xstar = y - M.transpose() * lambda;
    }

    Eigen::VectorXd dvec = xstar - x;
    if (dvec.lpNorm<Eigen::Infinity>() <= 1e-13 * (1.0 + x.lpNorm<Eigen::Infinity>())) {
      // Stationary on the working set; check multiplier signs.
      int worst = -1;
      double worst_val = -1e-10;
      for (std::size_t i = 0; i < W.size(); ++i) {
        double l = lambda[me + static_cast<Eigen::Index>(i)];
        if (l < worst_val) {
          worst_val = l;
          worst = static_cast<int>(i);
        }
      }
      if (worst < 0) return xstar;
      W.erase(W.begin() + worst);
      continue;
    }

    // Largest feasible step toward xstar.
    double t = 1.0;
    Eigen::Index blocker = -1;
    for (Eigen::Index j = 0; j < mi; ++j) {
      if (std::find(W.begin(), W.end(), j) != W.end()) continue;
      double gd = grow(j).dot(dvec);
      if (gd > 1e-14) {
        double tj = (ghs(j) - grow(j).dot(x)) / gd;
        if (tj < t) {
          t = std::max(tj, 0.0);
          blocker = j;
        }
      }
    }
    x += t * dvec;
    if (blocker >= 0) W.push_back(blocker);
    // An unblocked full step lands on the EQP solution; the next pass hits
    // the stationary branch and validates the multiplier signs before
    // declaring the projection done.
  }
  // Active-set stalled (degenerate geometry); fall back to Dykstra.
  return project_dykstra(y);
}

Eigen::VectorXd Polytope::project_dykstra(const Eigen::VectorXd& y) const {
  const Eigen::Index n = static_cast<Eigen::Index>(n_);
  // Precompute the affine projector for {E x = d}.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  if (E_.rows() > 0) cod.compute(E_ * E_.transpose());

  const Eigen::Index sets = 2 + G_.rows();
  std::vector<Eigen::VectorXd> inc(sets, Eigen::VectorXd::Zero(n));
  Eigen::VectorXd x = y;
  for (int sweep = 0; sweep < 100000; ++sweep) {
    Eigen::VectorXd prev = x;
    for (Eigen::Index s = 0; s < sets; ++s) {
      Eigen::VectorXd z = x + inc[s];
      Eigen::VectorXd proj;
      if (s == 0) {
        if (E_.rows() > 0)
          proj = z - E_.transpose() * cod.solve(E_ * z - d_);
        else
          proj = z;
      } else if (s == 1) {
        proj = z.cwiseMax(0.0);
      } else {
        Eigen::Index r = s - 2;
        double viol = G_.row(r).dot(z) - h_[r];
        proj = viol > 0.0 ? (z - viol / G_.row(r).squaredNorm() * G_.row(r).transpose()).eval() : z;
      }
      inc[s] = z - proj;
      x = proj;
    }
    if ((x - prev).lpNorm<Eigen::Infinity>() < 1e-14) break;
  }
  return x;
}

Eigen::VectorXd Polytope::sample(Rng& rng) const {
  if (vertices_available()) {
    const auto& v = vertices();
    if (v.empty()) fail(errc::infeasible, "Polytope: infeasible constraint set");
    Eigen::ArrayXd w = rng.dirichlet(static_cast<Eigen::Index>(v.size()));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (std::size_t i = 0; i < v.size(); ++i) x += w[static_cast<Eigen::Index>(i)] * v[i];
    return x;
  }
  Eigen::VectorXd start = feasible_point();
  Eigen::VectorXd target = rng.dirichlet(static_cast<Eigen::Index>(n_)).matrix();
  return project(target, start);
}

}  // namespace aptk
