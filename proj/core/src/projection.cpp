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

#include "aptk/projection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Dense>

#include "aptk/lp.hpp"

namespace aptk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// ConstraintSet

ConstraintSet::ConstraintSet(WeightedSpace space, std::vector<LinearConstraint> equalities,
                             std::vector<LinearConstraint> inequalities,
                             std::vector<std::size_t> zero_support)
    : space_(std::move(space)),
      eqs_(std::move(equalities)),
      ineqs_(std::move(inequalities)),
      zeros_(std::move(zero_support)) {
  const Eigen::Index n = static_cast<Eigen::Index>(space_.size());
  for (const auto& c : eqs_)
    if (c.statistic.size() != n) fail_domain("ConstraintSet: statistic length mismatch");
  for (const auto& c : ineqs_)
    if (c.statistic.size() != n) fail_domain("ConstraintSet: statistic length mismatch");
  for (std::size_t i : zeros_)
    if (i >= space_.size()) fail_domain("ConstraintSet: zero_support index out of range");

  const Eigen::ArrayXd& w = space_.weights();
  Eigen::MatrixXd E(1 + eqs_.size() + zeros_.size(), n);
  Eigen::VectorXd d(E.rows());
  E.row(0) = w.matrix().transpose();
  d[0] = 1.0;
  for (std::size_t j = 0; j < eqs_.size(); ++j) {
    E.row(1 + j) = (eqs_[j].statistic.array() * w).matrix().transpose();
    d[1 + j] = eqs_[j].target;
  }
  for (std::size_t j = 0; j < zeros_.size(); ++j) {
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(n);
    row[static_cast<Eigen::Index>(zeros_[j])] = 1.0;
    E.row(1 + static_cast<Eigen::Index>(eqs_.size() + j)) = row;
    d[1 + static_cast<Eigen::Index>(eqs_.size() + j)] = 0.0;
  }
  Eigen::MatrixXd G(ineqs_.size(), n);
  Eigen::VectorXd h(G.rows());
  for (std::size_t j = 0; j < ineqs_.size(); ++j) {
    G.row(j) = (ineqs_[j].statistic.array() * w).matrix().transpose();
    h[j] = ineqs_[j].target;
  }
  poly_ = std::make_shared<Polytope>(std::move(E), std::move(d), std::move(G), std::move(h));
  if (!poly_->feasible()) fail(errc::infeasible, "ConstraintSet: infeasible constraints");
}

bool ConstraintSet::contains(const Density& p, double tol) const {
  if (!same_space(p.space(), space_)) return false;
  return poly_->contains(p.values().matrix(), tol);
}

namespace {
bool row_present(const std::vector<LinearConstraint>& rows, const LinearConstraint& c) {
  for (const auto& r : rows)
    if (r.target == c.target && r.statistic == c.statistic) return true;
  return false;
}
}  // namespace

bool ConstraintSet::nested_in(const ConstraintSet& outer) const {
  if (!same_space(space_, outer.space_)) return false;
  for (const auto& c : outer.eqs_)
    if (!row_present(eqs_, c)) return false;
  for (const auto& c : outer.ineqs_)
    if (!row_present(ineqs_, c)) return false;
  for (std::size_t i : outer.zeros_)
    if (std::find(zeros_.begin(), zeros_.end(), i) == zeros_.end()) return false;
  return true;
}

Density ConstraintSet::vector_to_density(const Eigen::VectorXd& x) const {
  Eigen::ArrayXd v = x.array().max(0.0);  // QP output can carry -1e-17 noise
  return Density::probability(space_, v);
}

// ---------------------------------------------------------------------------
// Objective

Eigen::ArrayXd objective_transform(const Density& r, const AlphaParam& a) {
  const double nr = alpha_norm(r, a);
  const double am1 = a.alpha() - 1.0;
  Eigen::ArrayXd g(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    double ri = r[i];
    if (ri == 0.0)
      g[static_cast<Eigen::Index>(i)] = am1 < 0.0 ? kInf : 0.0;
    else
      g[static_cast<Eigen::Index>(i)] = std::pow(ri / nr, am1);
  }
  return g;
}

namespace {

// Ratio objective F(p) = sgn(rho) (sum_i p_i g_i w_i) / ||p|| on the reduced
// coordinates; minimized in both regimes.
struct RatioObjective {
  Eigen::ArrayXd g, w;
  double alpha, sgn;

  // Iterates can carry -1e-22 noise from the polytope projection; negative
  // values are treated as 0 so fractional powers stay real.
  double norm(const Eigen::ArrayXd& x) const {
    return std::pow((x.max(0.0).pow(alpha) * w).sum(), 1.0 / alpha);
  }
  double eval(const Eigen::ArrayXd& x) const {
    double s = (x.max(0.0) * g * w).sum();
    return sgn * s / norm(x);
  }
  Eigen::VectorXd grad(const Eigen::ArrayXd& x) const {
    double s = (x.max(0.0) * g * w).sum();
    double n = norm(x);
    Eigen::ArrayXd t(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      // (x_i/n)^(alpha-1); clamped away from 0 for alpha < 1 where the power
      // blows up at the boundary
      double xi = std::max(x[i], 0.0);
      if (alpha < 1.0) xi = std::max(xi, 1e-12 * n);
      t[i] = std::pow(xi / n, alpha - 1.0);
    }
    return (sgn * (w * (g - (s / n) * t)) / n).matrix();
  }
};

struct PgdOutcome {
  Eigen::VectorXd x;
  double f = kInf;
  int iters = 0;
  bool converged = false;
};

PgdOutcome pgd_minimize(const RatioObjective& obj, const Polytope& poly, Eigen::VectorXd x0,
                        double tol, int max_iters) {
  PgdOutcome out;
  Eigen::VectorXd x = std::move(x0);
  double f = obj.eval(x.array());
  Eigen::VectorXd grad = obj.grad(x.array());
  double step = 1.0 / std::max(1.0, grad.norm());
  std::vector<double> hist{f};

  for (int it = 0; it < max_iters; ++it) {
    out.iters = it + 1;
    // stationarity measure with unit step (capped for boundary points where
    // the clamped gradient is huge, to protect the QP's precision)
    double unit = std::min(1.0, 10.0 * (1.0 + x.norm()) / std::max(grad.norm(), 1e-30));
    Eigen::VectorXd pg = poly.project(x - unit * grad, x) - x;
    double pg_norm = pg.norm() / unit;
    bool flat = hist.size() > 10 &&
                std::abs(hist[hist.size() - 11] - f) <= tol * (1.0 + std::abs(f));
    if (pg_norm <= tol && flat) {
      out.converged = true;
      break;
    }

    // Cap the trial point so the projection QP never sees huge inputs (their
    // cancellation would erode the constraint precision of the result).
    double s_eff = std::min(step, 10.0 * (1.0 + x.norm()) / std::max(grad.norm(), 1e-30));
    Eigen::VectorXd d = poly.project(x - s_eff * grad, x) - x;
    double gd = grad.dot(d);
    if (!(gd < -1e-18)) {
      if (pg_norm <= tol) {
        out.converged = true;
        break;
      }
      step = pg_norm > 0 ? 1.0 : step * 0.5;  // reset scaling and retry
      d = pg;
      gd = grad.dot(d);
      if (!(gd < 0.0)) {
        out.converged = pg_norm <= tol;
        break;
      }
    }

    // Armijo backtracking, c = 1e-4, factor 0.5; the negated test also
    // rejects NaN evaluations
    double t = 1.0;
    double f_new = obj.eval((x + t * d).array());
    while (!(f_new <= f + 1e-4 * t * gd) && t > 1e-14) {
      t *= 0.5;
      f_new = obj.eval((x + t * d).array());
    }
    if (!(f_new <= f)) {
      f_new = f;
      t = 0.0;
    }
    Eigen::VectorXd x_new = x + t * d;
    Eigen::VectorXd grad_new = obj.grad(x_new.array());

    // Barzilai-Borwein step for the next iteration, safeguarded
    Eigen::VectorXd dx = x_new - x;
    Eigen::VectorXd dg = grad_new - grad;
    double sy = dx.dot(dg);
    step = sy > 1e-18 ? std::clamp(dx.squaredNorm() / sy, 1e-12, 1e8)
                      : std::min(step * 2.0, 1e8);

    x = std::move(x_new);
    f = f_new;
    grad = std::move(grad_new);
    hist.push_back(f);
  }
  out.x = std::move(x);
  out.f = f;
  return out;
}

struct ReducedProblem {
  std::vector<std::size_t> keep;  // retained indices in the full space
  Polytope poly;
  RatioObjective obj;
};

ReducedProblem build_reduced(const Density& r, const ConstraintSet& e, const AlphaParam& a) {
  const std::size_t n = e.space().size();
  std::vector<bool> drop(n, false);
  for (std::size_t i : e.zero_support()) drop[i] = true;
  if (a.below_one())
    for (std::size_t i = 0; i < n; ++i)
      if (r[i] == 0.0) drop[i] = true;  // finite objective forces p_i = 0 here

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) keep.push_back(i);
  if (keep.empty())
    fail_domain("project: every feasible density has infinite divergence from r");

  const Polytope& full = e.polytope();
  auto restrict_cols = [&](const Eigen::MatrixXd& m) {
    Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
      out.col(static_cast<Eigen::Index>(c)) = m.col(static_cast<Eigen::Index>(keep[c]));
    return out;
  };
  // Zero-support equality rows become 0 = 0 after the restriction; harmless.
  Polytope reduced(restrict_cols(full.eq_lhs()), full.eq_rhs(), restrict_cols(full.in_lhs()),
                   full.in_rhs());

  Eigen::ArrayXd gfull = objective_transform(r, a);
  RatioObjective obj;
  obj.alpha = a.alpha();
  obj.sgn = a.sgn_rho();
  obj.g.resize(static_cast<Eigen::Index>(keep.size()));
  obj.w.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    obj.g[static_cast<Eigen::Index>(c)] = gfull[static_cast<Eigen::Index>(keep[c])];
    obj.w[static_cast<Eigen::Index>(c)] = e.space().weight(keep[c]);
  }
  return ReducedProblem{std::move(keep), std::move(reduced), std::move(obj)};
}

Eigen::VectorXd embed(const std::vector<std::size_t>& keep, std::size_t n,
                      const Eigen::VectorXd& x) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t c = 0; c < keep.size(); ++c)
    full[static_cast<Eigen::Index>(keep[c])] = x[static_cast<Eigen::Index>(c)];
  return full;
}

// Multi-restart driver shared by project() and uniqueness_probe().
struct MultiRestart {
  std::vector<PgdOutcome> runs;
  int best = -1;
};

MultiRestart run_restarts(const ReducedProblem& rp, const AlphaParam& a, const SolverOptions& opts,
                          bool all_random) {
  if (!rp.poly.feasible())
    fail_domain("project: no feasible density is supported inside supp(r)");
  // Degenerate overlap for alpha > 1: the linear part can vanish identically.
  if (!a.below_one()) {
    Eigen::VectorXd c = -(rp.obj.g * rp.obj.w).matrix();
    auto best = lp::minimize(rp.poly.eq_lhs(), rp.poly.eq_rhs(), rp.poly.in_lhs(), rp.poly.in_rhs(), c);
    if (best.feasible && -best.objective <= 1e-14)
      fail_domain("project: every feasible density has infinite divergence from r");
  }

  int n_restarts = std::max(1, opts.n_restarts);
  MultiRestart mr;
  mr.runs.resize(n_restarts);
  for (int j = 0; j < n_restarts; ++j) {
    Eigen::VectorXd x0;
    if (j == 0 && !all_random) {
      x0 = rp.poly.barycenter();
    } else {
      Rng rng = Rng::for_sample(opts.seed, static_cast<std::uint64_t>(j));
      x0 = rp.poly.sample(rng);
    }
    mr.runs[j] = pgd_minimize(rp.obj, rp.poly, std::move(x0), opts.tol, opts.max_iterations);
  }
  for (int j = 0; j < n_restarts; ++j) {
    if (mr.best < 0) {
      mr.best = j;
      continue;
    }
    const auto& cand = mr.runs[j];
    const auto& inc = mr.runs[mr.best];
    if ((cand.converged && !inc.converged) ||
        (cand.converged == inc.converged && cand.f < inc.f))
      mr.best = j;
  }
  return mr;
}

}  // namespace

ProjectionResult project(const Density& r, const ConstraintSet& e, const AlphaParam& a,
                         const SolverOptions& opts) {
  if (!same_space(r.space(), e.space())) fail_domain("project: reference lives on another space");
  if (!r.is_probability()) fail_domain("project: reference must be a probability density");

  ProjectionResult res{.q = r};
  const std::size_t n = e.space().size();

  if (e.contains(r, 1e-10)) {
    // The reference itself is feasible; the projection is r with value 0.
    res.value = 0.0;
    res.converged = true;
    res.restart_values.assign(1, 0.0);
  } else {
    ReducedProblem rp = build_reduced(r, e, a);
    MultiRestart mr = run_restarts(rp, a, opts, /*all_random=*/false);

    const auto& win = mr.runs[mr.best];
    res.q = e.vector_to_density(embed(rp.keep, n, win.x));
    double ratio = a.sgn_rho() * win.f;  // = sum (q/||q||) g w
    res.value = std::log(ratio) / a.rho();
    res.iterations = win.iters;
    res.converged = win.converged;
    for (const auto& run : mr.runs)
      res.restart_values.push_back(std::log(a.sgn_rho() * run.f) / a.rho());
    double agree = 0.0;
    for (std::size_t i = 0; i < mr.runs.size(); ++i)
      for (std::size_t j = i + 1; j < mr.runs.size(); ++j)
        agree = std::max(agree, 0.5 * ((mr.runs[i].x - mr.runs[j].x).array().abs() *
                                       rp.obj.w).sum());
    res.restarts_agreement = agree;
  }

  // Pythagorean optimality certificates on random feasible samples.
  res.certificate_residuals.reserve(opts.n_certificates);
  for (int s = 0; s < opts.n_certificates; ++s) {
    Rng rng = Rng::for_sample(opts.seed ^ 0xC3A5C85C97CB3127ull, static_cast<std::uint64_t>(s));
    Density p = e.vector_to_density(e.polytope().sample(rng));
    double resid = pythagorean_report(p, res.q, r, a).residual;
    res.certificate_residuals.push_back({static_cast<std::uint64_t>(s), resid});
  }
  return res;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

// Enumerates a barycentric grid over conv(verts) at resolution steps and
// keeps the lexicographically-least minimizer of `value`.
struct GridSearch {
  const std::vector<Eigen::VectorXd>* verts;
  double (*value)(const Eigen::VectorXd&, const void*);
  const void* ctx;
  double best_val = kInf;
  Eigen::VectorXd best_x;

  void consider(const Eigen::VectorXd& x) {
    double v = value(x, ctx);
    if (v < best_val ||
        (v == best_val && best_x.size() > 0 &&
         std::lexicographical_compare(x.data(), x.data() + x.size(), best_x.data(),
                                      best_x.data() + best_x.size()))) {
      best_val = v;
      best_x = x;
    }
  }
};

int affine_dimension(const std::vector<Eigen::VectorXd>& verts) {
  if (verts.size() <= 1) return 0;
  Eigen::MatrixXd diff(verts[0].size(), verts.size() - 1);
  for (std::size_t i = 1; i < verts.size(); ++i) diff.col(i - 1) = verts[i] - verts[0];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  double top = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  int d = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-9 * std::max(1.0, top)) ++d;
  return d;
}

void grid_segment(GridSearch& gs, const Eigen::VectorXd& a, const Eigen::VectorXd& b, int steps) {
  for (int k = 0; k <= steps; ++k) {
    double t = static_cast<double>(k) / steps;
    gs.consider((1.0 - t) * a + t * b);
  }
}

void grid_triangle(GridSearch& gs, const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                   const Eigen::VectorXd& c, int steps) {
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps - i; ++j) {
      double u = static_cast<double>(i) / steps;
      double v = static_cast<double>(j) / steps;
      gs.consider(a + u * (b - a) + v * (c - a));
    }
  }
}

// Convex-combination grid over all vertices (used for dimension >= 3; the
// vertex count is small there).
void grid_hull(GridSearch& gs, const std::vector<Eigen::VectorXd>& verts, int steps) {
  const std::size_t m = verts.size();
  std::vector<int> comp(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == m) {
      comp[pos] = left;
      Eigen::VectorXd x = Eigen::VectorXd::Zero(verts[0].size());
      for (std::size_t i = 0; i < m; ++i) x += (static_cast<double>(comp[i]) / steps) * verts[i];
      gs.consider(x);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      comp[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, steps);
}

void grid_polytope(GridSearch& gs, const std::vector<Eigen::VectorXd>& verts, int steps) {
  int d = affine_dimension(verts);
  if (d == 0 || verts.size() == 1) {
    gs.consider(verts[0]);
    return;
  }
  if (d == 1) {
    // extreme pair
    std::size_t ia = 0, ib = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        double dist = (verts[i] - verts[j]).norm();
        if (dist > best) {
          best = dist;
          ia = i;
          ib = j;
        }
      }
    grid_segment(gs, verts[ia], verts[ib], steps);
    return;
  }
  if (d == 2) {
    // order the polygon vertices by angle in a planar basis and fan it
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(verts[0].size());
    for (const auto& v : verts) centroid += v;
    centroid /= static_cast<double>(verts.size());
    Eigen::MatrixXd diff(verts[0].size(), verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) diff.col(i) = verts[i] - centroid;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff, Eigen::ComputeThinU);
    Eigen::VectorXd u = svd.matrixU().col(0), v = svd.matrixU().col(1);
    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      const Eigen::VectorXd di = verts[i] - centroid, dj = verts[j] - centroid;
      return std::atan2(di.dot(v), di.dot(u)) < std::atan2(dj.dot(v), dj.dot(u));
    });
    for (std::size_t k = 1; k + 1 < order.size(); ++k)
      grid_triangle(gs, verts[order[0]], verts[order[k]], verts[order[k + 1]], steps);
    return;
  }
  // d >= 3: cap the per-axis resolution so the composition count stays sane
  int capped = steps;
  while (capped > 4) {
    double count = 1.0;
    for (std::size_t i = 1; i < verts.size(); ++i) count *= (capped + i) / static_cast<double>(i);
    if (count <= 2e6) break;
    capped /= 2;
  }
  grid_hull(gs, verts, capped);
}

struct OracleCtx {
  const ConstraintSet* e;
  const Density* r;
  const AlphaParam* a;
};

double oracle_value(const Eigen::VectorXd& x, const void* ctx) {
  const auto* oc = static_cast<const OracleCtx*>(ctx);
  return alpha_relative_entropy_direct(oc->e->vector_to_density(x), *oc->r, *oc->a).value;
}

}  // namespace

Density brute_force_project(const Density& r, const ConstraintSet& e, const AlphaParam& a,
                            double grid_step, double refine_step) {
  if (e.space().size() > 4) fail_domain("brute_force_project: support larger than 4 points");
  if (!(grid_step >= 1e-5)) fail_domain("brute_force_project: grid_step must be >= 1e-5");
  if (!(refine_step <= grid_step)) refine_step = grid_step;

  std::vector<Eigen::VectorXd> hull = e.polytope().vertices();
  if (hull.empty()) fail(errc::infeasible, "brute_force_project: infeasible constraints");

  OracleCtx ctx{&e, &r, &a};
  GridSearch gs{&hull, &oracle_value, &ctx};
  const int steps = std::max(1, static_cast<int>(std::lround(1.0 / grid_step)));

  grid_polytope(gs, hull, steps);
  if (!std::isfinite(gs.best_val))
    fail_domain("brute_force_project: every grid point has infinite divergence");

  constexpr double kShrink = 0.2;
  double eff_step = grid_step;
  while (eff_step > refine_step) {
    Eigen::VectorXd center = gs.best_x;
    for (auto& v : hull) v = center + kShrink * (v - center);
    eff_step *= kShrink;
    grid_polytope(gs, hull, steps);
  }
  return e.vector_to_density(gs.best_x);
}

// ---------------------------------------------------------------------------
// Probes

double uniqueness_probe(const Density& r, const ConstraintSet& e, const AlphaParam& a,
                        int n_restarts, std::uint64_t seed) {
  ReducedProblem rp = build_reduced(r, e, a);
  SolverOptions opts;
  opts.n_restarts = n_restarts > 0 ? n_restarts : 16;
  opts.seed = seed;
  MultiRestart mr = run_restarts(rp, a, opts, /*all_random=*/true);
  double agree = 0.0;
  for (std::size_t i = 0; i < mr.runs.size(); ++i)
    for (std::size_t j = i + 1; j < mr.runs.size(); ++j)
      agree = std::max(agree,
                       0.5 * ((mr.runs[i].x - mr.runs[j].x).array().abs() * rp.obj.w).sum());
  return agree;
}

IteratedProjection iterated_projection_check(const Density& r, const ConstraintSet& e,
                                             const ConstraintSet& e1, const AlphaParam& a,
                                             const SolverOptions& opts) {
  if (!e1.nested_in(e))
    fail_domain("iterated_projection_check: E1 is not nested inside E");
  ProjectionResult q = project(r, e, a, opts);
  ProjectionResult q1 = project(r, e1, a, opts);
  ProjectionResult q1d = project(q.q, e1, a, opts);
  double gap = total_variation(q1.q, q1d.q);
  return IteratedProjection{q.q, q1.q, q1d.q, gap};
}

double projection_characterization_check(const Density& q, const Density& r,
                                         const ConstraintSet& e, const AlphaParam& a,
                                         int n_samples, std::uint64_t seed) {
  if (!e.contains(q, 1e-6)) fail_domain("projection_characterization_check: q is not in E");
  double worst = kInf;
  auto consider = [&](const Density& p) {
    double resid = pythagorean_report(p, q, r, a).residual;
    if (!std::isnan(resid)) worst = std::min(worst, resid);
  };
  if (e.polytope().vertices_available())
    for (const auto& v : e.polytope().vertices()) consider(e.vector_to_density(v));
  for (int s = 0; s < n_samples; ++s) {
    Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(s));
    consider(e.vector_to_density(e.polytope().sample(rng)));
  }
  return worst;
}

}  // namespace aptk
