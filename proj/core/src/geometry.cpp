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

#include "aptk/geometry.hpp"

#include <cmath>
#include <limits>

namespace aptk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// I_f(X', Y') - f(1) for probability densities x, y. Nonnegative by Jensen.
double bracket(const Density& x, const Density& y, const AlphaParam& a) {
  double v = f_divergence(tilt(x, a), tilt(y, a), a);
  return v - a.sgn_rho();
}
}  // namespace

Density mix(const Density& p, const Density& q, double lambda) {
  if (!same_space(p.space(), q.space())) fail_domain("mix: densities live on different spaces");
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail_domain("mix: lambda must lie in [0,1]");
  return Density::probability(p.space(), lambda * p.values() + (1.0 - lambda) * q.values());
}

SegmentPoint SegmentPoint::make(Density p, Density q, double lambda) {
  Density pl = mix(p, q, lambda);
  return SegmentPoint{std::move(p), std::move(q), lambda, std::move(pl)};
}

Density r_combine(const Density& p1, const Density& p2, double lambda, const AlphaParam& a) {
  if (!same_space(p1.space(), p2.space())) fail_domain("r_combine: densities live on different spaces");
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail_domain("r_combine: lambda must lie in [0,1]");
  double c1 = lambda / alpha_norm(p1, a);
  double c2 = (1.0 - lambda) / alpha_norm(p2, a);
  return Density::probability(p1.space(), (c1 * p1.values() + c2 * p2.values()) / (c1 + c2));
}

double minkowski_scale(const Density& p1, const Density& p2, double lambda, const AlphaParam& a) {
  double c1 = lambda / alpha_norm(p1, a);
  double c2 = (1.0 - lambda) / alpha_norm(p2, a);
  return (c1 + c2) * alpha_norm(r_combine(p1, p2, lambda, a), a);
}

ParallelogramTerms parallelogram_terms(const Density& p1, const Density& p2, const Density& r,
                                       double lambda, const AlphaParam& a) {
  Density r12 = r_combine(p1, p2, lambda, a);
  double b1r = bracket(p1, r, a);
  double b2r = bracket(p2, r, a);
  double b1m = bracket(p1, r12, a);
  double b2m = bracket(p2, r12, a);
  double bmr = bracket(r12, r, a);
  if (!std::isfinite(b1r) || !std::isfinite(b2r) || !std::isfinite(b1m) || !std::isfinite(b2m) ||
      !std::isfinite(bmr))
    fail_domain("parallelogram_terms: infinite bracket term");
  ParallelogramTerms t;
  t.lhs = lambda * (b1r - b1m) + (1.0 - lambda) * (b2r - b2m);
  t.rhs = bmr;
  t.scale = minkowski_scale(p1, p2, lambda, a);
  return t;
}

double parallelogram_gap(const Density& p1, const Density& p2, const Density& r, double lambda,
                         const AlphaParam& a) {
  return parallelogram_terms(p1, p2, r, lambda, a).gap();
}

PythagoreanReport pythagorean_report(const Density& p, const Density& q, const Density& r,
                                     const AlphaParam& a) {
  PythagoreanReport rep;
  rep.i_pr = alpha_relative_entropy_direct(p, r, a).value;
  rep.i_pq = alpha_relative_entropy_direct(p, q, a).value;
  rep.i_qr = alpha_relative_entropy_direct(q, r, a).value;
  rep.finite = std::isfinite(rep.i_pr) && std::isfinite(rep.i_pq) && std::isfinite(rep.i_qr);
  rep.residual = rep.i_pr - rep.i_pq - rep.i_qr;  // may be inf or NaN
  return rep;
}

bool segment_min_check(const Density& p, const Density& q, const Density& r, const AlphaParam& a,
                       const std::vector<double>& lambda_grid) {
  double iqr = alpha_relative_entropy_direct(q, r, a).value;
  double lo = kInf;
  for (double l : lambda_grid)
    lo = std::min(lo, alpha_relative_entropy_direct(mix(p, q, l), r, a).value);
  return lo >= iqr - 1e-10;
}

std::vector<double> default_lambda_grid() {
  return {0.0, 1e-4, 1e-3, 1e-2, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

double segment_divergence_derivative(const Density& p, const Density& q, const Density& r,
                                     const AlphaParam& a) {
  if (!same_space(p.space(), q.space()) || !same_space(p.space(), r.space()))
    fail_domain("segment_divergence_derivative: densities live on different spaces");
  const double am1 = a.alpha() - 1.0;
  const double sgn = a.sgn_rho();
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] == 0.0) fail_domain("segment_divergence_derivative: q must have full support");

  const double nr = alpha_norm(r, a);
  const double nq = alpha_norm(q, a);

  // s(0), s'(0) against (r')^(-rho) = (r/||r||)^(alpha-1)
  double s0 = 0.0, sd0 = 0.0, td_int = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double w = p.space().weight(i);
    double ri = r[i];
    double gi;
    if (ri == 0.0) {
      if (am1 < 0.0) {
        if (p[i] > 0.0 || q[i] > 0.0)
          fail_domain("segment_divergence_derivative: infinite integral off supp(r)");
        continue;
      }
      gi = 0.0;
    } else {
      gi = std::pow(ri / nr, am1);
    }
    s0 += q[i] * gi * w;
    sd0 += (p[i] - q[i]) * gi * w;
    td_int += p[i] * std::pow(q[i] / nq, am1) * w;
  }
  s0 *= sgn;
  sd0 *= sgn;
  double t0 = nq;
  double td0 = td_int - nq;
  return (t0 * sd0 - s0 * td0) / (t0 * t0);
}

double segment_divergence_derivative_fd(const Density& p, const Density& q, const Density& r,
                                        const AlphaParam& a, double step) {
  if (!(step > 0.0 && step < 1.0)) fail_domain("segment_divergence_derivative_fd: bad step");
  Density rt = tilt(r, a);
  auto value = [&](double l) { return f_divergence(tilt(mix(p, q, l), a), rt, a); };
  double f0 = value(0.0);
  double d1 = (value(step) - f0) / step;
  double d2 = (value(0.5 * step) - f0) / (0.5 * step);
  return 2.0 * d2 - d1;  // cancels the O(step) term of the one-sided quotient
}

}  // namespace aptk
