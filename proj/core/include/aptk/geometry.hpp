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

#include <vector>

#include "aptk/divergences.hpp"

namespace aptk {

// lambda p + (1 - lambda) q, a probability density for lambda in [0, 1].
Density mix(const Density& p, const Density& q, double lambda);

struct SegmentPoint {
  Density p;
  Density q;
  double lambda;
  Density p_lambda;

  static SegmentPoint make(Density p, Density q, double lambda);
};

struct PythagoreanReport {
  double i_pr;
  double i_pq;
  double i_qr;
  double residual;  // i_pr - i_pq - i_qr; NaN when undefined (inf - inf)
  bool finite;      // all three terms finite
};

// Normalized combination
// R_{1,2} = [l P1/||p1|| + (1-l) P2/||p2||] / [l/||p1|| + (1-l)/||p2||].
Density r_combine(const Density& p1, const Density& p2, double lambda, const AlphaParam& a);

// The scalar (l/||p1|| + (1-l)/||p2||) ||r_{1,2}||. Minkowski puts it >= 1
// for alpha < 1 and <= 1 for alpha > 1.
double minkowski_scale(const Density& p1, const Density& p2, double lambda, const AlphaParam& a);

struct ParallelogramTerms {
  double lhs;    // lambda-weighted bracket combination
  double rhs;    // I_f(R12', R') - f(1)
  double scale;  // minkowski_scale

  double gap() const { return lhs - rhs; }
  // The expansion in the proof gives lhs = scale * rhs exactly.
  double chain_identity_gap() const { return lhs - scale * rhs; }
};

ParallelogramTerms parallelogram_terms(const Density& p1, const Density& p2, const Density& r,
                                       double lambda, const AlphaParam& a);

// lhs - rhs of the parallelogram-type inequality; >= 0 for alpha < 1 and
// <= 0 for alpha > 1 (up to rounding). Throws when any bracket is infinite.
double parallelogram_gap(const Density& p1, const Density& p2, const Density& r, double lambda,
                         const AlphaParam& a);

PythagoreanReport pythagorean_report(const Density& p, const Density& q, const Density& r,
                                     const AlphaParam& a);

// True iff min over the grid of I_alpha(P_lambda, R) >= I_alpha(Q, R) - 1e-10.
bool segment_min_check(const Density& p, const Density& q, const Density& r, const AlphaParam& a,
                       const std::vector<double>& lambda_grid);

// Log-spaced near 0 (the binding behavior is at lambda -> 0), then coarse to 1.
std::vector<double> default_lambda_grid();

// d/dlambda I_f(P'_lambda, R') at lambda = 0+, via the closed form
// (t(0) s'(0) - s(0) t'(0)) / t(0)^2 with s(l) = sgn(rho) integral
// p_l (r')^(-rho) dmu and t(l) = ||p_l||. Requires q full support.
double segment_divergence_derivative(const Density& p, const Density& q, const Density& r,
                                     const AlphaParam& a);

// Independent reference: one-sided difference quotients of
// lambda -> I_f(tilt(p_lambda), tilt(r)) at steps `step` and `step`/2,
// Richardson-extrapolated. Evaluates through the f-divergence path only.
double segment_divergence_derivative_fd(const Density& p, const Density& q, const Density& r,
                                        const AlphaParam& a, double step);

}  // namespace aptk
