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

#include <utility>
#include <vector>

#include "aptk/measures.hpp"

namespace aptk {

enum class EvalPath { via_f_divergence, via_direct_formula };

// Extended-real divergence value. Infinite values are explicit, never large
// sentinels.
struct DivergenceValue {
  double value = 0.0;
  bool finite = true;
  EvalPath path = EvalPath::via_direct_formula;
};

// Csiszar f-divergence I_f(P,Q) = integral q f(p/q) dmu for
// f(x) = sgn(rho) x^(1+rho). Inputs need not be probability densities.
// Conventions at support boundaries: a point with p = 0 contributes 0; a
// point with q = 0 < p contributes +infinity when rho > 0 and 0 when rho < 0.
double f_divergence(const Density& p, const Density& q, const AlphaParam& a);

// I_alpha(P,Q) = (1/rho) log[ sgn(rho) I_f(P',Q') ] evaluated through the
// tilted densities.
DivergenceValue alpha_relative_entropy(const Density& p, const Density& q, const AlphaParam& a);

// Algebraically identical value computed as
// (1/rho) log[ (1/||p||) integral p (q')^(-rho) dmu ]; kept as an independent
// evaluation path for cross-validation. This is the default path elsewhere
// (fewer exponentiations).
DivergenceValue alpha_relative_entropy_direct(const Density& p, const Density& q, const AlphaParam& a);

// lhs = I_alpha(p, uniform), rhs = log n - H_alpha(p) on a counting space.
std::pair<double, double> uniform_gap_identity(const Density& p, const AlphaParam& a);

struct LimitProbePoint {
  double alpha;
  double i_alpha;
  double gap_to_kl;
};

// Evaluates I_(1 +/- eps) against KL for full-support pairs. Each epsilon
// must lie in [1e-5, 0.1].
std::vector<LimitProbePoint> kl_limit_probe(const Density& p, const Density& q,
                                            const std::vector<double>& epsilons);

// Sup over the coordinate +/- delta perturbation family (renormalized) of
// |I_alpha(p~, q) - I_alpha(p, q)|. Requires 0 <= delta < min_i p_i.
double continuity_probe(const Density& p, const Density& q, const AlphaParam& a, double delta);

}  // namespace aptk
