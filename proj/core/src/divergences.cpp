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

#include "aptk/divergences.hpp"

#include <cmath>
#include <limits>

namespace aptk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_space(const Density& p, const Density& q, const char* who) {
  if (!same_space(p.space(), q.space()))
    fail_domain(std::string(who) + ": densities live on different spaces");
}
}  // namespace

double f_divergence(const Density& p, const Density& q, const AlphaParam& a) {
  require_same_space(p, q, "f_divergence");
  const double rho = a.rho();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p[i];
    if (pi == 0.0) continue;
    double qi = q[i];
    if (qi == 0.0) {
      if (rho > 0) return kInf;  // f superlinear: q f(p/q) -> infinity
      continue;                  // f sublinear: contributes 0
    }
    sum += std::pow(pi, 1.0 + rho) * std::pow(qi, -rho) * p.space().weight(i);
  }
  return a.sgn_rho() * sum;
}

DivergenceValue alpha_relative_entropy(const Density& p, const Density& q, const AlphaParam& a) {
  require_same_space(p, q, "alpha_relative_entropy");
  if (!p.is_probability() || !q.is_probability())
    fail_domain("alpha_relative_entropy: probability densities required");
  double jf = a.sgn_rho() * f_divergence(tilt(p, a), tilt(q, a), a);
  // jf = sgn(rho) I_f(P',Q') >= 1 by Jensen when finite; it degenerates to 0
  // for alpha > 1 with disjoint supports and to +inf for alpha < 1 when
  // supp(p) is not inside supp(q). log handles both ends.
  double v = std::log(jf) / a.rho();
  DivergenceValue out;
  out.path = EvalPath::via_f_divergence;
  out.finite = std::isfinite(v);
  out.value = out.finite ? v : kInf;
  return out;
}

DivergenceValue alpha_relative_entropy_direct(const Density& p, const Density& q, const AlphaParam& a) {
  require_same_space(p, q, "alpha_relative_entropy");
  if (!p.is_probability() || !q.is_probability())
    fail_domain("alpha_relative_entropy: probability densities required");
  const double am1 = a.alpha() - 1.0;
  const double nq = alpha_norm(q, a);
  const double np = alpha_norm(p, a);
  double sum = 0.0;
  bool infinite = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p[i];
    if (pi == 0.0) continue;
    double qi = q[i];
    if (qi == 0.0) {
      if (am1 < 0.0) {  // (q')^(-rho) blows up off the support of q
        infinite = true;
        break;
      }
      continue;
    }
    sum += pi * std::pow(qi / nq, am1) * p.space().weight(i);
  }
  DivergenceValue out;
  out.path = EvalPath::via_direct_formula;
  if (infinite) {
    out.finite = false;
    out.value = kInf;
    return out;
  }
  double v = std::log(sum / np) / a.rho();
  out.finite = std::isfinite(v);
  out.value = out.finite ? v : kInf;
  return out;
}

std::pair<double, double> uniform_gap_identity(const Density& p, const AlphaParam& a) {
  if (!p.space().is_counting())
    fail_domain("uniform_gap_identity: counting measure required");
  Density u = uniform_density(p.space());
  double lhs = alpha_relative_entropy_direct(p, u, a).value;
  double rhs = std::log(static_cast<double>(p.size())) - renyi_entropy(p, a);
  return {lhs, rhs};
}

std::vector<LimitProbePoint> kl_limit_probe(const Density& p, const Density& q,
                                            const std::vector<double>& epsilons) {
  require_same_space(p, q, "kl_limit_probe");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 0.0 || q[i] == 0.0)
      fail_domain("kl_limit_probe: full-support densities required");
  double kl = kl_divergence(p, q);
  std::vector<LimitProbePoint> out;
  for (double eps : epsilons) {
    if (!(eps >= 1e-5 && eps <= 0.1))
      fail_domain("kl_limit_probe: epsilon must lie in [1e-5, 0.1]");
    for (double alpha : {1.0 + eps, 1.0 - eps}) {
      double v = alpha_relative_entropy_direct(p, q, AlphaParam(alpha)).value;
      out.push_back({alpha, v, std::abs(v - kl)});
    }
  }
  return out;
}

double continuity_probe(const Density& p, const Density& q, const AlphaParam& a, double delta) {
  require_same_space(p, q, "continuity_probe");
  if (delta == 0.0) return 0.0;
  double pmin = p.values().minCoeff();
  if (!(delta > 0.0) || delta >= pmin)
    fail_domain("continuity_probe: delta must satisfy 0 < delta < min_i p_i");
  double base = alpha_relative_entropy_direct(p, q, a).value;
  double sup = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (double sign : {1.0, -1.0}) {
      Eigen::ArrayXd v = p.values();
      v[static_cast<Eigen::Index>(i)] += sign * delta;
      double val = alpha_relative_entropy_direct(normalize(v, p.space()), q, a).value;
      sup = std::max(sup, std::abs(val - base));
    }
  }
  return sup;
}

}  // namespace aptk
