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

#include "aptk/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "aptk/io.hpp"
#include "aptk/parallel.hpp"

namespace aptk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Margins produced by one campaign sample: slack >= 0 means the check held.
using SampleMargins = std::vector<double>;

CheckStats reduce(const std::string& name, const std::vector<SampleMargins>& per_sample,
                  std::size_t idx) {
  CheckStats cs;
  cs.name = name;
  cs.worst_margin = kInf;
  for (std::size_t i = 0; i < per_sample.size(); ++i) {
    if (idx >= per_sample[i].size()) continue;
    double m = per_sample[i][idx];
    if (std::isnan(m)) continue;  // sample skipped for this check
    ++cs.samples;
    if (m < cs.worst_margin) cs.worst_margin = m;
    if (m < 0.0) {
      ++cs.violations;
      if (cs.failing.size() < 32) cs.failing.push_back(i);
    }
  }
  if (cs.samples == 0) cs.worst_margin = 0.0;
  return cs;
}

const std::vector<double>& regime_alphas(bool below_one) {
  static const std::vector<double> low{0.3, 0.5, 0.8};
  static const std::vector<double> high{1.5, 2.0, 4.0};
  return below_one ? low : high;
}

}  // namespace

bool CampaignReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

std::string CampaignReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["n_samples"] = n_samples;
  j["pass"] = pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["samples"] = c.samples;
    cj["violations"] = c.violations;
    cj["worst_margin"] = io::round_sig(c.worst_margin, 12);
    cj["failing_samples"] = c.failing;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

Density random_density(Rng& rng, std::size_t n, double smoothing) {
  Eigen::ArrayXd m = rng.dirichlet(static_cast<Eigen::Index>(n));
  m = (1.0 - smoothing) * m + smoothing / static_cast<double>(n);
  return Density::probability(WeightedSpace::counting(n), m);
}

namespace {

// Random density rejected until it is at least `min_tv` away from the others.
Density separated_density(Rng& rng, std::size_t n, const std::vector<const Density*>& others,
                          double min_tv) {
  for (int tries = 0; tries < 200; ++tries) {
    Density d = random_density(rng, n);
    bool ok = true;
    for (const Density* o : others)
      if (total_variation(d, *o) < min_tv) ok = false;
    if (ok) return d;
  }
  return random_density(rng, n);
}

}  // namespace

// ---------------------------------------------------------------------------
// Lemma 2

CampaignReport parallelogram_campaign(const CampaignOptions& opts) {
  std::vector<SampleMargins> results(opts.n_samples);
  parallel_for(results.size(), opts.threads, [&](std::size_t i) {
    Rng rng = Rng::for_sample(opts.seed, i);
    std::size_t n = 2 + rng.below(7);
    bool below = (i % 2) == 0;
    const auto& alphas = regime_alphas(below);
    AlphaParam a(alphas[rng.below(alphas.size())]);
    Density p1 = random_density(rng, n);
    Density p2 = separated_density(rng, n, {&p1}, 1e-3);
    Density r = separated_density(rng, n, {&p1, &p2}, 1e-3);
    double lambda = rng.uniform();
    auto terms = parallelogram_terms(p1, p2, r, lambda, a);
    double gap = terms.gap();
    double scale = terms.scale;
    SampleMargins m(3);
    m[0] = below ? gap + 1e-10 : 1e-10 - gap;
    m[1] = below ? scale - 1.0 + 1e-12 : 1.0 - scale + 1e-12;
    m[2] = 1e-11 - std::abs(terms.chain_identity_gap());
    results[i] = std::move(m);
  });
  CampaignReport rep;
  rep.suite = "parallelogram";
  rep.seed = opts.seed;
  rep.n_samples = opts.n_samples;
  rep.checks.push_back(reduce("parallelogram_gap_sign", results, 0));
  rep.checks.push_back(reduce("minkowski_scale_side", results, 1));
  rep.checks.push_back(reduce("proof_chain_identity", results, 2));
  return rep;
}

// ---------------------------------------------------------------------------
// Shared projection-instance generator

namespace {

struct Instance {
  Density r;
  ConstraintSet e;
  AlphaParam a;
};

Instance make_instance(Rng& rng, double alpha) {
  std::size_t n = 3 + rng.below(2);
  WeightedSpace space = WeightedSpace::counting(n);
  Eigen::VectorXd stat(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    stat[static_cast<Eigen::Index>(i)] = static_cast<double>(i + 1) + 0.2 * rng.uniform();
  double theta = rng.uniform(0.25, 0.75);
  double target = stat.minCoeff() + theta * (stat.maxCoeff() - stat.minCoeff());
  Density r = random_density(rng, n);
  ConstraintSet e(space, {LinearConstraint{stat, target}});
  return Instance{std::move(r), std::move(e), AlphaParam(alpha)};
}

// Feasible perturbation of q at the requested TV distance.
Density perturb_within(const ConstraintSet& e, const Density& q, double tv, Rng& rng) {
  for (int tries = 0; tries < 100; ++tries) {
    Eigen::VectorXd x = e.polytope().sample(rng);
    Density cand = e.vector_to_density(x);
    double d = total_variation(cand, q);
    if (d < tv) continue;
    double s = tv / d;
    return Density::probability(q.space(), (1.0 - s) * q.values() + s * cand.values());
  }
  fail_domain("perturb_within: could not find a perturbation direction");
}

}  // namespace

// ---------------------------------------------------------------------------
// Theorem 3/4

CampaignReport pythagorean_campaign(const CampaignOptions& opts) {
  std::vector<SampleMargins> results(opts.n_samples);
  parallel_for(results.size(), opts.threads, [&](std::size_t i) {
    Rng rng = Rng::for_sample(opts.seed, i);
    Instance inst = make_instance(rng, (i % 2) == 0 ? 0.5 : 2.0);
    SolverOptions sopts;
    sopts.seed = rng.next_u64();
    sopts.n_certificates = 200;
    ProjectionResult pr = project(inst.r, inst.e, inst.a, sopts);

    SampleMargins m(4, std::numeric_limits<double>::quiet_NaN());
    if (!pr.converged) {
      m.assign(4, -1.0);
      results[i] = std::move(m);
      return;
    }
    double worst = kInf;
    for (const auto& c : pr.certificate_residuals)
      if (!std::isnan(c.residual)) worst = std::min(worst, c.residual);
    double worst_vertex = projection_characterization_check(pr.q, inst.r, inst.e, inst.a, 0, 0);
    m[0] = std::min(worst, worst_vertex) + 1e-6;

    // negative control: a feasible point TV 0.01 away must be rejected
    Density qbad = perturb_within(inst.e, pr.q, 0.01, rng);
    double control = pythagorean_report(pr.q, qbad, inst.r, inst.a).residual;
    control = std::min(control,
                       projection_characterization_check(qbad, inst.r, inst.e, inst.a, 50,
                                                         sopts.seed ^ 0x5851F42D4C957F2Dull));
    m[1] = -1e-4 - control;

    // iterated projection on a nested affine family
    Eigen::VectorXd stat2(static_cast<Eigen::Index>(inst.r.size()));
    for (std::size_t k = 0; k < inst.r.size(); ++k) {
      double base = static_cast<double>(k + 1);
      stat2[static_cast<Eigen::Index>(k)] = base * base;
    }
    Eigen::VectorXd witness = inst.e.polytope().barycenter();
    Density wd = inst.e.vector_to_density(witness);
    double t2 = 0.0;
    for (std::size_t k = 0; k < wd.size(); ++k)
      t2 += stat2[static_cast<Eigen::Index>(k)] * wd[k] * wd.space().weight(k);
    auto eqs = inst.e.equalities();
    eqs.push_back(LinearConstraint{stat2, t2});
    ConstraintSet e1(inst.e.space(), std::move(eqs));
    IteratedProjection ip = iterated_projection_check(inst.r, inst.e, e1, inst.a, sopts);
    m[2] = 1e-5 - ip.tv_gap;

    // idempotence: projecting the projection onto the same set must not move
    ProjectionResult again = project(pr.q, inst.e, inst.a, sopts);
    m[3] = 1e-8 - total_variation(again.q, pr.q);
    results[i] = std::move(m);
  });
  CampaignReport rep;
  rep.suite = "pythagorean";
  rep.seed = opts.seed;
  rep.n_samples = opts.n_samples;
  rep.checks.push_back(reduce("certificate_residuals", results, 0));
  rep.checks.push_back(reduce("negative_control_detects", results, 1));
  rep.checks.push_back(reduce("iterated_projection_gap", results, 2));
  rep.checks.push_back(reduce("projection_idempotent", results, 3));
  return rep;
}

// ---------------------------------------------------------------------------
// Appendix derivative

CampaignReport derivative_campaign(const CampaignOptions& opts) {
  std::vector<SampleMargins> results(opts.n_samples);
  parallel_for(results.size(), opts.threads, [&](std::size_t i) {
    Rng rng = Rng::for_sample(opts.seed, i);
    std::size_t n = 2 + rng.below(7);
    bool below = (i % 2) == 0;
    const auto& alphas = regime_alphas(below);
    AlphaParam a(alphas[rng.below(alphas.size())]);
    Density q = random_density(rng, n);
    Density p = separated_density(rng, n, {&q}, 1e-3);
    Density r = separated_density(rng, n, {&p, &q}, 1e-3);
    double closed = segment_divergence_derivative(p, q, r, a);
    double fd = segment_divergence_derivative_fd(p, q, r, a, 1e-5);
    double rel = std::abs(fd - closed) / std::max(std::abs(closed), 1e-10);
    results[i] = {1e-5 - rel};
  });
  CampaignReport rep;
  rep.suite = "derivative";
  rep.seed = opts.seed;
  rep.n_samples = opts.n_samples;
  rep.checks.push_back(reduce("closed_form_vs_finite_difference", results, 0));
  return rep;
}

// ---------------------------------------------------------------------------
// alpha -> 1 limits

CampaignReport limits_campaign(const CampaignOptions& opts) {
  const std::vector<double> eps{1e-2, 1e-3, 1e-4};
  std::vector<SampleMargins> results(opts.n_samples);
  parallel_for(results.size(), opts.threads, [&](std::size_t i) {
    Rng rng = Rng::for_sample(opts.seed, i);
    std::size_t n = 2 + rng.below(9);
    Density p = random_density(rng, n);
    Density q = separated_density(rng, n, {&p}, 1e-3);
    auto probe = kl_limit_probe(p, q, eps);
    double kl = kl_divergence(p, q);
    // entries alternate (1+eps, 1-eps) per epsilon
    SampleMargins m(2);
    double mono = kInf;
    for (std::size_t k = 0; k + 2 < probe.size(); k += 2) {
      mono = std::min(mono, probe[k].gap_to_kl - probe[k + 2].gap_to_kl);
      mono = std::min(mono, probe[k + 1].gap_to_kl - probe[k + 3].gap_to_kl);
    }
    m[0] = mono;  // gaps must shrink as eps shrinks
    double bound = 10.0 * eps.back() * (1.0 + kl);
    m[1] = bound - std::max(probe[probe.size() - 2].gap_to_kl, probe.back().gap_to_kl);
    results[i] = std::move(m);
  });
  CampaignReport rep;
  rep.suite = "limits";
  rep.seed = opts.seed;
  rep.n_samples = opts.n_samples;
  rep.checks.push_back(reduce("gap_monotone_in_eps", results, 0));
  rep.checks.push_back(reduce("gap_linear_bound", results, 1));
  return rep;
}

// ---------------------------------------------------------------------------
// Solver vs oracle

CampaignReport projection_campaign(const CampaignOptions& opts) {
  std::vector<SampleMargins> results(opts.n_samples);
  parallel_for(results.size(), opts.threads, [&](std::size_t i) {
    Rng rng = Rng::for_sample(opts.seed, i);
    Instance inst = make_instance(rng, (i % 2) == 0 ? 0.5 : 2.0);
    SolverOptions sopts;
    sopts.seed = rng.next_u64();
    sopts.n_certificates = 0;
    ProjectionResult pr = project(inst.r, inst.e, inst.a, sopts);
    SampleMargins m(4, std::numeric_limits<double>::quiet_NaN());
    if (!pr.converged) {
      m.assign(4, -1.0);
      results[i] = std::move(m);
      return;
    }
    Density oracle = brute_force_project(inst.r, inst.e, inst.a, 1e-3, 1e-5);
    double oval = alpha_relative_entropy_direct(oracle, inst.r, inst.a).value;
    m[0] = 1e-5 - std::abs(pr.value - oval);
    m[1] = 1e-3 - total_variation(pr.q, oracle);
    m[2] = 1e-6 - pr.restarts_agreement;
    m[3] = 1e-6 - uniqueness_probe(inst.r, inst.e, inst.a, 16, sopts.seed ^ 0xD6E8FEB86659FD93ull);
    results[i] = std::move(m);
  });
  CampaignReport rep;
  rep.suite = "projection";
  rep.seed = opts.seed;
  rep.n_samples = opts.n_samples;
  rep.checks.push_back(reduce("solver_vs_oracle_value", results, 0));
  rep.checks.push_back(reduce("solver_vs_oracle_tv", results, 1));
  rep.checks.push_back(reduce("restart_agreement", results, 2));
  rep.checks.push_back(reduce("uniqueness_probe", results, 3));
  return rep;
}

CampaignReport run_campaign(const std::string& suite, const CampaignOptions& opts) {
  if (suite == "parallelogram") return parallelogram_campaign(opts);
  if (suite == "pythagorean") return pythagorean_campaign(opts);
  if (suite == "derivative") return derivative_campaign(opts);
  if (suite == "limits") return limits_campaign(opts);
  if (suite == "projection") return projection_campaign(opts);
  fail_parse("unknown verification suite '" + suite + "'");
}

}  // namespace aptk
