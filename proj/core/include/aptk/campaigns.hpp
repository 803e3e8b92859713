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

#include <cstdint>
#include <string>
#include <vector>

#include "aptk/projection.hpp"

namespace aptk {

struct CampaignOptions {
  int n_samples = 1000;
  std::uint64_t seed = 0;
  int threads = 0;  // capped by APT_NUM_THREADS; 0 = serial
};

// One inequality/identity check across a campaign. `worst_margin` is the
// minimum slack over all samples; negative slack is a violation, and the
// offending sample indices (reproducible via Rng::for_sample(seed, index))
// are listed in `failing`.
struct CheckStats {
  std::string name;
  long samples = 0;
  long violations = 0;
  double worst_margin = 0.0;
  std::vector<std::uint64_t> failing;

  bool pass() const { return violations == 0; }
};

struct CampaignReport {
  std::string suite;
  std::uint64_t seed = 0;
  int n_samples = 0;
  std::vector<CheckStats> checks;

  bool pass() const;
  std::string to_json() const;  // deterministic: sorted keys, 12 significant digits
};

// Random probability density on a counting space, mixed with the uniform
// density so every coordinate stays bounded away from zero.
Density random_density(Rng& rng, std::size_t n, double smoothing = 0.1);

// Lemma-2 suite: parallelogram gap sign, Minkowski scalar side, and the
// proof-chain identity lhs = scale * rhs.
CampaignReport parallelogram_campaign(const CampaignOptions& opts);

// Theorem 3/4 suite: projection certificates, a perturbed negative control,
// and the iterated-projection consistency gap on nested affine families.
CampaignReport pythagorean_campaign(const CampaignOptions& opts);

// Appendix suite: closed-form segment derivative against one-sided finite
// differences.
CampaignReport derivative_campaign(const CampaignOptions& opts);

// alpha -> 1 suite: I_(1 +/- eps) against KL with shrinking eps.
CampaignReport limits_campaign(const CampaignOptions& opts);

// Solver-vs-oracle suite: projected gradient against the brute-force grid,
// restart agreement, and the uniqueness probe.
CampaignReport projection_campaign(const CampaignOptions& opts);

CampaignReport run_campaign(const std::string& suite, const CampaignOptions& opts);

}  // namespace aptk
