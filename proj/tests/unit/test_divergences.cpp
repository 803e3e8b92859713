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

#include <doctest.h>

#include "test_support.hpp"

using namespace aptk;
using aptk::testing::counting_density;

TEST_CASE("f divergence frozen values and conventions") {
  // Jensen equality case: I_f(P,P) = f(1) = sgn(rho)
  Density u = counting_density({0.5, 0.5});
  CHECK(f_divergence(u, u, AlphaParam(2)) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(f_divergence(u, u, AlphaParam(0.5)) == doctest::Approx(1.0).epsilon(1e-14));

  Density p = counting_density({0.9, 0.1});
  CHECK(f_divergence(p, u, AlphaParam(2)) ==
        doctest::Approx(-0.8944271909999159).epsilon(1e-14));

  Density a = counting_density({1.0, 0.0});
  Density b = counting_density({0.0, 1.0});
  CHECK(std::isinf(f_divergence(a, b, AlphaParam(0.5))));  // rho > 0, disjoint
  // rho < 0: off-support points contribute 0
  CHECK(f_divergence(a, b, AlphaParam(2)) == doctest::Approx(0.0));
}

TEST_CASE("alpha relative entropy: identities and frozen values") {
  Density p = counting_density({0.75, 0.25});
  Density u = counting_density({0.5, 0.5});
  for (double al : {0.25, 0.5, 0.9, 1.1, 2.0, 5.0}) {
    AlphaParam a(al);
    CHECK(std::abs(alpha_relative_entropy(p, p, a).value) <= 1e-12);
    CHECK(std::abs(alpha_relative_entropy_direct(p, p, a).value) <= 1e-12);
  }
  auto v = alpha_relative_entropy(p, u, AlphaParam(2));
  CHECK(v.finite);
  CHECK(v.value == doctest::Approx(0.2231435513142098).epsilon(1e-13));

  Density p2 = counting_density({0.9, 0.1});
  Density q2 = counting_density({0.6, 0.4});
  CHECK(alpha_relative_entropy_direct(p2, q2, AlphaParam(0.5)).value ==
        doctest::Approx(0.1491317183711802).epsilon(1e-12));
}

TEST_CASE("alpha relative entropy: infinite cases") {
  Density a = counting_density({1.0, 0.0});
  Density b = counting_density({0.0, 1.0});
  auto v1 = alpha_relative_entropy(a, b, AlphaParam(0.5));
  CHECK(!v1.finite);
  CHECK(std::isinf(v1.value));
  auto v2 = alpha_relative_entropy(a, b, AlphaParam(2.0));  // disjoint, alpha > 1
  CHECK(!v2.finite);
  auto v3 = alpha_relative_entropy_direct(a, b, AlphaParam(0.5));
  CHECK(!v3.finite);
  // alpha < 1 and supp(p) not inside supp(q)
  Density c = counting_density({0.5, 0.5});
  auto v4 = alpha_relative_entropy_direct(c, a, AlphaParam(0.5));
  CHECK(!v4.finite);
  // alpha > 1 with partial overlap stays finite
  auto v5 = alpha_relative_entropy_direct(c, a, AlphaParam(2.0));
  CHECK(v5.finite);
}

TEST_CASE("path equivalence property") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + rng.below(12);
    Density p = random_density(rng, n);
    Density q = random_density(rng, n);
    AlphaParam a(std::vector<double>{0.25, 0.5, 0.9, 1.1, 2, 5}[t % 6]);
    auto x = alpha_relative_entropy(p, q, a);
    auto y = alpha_relative_entropy_direct(p, q, a);
    REQUIRE(x.finite == y.finite);
    if (x.finite)
      CHECK(std::abs(x.value - y.value) <= 1e-11 * (1.0 + std::abs(y.value)));
  }
}

TEST_CASE("nonnegativity, positivity, Jensen bound") {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + rng.below(12);
    Density p = random_density(rng, n);
    Density q = random_density(rng, n);
    AlphaParam a(std::vector<double>{0.25, 0.5, 0.9, 1.1, 2, 5}[t % 6]);
    double v = alpha_relative_entropy_direct(p, q, a).value;
    CHECK(v >= -1e-12);
    if (total_variation(p, q) >= 0.01) CHECK(v >= 1e-8);
    // Jensen: I_f(P',Q') >= f(1) = sgn(rho). Multiplying by sgn(rho) flips
    // the inequality for alpha > 1, where sgn(rho) I_f lies in (0, 1].
    double jf = f_divergence(tilt(p, a), tilt(q, a), a);
    CHECK(jf >= a.sgn_rho() - 1e-12);
    if (a.below_one())
      CHECK(a.sgn_rho() * jf >= 1.0 - 1e-12);
    else
      CHECK(a.sgn_rho() * jf <= 1.0 + 1e-12);
  }
}

TEST_CASE("uniform gap identity") {
  Density p = counting_density({0.75, 0.25});
  auto [lhs, rhs] = uniform_gap_identity(p, AlphaParam(2));
  CHECK(lhs == doctest::Approx(0.2231435513142098).epsilon(1e-12));
  CHECK(std::abs(lhs - rhs) <= 1e-10);

  Density u = counting_density({0.5, 0.5});
  auto [l0, r0] = uniform_gap_identity(u, AlphaParam(3));
  CHECK(std::abs(l0) <= 1e-12);
  CHECK(std::abs(r0) <= 1e-12);

  Density pm = counting_density({1.0, 0.0});
  auto [lp, rp] = uniform_gap_identity(pm, AlphaParam(3));
  CHECK(lp == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(rp == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // weighted measures are rejected
  WeightedSpace w(std::vector<std::string>{"a", "b"}, {1.0, 2.0});
  Density pw = normalize(Eigen::ArrayXd::Constant(2, 1.0), w);
  CHECK_THROWS_AS(uniform_gap_identity(pw, AlphaParam(2)), error);

  // large support
  Rng rng(7);
  Density big = random_density(rng, 10000);
  for (double al : {0.5, 2.0}) {
    auto [lb, rb] = uniform_gap_identity(big, AlphaParam(al));
    CHECK(std::abs(lb - rb) <= 1e-10);
  }
}

TEST_CASE("kl limit probe") {
  Density p = counting_density({0.75, 0.25});
  Density u = counting_density({0.5, 0.5});

  // identical measures: all gaps vanish
  auto same = kl_limit_probe(p, p, {1e-2, 1e-3});
  for (const auto& pt : same) CHECK(std::abs(pt.gap_to_kl) <= 1e-12);

  auto probe = kl_limit_probe(p, u, {1e-2, 1e-3, 1e-4});
  REQUIRE(probe.size() == 6);
  // frozen reference gaps (high-precision evaluation of the defining sums)
  CHECK(probe[2].gap_to_kl <= 1e-2);   // eps = 1e-3
  CHECK(probe[4].gap_to_kl <= 1e-3);   // eps = 1e-4
  // monotone refinement on both branches
  CHECK(probe[2].gap_to_kl < probe[0].gap_to_kl);
  CHECK(probe[4].gap_to_kl < probe[2].gap_to_kl);
  CHECK(probe[3].gap_to_kl < probe[1].gap_to_kl);
  CHECK(probe[5].gap_to_kl < probe[3].gap_to_kl);

  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    Density a = random_density(rng, 2 + rng.below(8));
    Density b = random_density(rng, a.size());
    auto pr = kl_limit_probe(a, b, {1e-2, 1e-3, 1e-4});
    CHECK(pr[4].gap_to_kl < pr[2].gap_to_kl);
    CHECK(pr[5].gap_to_kl < pr[3].gap_to_kl);
  }

  // support violations and epsilon range
  Density pm = counting_density({1.0, 0.0});
  CHECK_THROWS_AS(kl_limit_probe(pm, u, {1e-3}), error);
  CHECK_THROWS_AS(kl_limit_probe(p, u, {0.5}), error);
  CHECK_THROWS_AS(kl_limit_probe(p, u, {1e-6}), error);
}

TEST_CASE("continuity probe shrinks with delta") {
  Density p = counting_density({0.4, 0.35, 0.25});
  Density q = counting_density({0.3, 0.45, 0.25});
  CHECK(continuity_probe(p, q, AlphaParam(2), 0.0) == 0.0);
  for (double al : {0.5, 2.0}) {
    AlphaParam a(al);
    double prev = continuity_probe(p, q, a, 0.1);
    for (double delta : {0.05, 0.025, 0.0125, 0.00625}) {
      double cur = continuity_probe(p, q, a, delta);
      CHECK(cur <= prev * 0.75);  // at least geometric decay for a locally Lipschitz map
      prev = cur;
    }
  }
  CHECK_THROWS_AS(continuity_probe(p, q, AlphaParam(2), 0.5), error);
}

TEST_CASE("data processing can fail: documented coarsening example") {
  // Merging the first two atoms increases I_2 for this pair; the
  // data-processing inequality of plain f-divergences does not survive the
  // tilting. Reference values computed at high precision.
  Density p = counting_density({0.05, 0.05, 0.9});
  Density q = counting_density({0.35, 0.35, 0.3});
  Density pc = counting_density({0.1, 0.9});
  Density qc = counting_density({0.7, 0.3});
  AlphaParam a(2.0);
  double fine = alpha_relative_entropy_direct(p, q, a).value;
  double coarse = alpha_relative_entropy_direct(pc, qc, a).value;
  CHECK(fine == doctest::Approx(1.0766950918511059).epsilon(1e-12));
  CHECK(coarse == doctest::Approx(1.4144412085783497).epsilon(1e-12));
  CHECK(coarse > fine);
}
