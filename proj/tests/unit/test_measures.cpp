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

TEST_CASE("weighted space invariants") {
  CHECK_THROWS_AS(WeightedSpace(std::vector<std::string>{}, std::vector<double>{}), error);
  CHECK_THROWS_AS(WeightedSpace(std::vector<std::string>{"a", "a"}, {1.0, 1.0}), error);
  CHECK_THROWS_AS(WeightedSpace(std::vector<std::string>{"a", "b"}, {1.0, 0.0}), error);
  CHECK_THROWS_AS(WeightedSpace(std::vector<std::string>{"a", "b"}, {1.0, -2.0}), error);
  CHECK_THROWS_AS(WeightedSpace(std::vector<std::string>{"a", "b"}, {1.0}), error);

  WeightedSpace s = WeightedSpace::counting(3);
  CHECK(s.is_counting());
  CHECK(s.size() == 3);
  WeightedSpace g({Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)}, {0.5, 0.5});
  CHECK(g.has_coords());
  CHECK(g.dim() == 2);
  CHECK(!same_space(s, g));
  CHECK(same_space(s, WeightedSpace::counting(3)));
}

TEST_CASE("alpha param validation") {
  CHECK_THROWS_AS(AlphaParam(1.0), error);
  CHECK_THROWS_AS(AlphaParam(1.0 + 0.5e-6), error);
  CHECK_THROWS_AS(AlphaParam(0.0), error);
  CHECK_THROWS_AS(AlphaParam(-2.0), error);
  AlphaParam a(2.0);
  CHECK(a.rho() == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(a.sgn_rho() == -1.0);
  AlphaParam b(0.5);
  CHECK(b.rho() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b.sgn_rho() == 1.0);
  // alpha = 1/(1+rho) round trip
  CHECK(1.0 / (1.0 + b.rho()) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("density mass policy") {
  WeightedSpace s = WeightedSpace::counting(2);
  CHECK_THROWS_AS(Density(s, Eigen::ArrayXd::Constant(2, -0.1)), error);
  // drift below the renormalization limit is absorbed
  Eigen::ArrayXd v(2);
  v << 0.5, 0.5 + 3e-10;
  Density p = Density::probability(s, v);
  CHECK(p.mass() == doctest::Approx(1.0).epsilon(1e-14));
  // beyond the limit it is rejected
  v << 0.5, 0.51;
  CHECK_THROWS_AS(Density::probability(s, v), error);
}

TEST_CASE("normalize examples") {
  WeightedSpace s2 = WeightedSpace::counting(2);
  Eigen::ArrayXd v(2);
  v << 2, 2;
  Density a = normalize(v, s2);
  CHECK(a[0] == doctest::Approx(0.5).epsilon(1e-15));
  v << 3, 1;
  Density b = normalize(v, s2);
  CHECK(b[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(b[1] == doctest::Approx(0.25).epsilon(1e-15));
  WeightedSpace sw(std::vector<std::string>{"a", "b"}, {0.5, 0.5});
  v << 1, 1;
  Density c = normalize(v, sw);
  CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-15));

  v << 0, 0;
  CHECK_THROWS_AS(normalize(v, s2), error);
  v << -1, 2;
  CHECK_THROWS_AS(normalize(v, s2), error);
}

TEST_CASE("alpha norm frozen values") {
  Density p = counting_density({0.5, 0.5});
  CHECK(alpha_norm(p, AlphaParam(2)) == doctest::Approx(0.7071067811865475).epsilon(1e-14));
  Density q = counting_density({0.6, 0.4});
  CHECK(alpha_norm(q, AlphaParam(2)) == doctest::Approx(0.7211102550927978).epsilon(1e-14));
  Density one = counting_density({1.0});
  for (double a : {0.25, 0.5, 2.0, 7.0}) CHECK(alpha_norm(one, AlphaParam(a)) == doctest::Approx(1.0));
}

TEST_CASE("alpha norm homogeneity") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + rng.below(20);
    Density p = random_density(rng, n);
    double c = rng.uniform(0.1, 5.0);
    AlphaParam a(t % 2 ? 0.5 : 2.0);
    Density scaled(p.space(), c * p.values());
    CHECK(alpha_norm(scaled, a) ==
          doctest::Approx(c * alpha_norm(p, a)).epsilon(1e-12));
  }
}

TEST_CASE("tilt examples and properties") {
  Density p = counting_density({0.75, 0.25});
  Density t = tilt(p, AlphaParam(2));
  CHECK(t[0] == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(t[1] == doctest::Approx(0.1).epsilon(1e-14));

  // uniform is a fixed point for every alpha
  Density u = counting_density({0.25, 0.25, 0.25, 0.25});
  for (double a : {0.25, 0.5, 1.1, 2.0, 5.0}) {
    Density tu = tilt(u, AlphaParam(a));
    for (std::size_t i = 0; i < 4; ++i) CHECK(tu[i] == doctest::Approx(0.25).epsilon(1e-13));
  }
  // point mass fixed point
  Density pm = counting_density({1.0, 0.0});
  Density tpm = tilt(pm, AlphaParam(0.5));
  CHECK(tpm[0] == doctest::Approx(1.0));
  CHECK(tpm[1] == 0.0);

  // mass invariance and support preservation on weighted spaces
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    std::size_t n = 2 + rng.below(10);
    std::vector<std::string> labels(n);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = "x" + std::to_string(i);
      w[i] = rng.uniform(0.1, 3.0);
    }
    WeightedSpace sp(labels, w);
    Density d = normalize(rng.dirichlet(static_cast<Eigen::Index>(n)) + 1e-4, sp);
    Density td = tilt(d, AlphaParam(k % 2 ? 0.3 : 3.0));
    CHECK(td.mass() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(td.support() == d.support());
  }
}

TEST_CASE("renyi entropy frozen values and bounds") {
  Density u = counting_density({0.5, 0.5});
  for (double a : {0.25, 0.5, 1.5, 2.0, 5.0})
    CHECK(renyi_entropy(u, AlphaParam(a)) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
  Density pm = counting_density({1.0, 0.0});
  for (double a : {0.25, 2.0}) CHECK(renyi_entropy(pm, AlphaParam(a)) == doctest::Approx(0.0));
  Density p = counting_density({0.75, 0.25});
  CHECK(renyi_entropy(p, AlphaParam(2)) == doctest::Approx(0.4700036292457355).epsilon(1e-13));
}

TEST_CASE("renyi entropy uniform equals log n, monotone in alpha") {
  Rng rng(17);
  for (std::size_t n : {2ul, 10ul, 100ul}) {
    Density u = uniform_density(WeightedSpace::counting(n));
    for (double a : {0.25, 0.9, 1.1, 4.0})
      CHECK(std::abs(renyi_entropy(u, AlphaParam(a)) - std::log(double(n))) < 1e-12);
  }
  const std::vector<double> grid{0.2, 0.4, 0.6, 0.8, 1.2, 1.6, 2.0, 3.0, 5.0, 8.0};
  for (int t = 0; t < 40; ++t) {
    Density p = random_density(rng, 2 + rng.below(30));
    double prev = std::numeric_limits<double>::infinity();
    for (double a : grid) {
      double h = renyi_entropy(p, AlphaParam(a));
      CHECK(h <= prev + 1e-10);
      prev = h;
    }
  }
}

TEST_CASE("shannon entropy and kl divergence") {
  Density u = counting_density({0.5, 0.5});
  Density p = counting_density({0.75, 0.25});
  CHECK(kl_divergence(u, u) == doctest::Approx(0.0));
  CHECK(kl_divergence(p, u) == doctest::Approx(0.1308120359411369).epsilon(1e-13));
  Density a = counting_density({1.0, 0.0});
  Density b = counting_density({0.0, 1.0});
  CHECK(std::isinf(kl_divergence(a, b)));
  CHECK(shannon_entropy(u) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(shannon_entropy(a) == doctest::Approx(0.0));

  Density w3 = counting_density({0.2, 0.3, 0.5});
  CHECK_THROWS_AS(kl_divergence(p, w3), error);
}

TEST_CASE("total variation") {
  Density a = counting_density({1.0, 0.0});
  Density b = counting_density({0.0, 1.0});
  CHECK(total_variation(a, b) == doctest::Approx(1.0));
  CHECK(total_variation(a, a) == doctest::Approx(0.0));
}
