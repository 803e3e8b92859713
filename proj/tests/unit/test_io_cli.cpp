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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "aptk/io.hpp"
#include "test_support.hpp"

using namespace aptk;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path p = fs::temp_directory_path() / "aptk_io_tests";
  fs::create_directories(p);
  return p;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  io::write_file(p, text);
  return p;
}

#ifdef APTK_CLI_PATH
int run_cli(const std::string& args, const std::string& out_file = "") {
  std::string cmd = std::string(APTK_CLI_PATH) + " " + args;
  if (!out_file.empty()) cmd += " > " + out_file;
  cmd += " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("distribution json parsing") {
  Density d = io::parse_distribution_json(R"({"points": ["a", "b"], "p": [0.75, 0.25]})");
  CHECK(d.size() == 2);
  CHECK(d[0] == doctest::Approx(0.75));
  CHECK(d.space().weight(0) == 1.0);

  Density w = io::parse_distribution_json(
      R"({"points": [1, 2], "mu_weights": [0.5, 0.5], "p": [1.0, 1.0]})");
  CHECK(w.mass() == doctest::Approx(1.0));

  Density c = io::parse_distribution_json(
      R"({"points": [[0.0, 0.0], [1.0, 0.5]], "p": [0.5, 0.5]})");
  CHECK(c.space().has_coords());
  CHECK(c.space().coord(1)[1] == doctest::Approx(0.5));

  // malformed inputs name the offending field
  auto expect_parse_error = [](const std::string& text, const std::string& needle) {
    try {
      io::parse_distribution_json(text);
      FAIL_CHECK("expected parse error for: " << text);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error(R"({"points": ["a"], "p": [-1.0]})", "p");
  expect_parse_error(R"({"points": ["a", "b"], "p": [0.5]})", "p");
  expect_parse_error(R"({"points": ["a", "b"], "mu_weights": [1, 0], "p": [0.5, 0.5]})",
                     "mu_weights");
  expect_parse_error(R"({"points": ["a", "b"], "p": [0.5, null]})", "p");
  expect_parse_error(R"({"pts": ["a"], "p": [1.0]})", "pts");
  expect_parse_error(R"({"points": ["a", "a"], "p": [0.5, 0.5]})", "label");
  expect_parse_error("not json at all", "JSON");
  // NaN/Inf are rejected by JSON itself
  expect_parse_error(R"({"points": ["a"], "p": [NaN]})", "JSON");
}

TEST_CASE("distribution csv parsing") {
  Density d = io::parse_distribution_csv("point,mu_weight,p\na,1.0,0.75\nb,1.0,0.25\n");
  CHECK(d.size() == 2);
  CHECK(d[0] == doctest::Approx(0.75));
  CHECK_THROWS_AS(io::parse_distribution_csv("x,y\n1,2\n"), error);
  CHECK_THROWS_AS(io::parse_distribution_csv("point,mu_weight,p\na,0,0.5\n"), error);
  CHECK_THROWS_AS(io::parse_distribution_csv("point,mu_weight,p\n"), error);
}

TEST_CASE("distribution round trip is exact") {
  Rng rng(401);
  for (int t = 0; t < 20; ++t) {
    Density d = random_density(rng, 2 + rng.below(20));
    Density back = io::parse_distribution_json(io::distribution_to_json(d));
    REQUIRE(back.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(back[i] == d[i]);  // bitwise
      CHECK(back.space().weight(i) == d.space().weight(i));
    }
  }
}

TEST_CASE("constraint parsing") {
  WeightedSpace s3 = WeightedSpace::counting(3);
  ConstraintSet e = io::parse_constraints_json(
      R"({"equalities": [{"statistic": [1, 2, 3], "target": 2.4}],
          "inequalities": [{"statistic": [1, 0, 0], "bound": 0.9}]})",
      s3);
  CHECK(e.equalities().size() == 1);
  CHECK(e.inequalities().size() == 1);

  ConstraintSet z = io::parse_constraints_json(R"({"zero_support": ["2", 0]})", s3);
  CHECK(z.zero_support().size() == 2);

  CHECK_THROWS_AS(io::parse_constraints_json(R"({"equalities": [{"statistic": [1, 2]}]})", s3),
                  error);
  CHECK_THROWS_AS(io::parse_constraints_json(R"({"weird": 1})", s3), error);
  CHECK_THROWS_AS(io::parse_constraints_json(R"({"zero_support": ["nope"]})", s3), error);
  // infeasible target is rejected with the infeasible code
  try {
    io::parse_constraints_json(R"({"equalities": [{"statistic": [1, 2, 3], "target": 7}]})", s3);
    FAIL_CHECK("expected infeasible");
  } catch (const error& e) {
    CHECK(e.code() == errc::infeasible);
  }
}

TEST_CASE("maxent spec parsing and round_sig") {
  GeneralizedGaussianSpec spec =
      io::parse_maxent_spec_json(R"({"n": 2, "alpha": 1.5, "C": [[1, 0], [0, 4]]})");
  CHECK(spec.n == 2);
  CHECK(spec.C(1, 1) == 4.0);
  CHECK_THROWS_AS(io::parse_maxent_spec_json(R"({"n": 1, "alpha": 2})"), error);
  CHECK_THROWS_AS(io::parse_maxent_spec_json(R"({"n": 1, "alpha": 2, "C": [[1]], "x": 0})"),
                  error);

  CHECK(io::round_sig(1.0 / 3.0, 12) == doctest::Approx(0.333333333333).epsilon(1e-13));
  CHECK(io::round_sig(0.0, 12) == 0.0);
  CHECK(std::isinf(io::round_sig(std::numeric_limits<double>::infinity(), 12)));
}

#ifdef APTK_CLI_PATH

TEST_CASE("cli end to end: exit codes and determinism") {
  fs::path dir = scratch_dir();
  fs::path p = write_temp("p.json", R"({"points": ["a", "b"], "p": [0.75, 0.25]})");
  fs::path u = write_temp("u.json", R"({"points": ["a", "b"], "p": [0.5, 0.5]})");
  fs::path bad = write_temp("bad.json", R"({"points": ["a"], "p": [-1]})");
  fs::path r3 = write_temp("r3.json",
                           R"({"points": ["1", "2", "3"],
                               "p": [0.33333333333333331, 0.33333333333333331, 0.33333333333333337]})");
  fs::path c3 = write_temp("c3.json", R"({"equalities": [{"statistic": [1, 2, 3], "target": 2.4}]})");
  fs::path cinf = write_temp("cinf.json", R"({"equalities": [{"statistic": [1, 2, 3], "target": 9}]})");

  CHECK(run_cli("entropy --input " + p.string() + " --alpha 2") == 0);
  CHECK(run_cli("divergence --input " + p.string() + " --ref " + u.string() + " --alpha 2") == 0);
  CHECK(run_cli("entropy --input " + bad.string() + " --alpha 2") == 2);
  CHECK(run_cli("entropy --input " + p.string() + " --alpha 1.0") == 5);
  CHECK(run_cli("entropy --input " + p.string() + " --no-such-flag") == 2);
  CHECK(run_cli("project --ref " + r3.string() + " --constraints " + cinf.string() +
                " --alpha 2") == 4);
  CHECK(run_cli("project --ref " + r3.string() + " --constraints " + c3.string() +
                " --alpha 2 --seed 5 --samples 40") == 0);
  CHECK(run_cli("entropy --input " + p.string() + " --tol nope=1") == 2);

  // maxent: alpha below n/(n+2) exits with the domain code
  fs::path mbad = write_temp("mbad.json", R"({"n": 1, "alpha": 0.25, "C": [[1.0]]})");
  CHECK(run_cli("maxent --input " + mbad.string()) == 5);

  // verify: same seed, byte-identical reports (serial vs threaded)
  fs::path out1 = dir / "v1.json";
  fs::path out2 = dir / "v2.json";
  CHECK(run_cli("verify parallelogram --samples 64 --seed 9 --threads 1 --output " + out1.string(),
                (dir / "stdout1.txt").string()) == 0);
  CHECK(run_cli("verify parallelogram --samples 64 --seed 9 --threads 4 --output " + out2.string(),
                (dir / "stdout2.txt").string()) == 0);
  CHECK(io::read_file(out1) == io::read_file(out2));
  CHECK(!io::read_file(out1).empty());

  // density written by project round-trips through the reader
  fs::path rep = dir / "proj.json";
  CHECK(run_cli("project --ref " + r3.string() + " --constraints " + c3.string() +
                    " --alpha 0.5 --seed 5 --samples 20 --output " + rep.string(),
                (dir / "stdout3.txt").string()) == 0);
  CHECK(io::read_file(rep).find("\"q\"") != std::string::npos);
}

#endif  // APTK_CLI_PATH
