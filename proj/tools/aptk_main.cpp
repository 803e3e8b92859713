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

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aptk/campaigns.hpp"
#include "aptk/io.hpp"
#include "aptk/maxent.hpp"
#include "aptk/parallel.hpp"
#include "aptk/projection.hpp"

namespace {

using aptk::errc;
using nlohmann::json;

// Extended reals render as numbers with 12 significant digits, "+inf" as a
// string.
json ext(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return aptk::io::round_sig(v, 12);
}

struct Config {
  std::string input, ref, constraints, output;
  double alpha = 2.0;
  std::uint64_t seed = 0;
  int samples = -1;
  int threads = 0;
  std::string format = "auto";
  std::vector<std::string> tol;
  double cell_width = 1e-3;

  std::map<std::string, double> tolerances() const {
    std::map<std::string, double> out{{"solver", 1e-8}, {"cert", 1e-6}, {"path", 1e-9}};
    for (const auto& t : tol) {
      auto pos = t.find('=');
      if (pos == std::string::npos) aptk::fail_parse("--tol expects <name>=<value>");
      std::string name = t.substr(0, pos);
      if (!out.count(name)) aptk::fail_parse("unknown tolerance '" + name + "'");
      char* end = nullptr;
      double v = std::strtod(t.c_str() + pos + 1, &end);
      if (end == t.c_str() + pos + 1 || !(v > 0.0) || !std::isfinite(v))
        aptk::fail_parse("tolerance '" + name + "' must be a positive number");
      out[name] = v;
    }
    return out;
  }

  aptk::io::Format in_format() const {
    if (format == "auto") return aptk::io::Format::auto_detect;
    if (format == "json") return aptk::io::Format::json;
    if (format == "csv") return aptk::io::Format::csv;
    aptk::fail_parse("--format must be json or csv");
  }
};

void emit(const json& report, const Config& cfg) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!cfg.output.empty()) aptk::io::write_file(cfg.output, text);
}

int cmd_entropy(const Config& cfg) {
  aptk::Density p = aptk::io::read_distribution(cfg.input, cfg.in_format());
  aptk::AlphaParam a(cfg.alpha);
  json rep;
  rep["command"] = "entropy";
  rep["alpha"] = ext(cfg.alpha);
  rep["renyi_entropy"] = ext(aptk::renyi_entropy(p, a));
  rep["shannon_entropy"] = ext(aptk::shannon_entropy(p));
  rep["support_size"] = p.support().size();
  rep["n_points"] = p.size();
  emit(rep, cfg);
  return 0;
}

int cmd_divergence(const Config& cfg) {
  aptk::Density p = aptk::io::read_distribution(cfg.input, cfg.in_format());
  aptk::Density q = aptk::io::read_distribution(cfg.ref, cfg.in_format());
  aptk::AlphaParam a(cfg.alpha);
  auto via_f = aptk::alpha_relative_entropy(p, q, a);
  auto direct = aptk::alpha_relative_entropy_direct(p, q, a);
  double delta = (via_f.finite && direct.finite) ? std::abs(via_f.value - direct.value)
                                                 : (via_f.finite == direct.finite ? 0.0
                                                                                  : std::numeric_limits<double>::infinity());
  json rep;
  rep["command"] = "divergence";
  rep["alpha"] = ext(cfg.alpha);
  rep["value"] = ext(direct.value);
  rep["finite"] = direct.finite;
  rep["via_f_divergence"] = ext(via_f.value);
  rep["via_direct_formula"] = ext(direct.value);
  rep["path_agreement_delta"] = ext(delta);
  emit(rep, cfg);
  double path_tol = cfg.tolerances().at("path");
  if (delta > path_tol * (1.0 + std::abs(direct.value)))
    aptk::fail(errc::internal, "divergence evaluation paths disagree");
  return 0;
}

int cmd_project(const Config& cfg) {
  aptk::Density r = aptk::io::read_distribution(cfg.ref, cfg.in_format());
  aptk::ConstraintSet e = aptk::io::read_constraints(cfg.constraints, r.space());
  aptk::AlphaParam a(cfg.alpha);
  auto tol = cfg.tolerances();
  aptk::SolverOptions opts;
  opts.tol = tol.at("solver");
  opts.seed = cfg.seed;
  if (cfg.samples > 0) opts.n_certificates = cfg.samples;
  aptk::ProjectionResult res = aptk::project(r, e, a, opts);

  double worst_cert = std::numeric_limits<double>::infinity();
  for (const auto& c : res.certificate_residuals)
    if (!std::isnan(c.residual)) worst_cert = std::min(worst_cert, c.residual);

  json rep;
  rep["command"] = "project";
  rep["alpha"] = ext(cfg.alpha);
  rep["value"] = ext(res.value);
  rep["converged"] = res.converged;
  rep["iterations"] = res.iterations;
  rep["restarts_agreement"] = ext(res.restarts_agreement);
  json rv = json::array();
  for (double v : res.restart_values) rv.push_back(ext(v));
  rep["restart_values"] = std::move(rv);
  rep["certificates"] = res.certificate_residuals.size();
  rep["certificate_worst_residual"] = ext(worst_cert);
  rep["q"] = json::parse(aptk::io::distribution_to_json(res.q));
  emit(rep, cfg);

  if (!res.converged) aptk::fail(errc::convergence, "projection solver did not converge");
  if (!res.certificate_residuals.empty() && worst_cert < -tol.at("cert"))
    aptk::fail(errc::internal, "Pythagorean certificate failed");
  return 0;
}

int cmd_maxent(const Config& cfg) {
  aptk::GeneralizedGaussianSpec spec = aptk::io::read_maxent_spec(cfg.input);
  aptk::GridOptions gopts;
  gopts.cell_width = cfg.cell_width;
  aptk::GeneralizedGaussian gg = aptk::generalized_gaussian(spec, gopts);
  json rep;
  rep["command"] = "maxent";
  rep["n"] = gg.n;
  rep["alpha"] = ext(gg.alpha);
  rep["b_alpha"] = ext(gg.b);
  rep["z_alpha"] = ext(gg.z_alpha);
  if (std::isfinite(gg.support_radius2))
    rep["support_radius"] = ext(std::sqrt(gg.support_radius2));
  Eigen::MatrixXd cov = aptk::covariance(gg.density);
  json cj = json::array();
  for (int i = 0; i < gg.n; ++i) {
    json row = json::array();
    for (int j = 0; j < gg.n; ++j) row.push_back(ext(cov(i, j)));
    cj.push_back(std::move(row));
  }
  rep["covariance"] = std::move(cj);
  rep["cells"] = gg.density.size();
  rep["renyi_entropy"] = ext(aptk::renyi_entropy(gg.density, aptk::AlphaParam(gg.alpha)));
  std::cout << rep.dump(2) << "\n";
  if (!cfg.output.empty()) aptk::io::write_distribution(gg.density, cfg.output);
  return 0;
}

int cmd_verify(const std::string& suite, const Config& cfg) {
  aptk::CampaignOptions opts;
  opts.n_samples = cfg.samples > 0 ? cfg.samples : 1000;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  aptk::CampaignReport rep = aptk::run_campaign(suite, opts);
  std::string text = rep.to_json();
  std::cout << text;
  if (!cfg.output.empty()) aptk::io::write_file(cfg.output, text);
  if (!rep.pass()) aptk::fail(errc::internal, "verification campaign found violations");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-relative-entropy toolkit: divergences, information projections, geometry checks"};
  app.require_subcommand(1);

  Config cfg;
  std::string suite;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "divergence order (alpha != 1)");
    sub->add_option("--seed", cfg.seed, "root seed for randomized work");
    sub->add_option("--samples", cfg.samples, "sample count (suite samples / certificates)");
    sub->add_option("--output", cfg.output, "write the JSON report/density here");
    sub->add_option("--format", cfg.format, "input format: auto|json|csv");
    sub->add_option("--tol", cfg.tol, "named tolerance, e.g. --tol solver=1e-10")->take_all();
    sub->add_option("--threads", cfg.threads, "campaign parallelism request (0 = all cores)");
  };

  CLI::App* entropy = app.add_subcommand("entropy", "Renyi/Shannon entropy of a distribution file");
  entropy->add_option("--input", cfg.input, "distribution file")->required();
  add_common(entropy);

  CLI::App* divergence = app.add_subcommand("divergence", "alpha-relative entropy between two files");
  divergence->add_option("--input", cfg.input, "P distribution file")->required();
  divergence->add_option("--ref", cfg.ref, "Q distribution file")->required();
  add_common(divergence);

  CLI::App* project = app.add_subcommand("project", "I_alpha-projection onto a constraint set");
  project->add_option("--ref", cfg.ref, "reference distribution R")->required();
  project->add_option("--constraints", cfg.constraints, "constraint file")->required();
  add_common(project);

  CLI::App* maxent = app.add_subcommand("maxent", "generalized-Gaussian Renyi entropy maximizer");
  maxent->add_option("--input", cfg.input, "maxent spec file")->required();
  maxent->add_option("--cell-width", cfg.cell_width, "quadrature cell width");
  add_common(maxent);

  CLI::App* verify = app.add_subcommand("verify", "randomized verification campaigns");
  verify->add_option("suite", suite, "parallelogram|pythagorean|derivative|limits|projection")
      ->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return static_cast<int>(errc::parse);
  }

  try {
    cfg.tolerances();  // strict config: unknown tolerance names are rejected
    cfg.in_format();
    if (entropy->parsed()) return cmd_entropy(cfg);
    if (divergence->parsed()) return cmd_divergence(cfg);
    if (project->parsed()) return cmd_project(cfg);
    if (maxent->parsed()) return cmd_maxent(cfg);
    if (verify->parsed()) return cmd_verify(suite, cfg);
  } catch (const aptk::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
