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

#include "aptk/measures.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_set>

namespace aptk {

namespace {

std::string coord_label(const Eigen::VectorXd& x) {
  std::string out = "(";
  char buf[40];
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g", x[j]);
    if (j > 0) out += ",";
    out += buf;
  }
  out += ")";
  return out;
}

}  // namespace

std::shared_ptr<const WeightedSpace::Data> WeightedSpace::validate(Data data) {
  if (data.labels.empty()) fail_domain("WeightedSpace: at least one point required");
  if (data.labels.size() != data.weights.size())
    fail_domain("WeightedSpace: points and mu_weights have different lengths");
  std::unordered_set<std::string> seen;
  for (const auto& l : data.labels)
    if (!seen.insert(l).second) fail_domain("WeightedSpace: duplicate point label '" + l + "'");
  bool counting = true;
  for (double w : data.weights) {
    if (!(w > 0.0) || !std::isfinite(w)) fail_domain("WeightedSpace: mu_weights must be positive and finite");
    if (w != 1.0) counting = false;
  }
  if (!data.coords.empty()) {
    Eigen::Index d = data.coords[0].size();
    for (const auto& c : data.coords)
      if (c.size() != d) fail_domain("WeightedSpace: coordinate dimensions differ");
  }
  data.warr = Eigen::Map<const Eigen::ArrayXd>(data.weights.data(), static_cast<Eigen::Index>(data.weights.size()));
  data.counting = counting;
  return std::make_shared<const Data>(std::move(data));
}

WeightedSpace::WeightedSpace(std::vector<std::string> labels, std::vector<double> weights) {
  Data d;
  d.labels = std::move(labels);
  d.weights = std::move(weights);
  data_ = validate(std::move(d));
}

WeightedSpace::WeightedSpace(std::vector<Eigen::VectorXd> coords, std::vector<double> weights) {
  Data d;
  d.labels.reserve(coords.size());
  for (const auto& c : coords) d.labels.push_back(coord_label(c));
  d.coords = std::move(coords);
  d.weights = std::move(weights);
  data_ = validate(std::move(d));
}

WeightedSpace WeightedSpace::counting(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return WeightedSpace(std::move(labels), std::vector<double>(n, 1.0));
}

const Eigen::VectorXd& WeightedSpace::coord(std::size_t i) const {
  if (!has_coords()) fail_domain("WeightedSpace: no coordinates attached");
  return data_->coords[i];
}

bool same_space(const WeightedSpace& a, const WeightedSpace& b) {
  if (a.data_ == b.data_) return true;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.label(i) != b.label(i) || a.weight(i) != b.weight(i)) return false;
  return true;
}

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    fail_domain("AlphaParam: alpha must be a positive finite real");
  if (std::abs(alpha - 1.0) < kAlphaGuard)
    fail_domain("AlphaParam: alpha within guard distance of 1; use kl_divergence");
  rho_ = (1.0 - alpha) / alpha;
}

Density::Density(WeightedSpace space, Eigen::ArrayXd values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.size()) != space_.size())
    fail_domain("Density: value count does not match the space");
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) fail_domain("Density: values must be finite");
    if (values_[i] < 0.0) fail_domain("Density: negative value at index " + std::to_string(i));
  }
}

Density Density::probability(WeightedSpace space, Eigen::ArrayXd values) {
  Density d(std::move(space), std::move(values));
  double m = d.mass();
  if (!(m > 0.0)) fail_domain("Density: probability density must have positive mass");
  double drift = std::abs(m - 1.0);
  if (drift >= kMassRenormLimit)
    fail_domain("Density: mass " + std::to_string(m) + " too far from 1 to be a probability density");
  if (drift > kMassTol) d.values_ /= m;  // within kMassTol the values are kept bit-exact
  d.probability_ = true;
  return d;
}

std::vector<std::size_t> Density::support() const {
  std::vector<std::size_t> idx;
  for (Eigen::Index i = 0; i < values_.size(); ++i)
    if (values_[i] > 0.0) idx.push_back(static_cast<std::size_t>(i));
  return idx;
}

Density normalize(const Eigen::ArrayXd& values, const WeightedSpace& space) {
  if (static_cast<std::size_t>(values.size()) != space.size())
    fail_domain("normalize: value count does not match the space");
  double m = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) fail_domain("normalize: values must be finite");
    if (values[i] < 0.0) fail_domain("normalize: negative value at index " + std::to_string(i));
    m += values[i] * space.weight(static_cast<std::size_t>(i));
  }
  if (!(m > 0.0)) fail_domain("normalize: all values are zero");
  return Density::probability(space, values / m);
}

double alpha_norm(const Density& p, const AlphaParam& a) {
  double s = (p.values().pow(a.alpha()) * p.space().weights()).sum();
  if (!(s > 0.0)) fail_domain("alpha_norm: density is identically zero");
  return std::pow(s, 1.0 / a.alpha());
}

Density tilt(const Density& p, const AlphaParam& a) {
  if (!p.is_probability()) fail_domain("tilt: probability density required");
  Eigen::ArrayXd pa = p.values().pow(a.alpha());
  double s = (pa * p.space().weights()).sum();
  if (!(s > 0.0)) fail_domain("tilt: density is identically zero");
  return Density::probability(p.space(), pa / s);
}

double renyi_entropy(const Density& p, const AlphaParam& a) {
  if (!p.is_probability()) fail_domain("renyi_entropy: probability density required");
  double s = (p.values().pow(a.alpha()) * p.space().weights()).sum();
  if (!(s > 0.0)) fail_domain("renyi_entropy: density is identically zero");
  return std::log(s) / (1.0 - a.alpha());
}

double shannon_entropy(const Density& p) {
  if (!p.is_probability()) fail_domain("shannon_entropy: probability density required");
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double v = p[i];
    if (v > 0.0) h -= v * std::log(v) * p.space().weight(i);
  }
  return h;
}

double kl_divergence(const Density& p, const Density& q) {
  if (!same_space(p.space(), q.space())) fail_domain("kl_divergence: densities live on different spaces");
  if (!p.is_probability() || !q.is_probability())
    fail_domain("kl_divergence: probability densities required");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p[i];
    if (pi == 0.0) continue;
    double qi = q[i];
    if (qi == 0.0) return std::numeric_limits<double>::infinity();
    s += pi * std::log(pi / qi) * p.space().weight(i);
  }
  return s;
}

double total_variation(const Density& p, const Density& q) {
  if (!same_space(p.space(), q.space())) fail_domain("total_variation: densities live on different spaces");
  return 0.5 * ((p.values() - q.values()).abs() * p.space().weights()).sum();
}

Density uniform_density(const WeightedSpace& space) {
  double total = space.weights().sum();
  return Density::probability(space, Eigen::ArrayXd::Constant(static_cast<Eigen::Index>(space.size()), 1.0 / total));
}

}  // namespace aptk
