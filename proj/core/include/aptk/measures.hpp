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

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "aptk/error.hpp"

namespace aptk {

// Probability mass of a density must match 1 within kMassTol; drift below
// kMassRenormLimit is silently renormalized, anything beyond is rejected.
inline constexpr double kMassTol = 1e-12;
inline constexpr double kMassRenormLimit = 1e-9;

// Orders within kAlphaGuard of 1 are rejected; use kl_divergence for the
// alpha = 1 limit.
inline constexpr double kAlphaGuard = 1e-6;

// Finite support carrying the dominating measure: point labels (optionally
// real coordinates) with strictly positive weights. The counting measure has
// all weights equal to 1; a grid discretization stores cell volumes.
// Immutable and cheap to copy.
class WeightedSpace {
 public:
  WeightedSpace(std::vector<std::string> labels, std::vector<double> weights);
  WeightedSpace(std::vector<Eigen::VectorXd> coords, std::vector<double> weights);
  static WeightedSpace counting(std::size_t n);

  std::size_t size() const { return data_->labels.size(); }
  double weight(std::size_t i) const { return data_->weights[i]; }
  const Eigen::ArrayXd& weights() const { return data_->warr; }
  const std::string& label(std::size_t i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  bool has_coords() const { return !data_->coords.empty(); }
  const Eigen::VectorXd& coord(std::size_t i) const;
  std::size_t dim() const { return has_coords() ? static_cast<std::size_t>(data_->coords[0].size()) : 0; }

  bool is_counting() const { return data_->counting; }

  friend bool same_space(const WeightedSpace& a, const WeightedSpace& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<Eigen::VectorXd> coords;
    std::vector<double> weights;
    Eigen::ArrayXd warr;
    bool counting = false;
  };
  explicit WeightedSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<const Data> validate(Data data);
  std::shared_ptr<const Data> data_;
};

bool same_space(const WeightedSpace& a, const WeightedSpace& b);

// Validated divergence order: alpha in (0, inf) \ {1}, with the
// reparameterization rho = (1 - alpha) / alpha, rho in (-1, inf) \ {0}.
class AlphaParam {
 public:
  explicit AlphaParam(double alpha);

  double alpha() const { return alpha_; }
  double rho() const { return rho_; }
  double sgn_rho() const { return rho_ > 0 ? 1.0 : -1.0; }
  bool below_one() const { return alpha_ < 1.0; }

 private:
  double alpha_;
  double rho_;
};

// Nonnegative density with respect to a WeightedSpace. A probability density
// has mu-weighted mass 1 (see Density::probability / normalize).
class Density {
 public:
  Density(WeightedSpace space, Eigen::ArrayXd values);

  // Validates mass within kMassRenormLimit of 1 (renormalizing small drift).
  static Density probability(WeightedSpace space, Eigen::ArrayXd values);

  const WeightedSpace& space() const { return space_; }
  const Eigen::ArrayXd& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

  double mass() const { return (values_ * space_.weights()).sum(); }
  bool is_probability() const { return probability_; }

  // Indices with strictly positive density. Support is structural: the
  // comparison is against exact zero.
  std::vector<std::size_t> support() const;

 private:
  WeightedSpace space_;
  Eigen::ArrayXd values_;
  bool probability_ = false;
};

// Probability density proportional to `values`.
Density normalize(const Eigen::ArrayXd& values, const WeightedSpace& space);

// (integral |p|^alpha dmu)^(1/alpha). Not a norm for alpha < 1.
double alpha_norm(const Density& p, const AlphaParam& a);

// Escort/tilted density p' = p^alpha / integral(p^alpha dmu).
Density tilt(const Density& p, const AlphaParam& a);

// Renyi entropy of order alpha, in nats.
double renyi_entropy(const Density& p, const AlphaParam& a);

// Shannon entropy -integral p log p dmu, with 0 log 0 = 0.
double shannon_entropy(const Density& p);

// Kullback-Leibler divergence; +infinity when supp(p) is not contained in
// supp(q).
double kl_divergence(const Density& p, const Density& q);

// Half the L1(mu) distance.
double total_variation(const Density& p, const Density& q);

Density uniform_density(const WeightedSpace& space);

}  // namespace aptk
