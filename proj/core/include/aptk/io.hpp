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

#include <filesystem>
#include <string>

#include "aptk/maxent.hpp"
#include "aptk/projection.hpp"

namespace aptk::io {

enum class Format { auto_detect, json, csv };

// Distribution files.
//   JSON: {"points": [...], "mu_weights": [...]?, "p": [...]}
//     points entries are labels (strings/numbers) or coordinate arrays;
//     mu_weights defaults to all 1.
//   CSV (import only): header "point,mu_weight,p", one row per point.
// Parsers reject NaN/Inf, negative densities, and nonpositive weights.
Density read_distribution(const std::filesystem::path& path, Format format = Format::auto_detect);
Density parse_distribution_json(const std::string& text);
Density parse_distribution_csv(const std::string& text);

// Written as JSON with round-trip-exact number serialization.
std::string distribution_to_json(const Density& d);
void write_distribution(const Density& d, const std::filesystem::path& path);

// Constraint files:
//   {"equalities": [{"statistic": [...], "target": t}, ...],
//    "inequalities": [{"statistic": [...], "bound": b}, ...],
//    "zero_support": [label-or-index, ...]}
// All keys optional; unknown keys rejected.
ConstraintSet read_constraints(const std::filesystem::path& path, const WeightedSpace& space);
ConstraintSet parse_constraints_json(const std::string& text, const WeightedSpace& space);

// Maxent spec: {"n": 1, "alpha": 2.0, "C": [[1.0]]}
GeneralizedGaussianSpec read_maxent_spec(const std::filesystem::path& path);
GeneralizedGaussianSpec parse_maxent_spec_json(const std::string& text);

// Report values carry 12 significant digits; +inf renders as the string
// "+inf".
double round_sig(double x, int digits);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace aptk::io
