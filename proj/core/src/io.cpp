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

#include "aptk/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aptk::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_parse("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_parse("cannot open file for writing: " + path.string());
  out << text;
}

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_parse("invalid JSON");
  return j;
}

double finite_number(const json& v, const std::string& field) {
  if (!v.is_number()) fail_parse("field '" + field + "' must be a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) fail_parse("field '" + field + "' must be finite");
  return x;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) fail_parse("unknown key '" + it.key() + "'");
  }
}

std::string number_label(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Density parse_distribution_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) fail_parse("distribution file must be a JSON object");
  check_keys(j, {"points", "mu_weights", "p"});
  if (!j.contains("points")) fail_parse("field 'points' is required");
  if (!j.contains("p")) fail_parse("field 'p' is required");
  const json& pts = j["points"];
  const json& pj = j["p"];
  if (!pts.is_array() || pts.empty()) fail_parse("field 'points' must be a non-empty array");
  if (!pj.is_array() || pj.size() != pts.size())
    fail_parse("field 'p' must be an array matching 'points'");

  std::vector<double> weights;
  if (j.contains("mu_weights")) {
    const json& wj = j["mu_weights"];
    if (!wj.is_array() || wj.size() != pts.size())
      fail_parse("field 'mu_weights' must be an array matching 'points'");
    for (const auto& w : wj) {
      double x = finite_number(w, "mu_weights");
      if (!(x > 0.0)) fail_parse("field 'mu_weights' entries must be positive");
      weights.push_back(x);
    }
  } else {
    weights.assign(pts.size(), 1.0);
  }

  bool with_coords = pts[0].is_array();
  std::vector<std::string> labels;
  std::vector<Eigen::VectorXd> coords;
  for (const auto& p : pts) {
    if (with_coords != p.is_array()) fail_parse("field 'points' mixes labels and coordinates");
    if (p.is_array()) {
      Eigen::VectorXd x(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) x[static_cast<Eigen::Index>(k)] = finite_number(p[k], "points");
      coords.push_back(std::move(x));
    } else if (p.is_string()) {
      labels.push_back(p.get<std::string>());
    } else if (p.is_number()) {
      labels.push_back(number_label(p.get<double>()));
    } else {
      fail_parse("field 'points' entries must be labels or coordinate arrays");
    }
  }

  Eigen::ArrayXd values(static_cast<Eigen::Index>(pj.size()));
  for (std::size_t k = 0; k < pj.size(); ++k) {
    double x = finite_number(pj[k], "p");
    if (x < 0.0) fail_parse("field 'p' entries must be nonnegative");
    values[static_cast<Eigen::Index>(k)] = x;
  }

  try {
    WeightedSpace space = with_coords ? WeightedSpace(std::move(coords), std::move(weights))
                                      : WeightedSpace(std::move(labels), std::move(weights));
    return Density::probability(space, std::move(values));
  } catch (const error& e) {
    fail_parse(e.what());
  }
}

Density parse_distribution_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail_parse("empty CSV file");
  // tolerate \r\n and surrounding spaces in the header
  std::string header;
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) header += c;
  if (header != "point,mu_weight,p") fail_parse("CSV header must be 'point,mu_weight,p'");

  std::vector<std::string> labels;
  std::vector<double> weights;
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string point, wstr, pstr;
    if (!std::getline(row, point, ',') || !std::getline(row, wstr, ',') || !std::getline(row, pstr))
      fail_parse("CSV line " + std::to_string(lineno) + ": expected point,mu_weight,p");
    char* end = nullptr;
    double w = std::strtod(wstr.c_str(), &end);
    if (end == wstr.c_str() || !std::isfinite(w) || !(w > 0.0))
      fail_parse("CSV line " + std::to_string(lineno) + ": field 'mu_weight' must be positive");
    double p = std::strtod(pstr.c_str(), &end);
    if (end == pstr.c_str() || !std::isfinite(p) || p < 0.0)
      fail_parse("CSV line " + std::to_string(lineno) + ": field 'p' must be nonnegative");
    labels.push_back(point);
    weights.push_back(w);
    values.push_back(p);
  }
  if (labels.empty()) fail_parse("CSV file has no rows");
  try {
    WeightedSpace space(std::move(labels), std::move(weights));
    return Density::probability(space, Eigen::Map<const Eigen::ArrayXd>(values.data(),
                                                                        static_cast<Eigen::Index>(values.size())));
  } catch (const error& e) {
    fail_parse(e.what());
  }
}

Density read_distribution(const std::filesystem::path& path, Format format) {
  std::string text = read_file(path);
  if (format == Format::auto_detect)
    format = path.extension() == ".csv" ? Format::csv : Format::json;
  return format == Format::csv ? parse_distribution_csv(text) : parse_distribution_json(text);
}

std::string distribution_to_json(const Density& d) {
  json j;
  const WeightedSpace& s = d.space();
  json pts = json::array();
  if (s.has_coords()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      json c = json::array();
      for (Eigen::Index k = 0; k < s.coord(i).size(); ++k) c.push_back(s.coord(i)[k]);
      pts.push_back(std::move(c));
    }
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) pts.push_back(s.label(i));
  }
  j["points"] = std::move(pts);
  json w = json::array(), p = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    w.push_back(s.weight(i));
    p.push_back(d[i]);
  }
  j["mu_weights"] = std::move(w);
  j["p"] = std::move(p);
  return j.dump(2) + "\n";
}

void write_distribution(const Density& d, const std::filesystem::path& path) {
  write_file(path, distribution_to_json(d));
}

ConstraintSet parse_constraints_json(const std::string& text, const WeightedSpace& space) {
  json j = parse_json(text);
  if (!j.is_object()) fail_parse("constraint file must be a JSON object");
  check_keys(j, {"equalities", "inequalities", "zero_support"});

  auto parse_rows = [&](const char* key, const char* rhs_key) {
    std::vector<LinearConstraint> rows;
    if (!j.contains(key)) return rows;
    const json& arr = j[key];
    if (!arr.is_array()) fail_parse(std::string("field '") + key + "' must be an array");
    for (const auto& r : arr) {
      if (!r.is_object()) fail_parse(std::string("field '") + key + "' entries must be objects");
      check_keys(r, {"statistic", rhs_key});
      if (!r.contains("statistic") || !r.contains(rhs_key))
        fail_parse(std::string("constraint needs 'statistic' and '") + rhs_key + "'");
      const json& st = r["statistic"];
      if (!st.is_array() || st.size() != space.size())
        fail_parse("field 'statistic' must be an array matching the space");
      LinearConstraint c;
      c.statistic.resize(static_cast<Eigen::Index>(st.size()));
      for (std::size_t k = 0; k < st.size(); ++k)
        c.statistic[static_cast<Eigen::Index>(k)] = finite_number(st[k], "statistic");
      c.target = finite_number(r[rhs_key], rhs_key);
      rows.push_back(std::move(c));
    }
    return rows;
  };

  std::vector<LinearConstraint> eqs = parse_rows("equalities", "target");
  std::vector<LinearConstraint> ineqs = parse_rows("inequalities", "bound");

  std::vector<std::size_t> zeros;
  if (j.contains("zero_support")) {
    const json& zs = j["zero_support"];
    if (!zs.is_array()) fail_parse("field 'zero_support' must be an array");
    for (const auto& z : zs) {
      if (z.is_number_unsigned() || z.is_number_integer()) {
        long idx = z.get<long>();
        if (idx < 0 || idx >= static_cast<long>(space.size()))
          fail_parse("field 'zero_support' index out of range");
        zeros.push_back(static_cast<std::size_t>(idx));
      } else if (z.is_string()) {
        std::string lbl = z.get<std::string>();
        bool found = false;
        for (std::size_t i = 0; i < space.size(); ++i)
          if (space.label(i) == lbl) {
            zeros.push_back(i);
            found = true;
            break;
          }
        if (!found) fail_parse("field 'zero_support' names unknown point '" + lbl + "'");
      } else {
        fail_parse("field 'zero_support' entries must be labels or indices");
      }
    }
  }
  return ConstraintSet(space, std::move(eqs), std::move(ineqs), std::move(zeros));
}

ConstraintSet read_constraints(const std::filesystem::path& path, const WeightedSpace& space) {
  return parse_constraints_json(read_file(path), space);
}

GeneralizedGaussianSpec parse_maxent_spec_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) fail_parse("maxent spec must be a JSON object");
  check_keys(j, {"n", "alpha", "C"});
  if (!j.contains("n") || !j.contains("alpha") || !j.contains("C"))
    fail_parse("maxent spec needs 'n', 'alpha' and 'C'");
  GeneralizedGaussianSpec spec;
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    fail_parse("field 'n' must be a positive integer");
  spec.n = j["n"].get<int>();
  spec.alpha = finite_number(j["alpha"], "alpha");
  const json& C = j["C"];
  if (!C.is_array() || C.size() != static_cast<std::size_t>(spec.n))
    fail_parse("field 'C' must be an n x n matrix");
  spec.C.resize(spec.n, spec.n);
  for (int r = 0; r < spec.n; ++r) {
    const json& row = C[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(spec.n))
      fail_parse("field 'C' must be an n x n matrix");
    for (int c = 0; c < spec.n; ++c) spec.C(r, c) = finite_number(row[c], "C");
  }
  return spec;
}

GeneralizedGaussianSpec read_maxent_spec(const std::filesystem::path& path) {
  return parse_maxent_spec_json(read_file(path));
}

}  // namespace aptk::io
