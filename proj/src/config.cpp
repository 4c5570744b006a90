// Copyright 2026 The cicy-invariants Authors
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

#include "cicy/config.hpp"

#include <sstream>

namespace cicy
{
std::string ValidationReport::summary() const
{
  if (ok()) {
    return "ok";
  }
  std::string out;
  for (const auto & v : violations) {
    if (!out.empty()) {
      out += "; ";
    }
    out += v;
  }
  return out;
}

InvalidConfiguration::InvalidConfiguration(ValidationReport report)
: std::invalid_argument("invalid configuration: " + report.summary()), report_(std::move(report))
{
}

ValidationReport validate(const ConfigurationMatrix & config)
{
  ValidationReport report;
  auto & out = report.violations;
  const Index m = config.num_factors();
  const Index k = config.num_polynomials();

  if (m < 1) {
    out.push_back("configuration has no projective factors (m = 0)");
  }
  if (k < 1) {
    out.push_back("configuration has no polynomials (k = 0)");
  }
  if (config.ambient_dims.size() != m) {
    std::ostringstream os;
    os << "ambient dimension list has " << config.ambient_dims.size() << " entries, expected m = "
       << m;
    out.push_back(os.str());
    return report;
  }
  if (m < 1 || k < 1) {
    return report;
  }
  if (m > kMaxFactors) {
    out.push_back("m = " + std::to_string(m) + " exceeds " + std::to_string(kMaxFactors));
  }
  if (k > kMaxPolynomials) {
    out.push_back("k = " + std::to_string(k) + " exceeds " + std::to_string(kMaxPolynomials));
  }

  for (Index i = 0; i < m; ++i) {
    if (config.ambient_dims(i) < 1) {
      out.push_back(
        "ambient dimension n_" + std::to_string(i + 1) + " = " +
        std::to_string(config.ambient_dims(i)) + " is not positive");
    }
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < k; ++j) {
      if (config.degrees(i, j) < 0) {
        out.push_back(
          "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
          std::to_string(config.degrees(i, j)) + " is negative");
      }
    }
  }

  const long dim_sum = config.ambient_dims.cast<long>().sum();
  if (dim_sum != 3 + k) {
    out.push_back(
      "ambient dimensions sum to " + std::to_string(dim_sum) + ", expected 3 + k = " +
      std::to_string(3 + k));
  }

  const Eigen::Matrix<long, Eigen::Dynamic, 1> row_sums = config.degrees.cast<long>().rowwise().sum();
  for (Index i = 0; i < m; ++i) {
    const long expected = static_cast<long>(config.ambient_dims(i)) + 1;
    if (row_sums(i) != expected) {
      out.push_back(
        "row " + std::to_string(i + 1) + " sums to " + std::to_string(row_sums(i)) +
        ", expected " + std::to_string(expected));
    }
  }
  for (Index j = 0; j < k; ++j) {
    if ((config.degrees.col(j).array() == 0).all()) {
      out.push_back("column " + std::to_string(j + 1) + " is all zero");
    }
  }
  return report;
}

ReducedConfiguration reduce(const ConfigurationMatrix & config)
{
  const Index m = config.num_factors();
  const Index k = config.num_polynomials();
  if (config.ambient_dims.size() != m) {
    throw InvalidConfiguration(validate(config));
  }

  std::vector<Index> keep_rows;
  std::vector<Index> keep_cols;
  ReducedConfiguration reduced;
  for (Index i = 0; i < m; ++i) {
    const bool padding = config.ambient_dims(i) == 0 && (config.degrees.row(i).array() == 0).all();
    (padding ? reduced.removed_rows_ : keep_rows).push_back(i);
  }
  for (Index j = 0; j < k; ++j) {
    const bool zero = (config.degrees.col(j).array() == 0).all();
    (zero ? reduced.removed_columns_ : keep_cols).push_back(j);
  }

  reduced.config_.id = config.id;
  reduced.config_.ambient_dims = config.ambient_dims(keep_rows);
  reduced.config_.degrees = config.degrees(keep_rows, keep_cols);

  ValidationReport report = validate(reduced.config_);
  if (!report.ok()) {
    throw InvalidConfiguration(std::move(report));
  }
  return reduced;
}

bool is_permutation_of_iota(std::span<const Index> perm, Index n)
{
  if (static_cast<Index>(perm.size()) != n) {
    return false;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      return false;
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  return true;
}

ConfigurationMatrix permute_factors(const ConfigurationMatrix & config, std::span<const Index> perm)
{
  if (!is_permutation_of_iota(perm, config.num_factors())) {
    throw std::invalid_argument("permute_factors: not a row permutation");
  }
  const std::vector<Index> rows(perm.begin(), perm.end());
  ConfigurationMatrix out;
  out.id = config.id;
  out.ambient_dims = config.ambient_dims(rows);
  out.degrees = config.degrees(rows, Eigen::all);
  return out;
}

ConfigurationMatrix permute_polynomials(
  const ConfigurationMatrix & config, std::span<const Index> perm)
{
  if (!is_permutation_of_iota(perm, config.num_polynomials())) {
    throw std::invalid_argument("permute_polynomials: not a column permutation");
  }
  const std::vector<Index> cols(perm.begin(), perm.end());
  ConfigurationMatrix out;
  out.id = config.id;
  out.ambient_dims = config.ambient_dims;
  out.degrees = config.degrees(Eigen::all, cols);
  return out;
}

}  // namespace cicy
