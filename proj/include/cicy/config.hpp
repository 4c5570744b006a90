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

#ifndef CICY_CONFIG_HPP_
#define CICY_CONFIG_HPP_

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cicy
{
using Index = Eigen::Index;
using DegreeMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using DimVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

/// Largest shapes occurring in the CICY threefold list.
inline constexpr Index kMaxFactors = 15;
inline constexpr Index kMaxPolynomials = 18;

/// Configuration matrix of a complete intersection in a product of projective
/// spaces P^{n_1} x ... x P^{n_m}. Row i of `degrees` is projective factor i,
/// column j is defining polynomial j, so degrees(i, j) = q_i^j.
struct ConfigurationMatrix
{
  std::string id;
  DimVector ambient_dims;
  DegreeMatrix degrees;

  Index num_factors() const { return degrees.rows(); }
  Index num_polynomials() const { return degrees.cols(); }

  friend bool operator==(const ConfigurationMatrix & a, const ConfigurationMatrix & b)
  {
    return a.id == b.id && a.ambient_dims.size() == b.ambient_dims.size() &&
           a.ambient_dims == b.ambient_dims && a.degrees.rows() == b.degrees.rows() &&
           a.degrees.cols() == b.degrees.cols() && a.degrees == b.degrees;
  }
};

/// Outcome of `validate`. Empty violation list means the configuration is a
/// well-formed Calabi-Yau threefold configuration.
struct ValidationReport
{
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const ConfigurationMatrix & config);

class InvalidConfiguration : public std::invalid_argument
{
public:
  explicit InvalidConfiguration(ValidationReport report);
  const ValidationReport & report() const { return report_; }

private:
  ValidationReport report_;
};

/// A configuration with zero padding stripped that is known to validate.
/// Only `reduce` constructs one.
class ReducedConfiguration
{
public:
  const ConfigurationMatrix & config() const { return config_; }
  const std::string & id() const { return config_.id; }
  const DimVector & ambient_dims() const { return config_.ambient_dims; }
  const DegreeMatrix & degrees() const { return config_.degrees; }
  Index num_factors() const { return config_.num_factors(); }
  Index num_polynomials() const { return config_.num_polynomials(); }

  /// Original (0-based) indices of the rows and columns that were dropped.
  const std::vector<Index> & removed_rows() const { return removed_rows_; }
  const std::vector<Index> & removed_columns() const { return removed_columns_; }

  friend bool operator==(const ReducedConfiguration & a, const ReducedConfiguration & b)
  {
    return a.config_ == b.config_;
  }

private:
  friend ReducedConfiguration reduce(const ConfigurationMatrix & config);

  ConfigurationMatrix config_;
  std::vector<Index> removed_rows_;
  std::vector<Index> removed_columns_;
};

/// Removes all-zero columns and all-zero padding rows (ambient dimension 0),
/// then validates. Throws InvalidConfiguration if the result does not validate.
ReducedConfiguration reduce(const ConfigurationMatrix & config);

inline ReducedConfiguration reduce(const ReducedConfiguration & reduced)
{
  return reduce(reduced.config());
}

/// Row i of the result is row perm[i] of the input (ambient dims follow).
ConfigurationMatrix permute_factors(const ConfigurationMatrix & config, std::span<const Index> perm);

/// Column j of the result is column perm[j] of the input.
ConfigurationMatrix permute_polynomials(
  const ConfigurationMatrix & config, std::span<const Index> perm);

/// True iff `perm` is a permutation of 0..n-1.
bool is_permutation_of_iota(std::span<const Index> perm, Index n);

}  // namespace cicy

#endif  // CICY_CONFIG_HPP_
