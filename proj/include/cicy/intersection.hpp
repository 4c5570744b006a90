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

#ifndef CICY_INTERSECTION_HPP_
#define CICY_INTERSECTION_HPP_

#include "cicy/config.hpp"
#include "cicy/permanent.hpp"
#include "cicy/symmetric_tensor.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cicy
{
/// Indices (0-based) of three Kahler classes x_r, x_s, x_t.
struct Triple
{
  Index r = 0;
  Index s = 0;
  Index t = 0;
};

/// Raised when a permanent is not divisible by its factorial normalization.
/// This cannot happen for a correct implementation.
class InexactDivision : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Square matrix whose permanent, divided by prod_i multiplicity_i!, is d_rst.
/// Row i of the configuration appears `row_multiplicities[i]` times, in
/// configuration order.
struct ExtendedMatrix
{
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> matrix;
  std::vector<int> row_multiplicities;
};

/// Number of times the projective factors appear in the triple.
std::vector<int> triple_multiplicity(Index num_factors, Triple triple);

/// Row multiplicities n_i - mult_i(r,s,t); std::nullopt if any is negative
/// (x_i^{p} = 0 for p > n_i).
std::optional<std::vector<int>> extended_multiplicities(
  const ReducedConfiguration & config, Triple triple);

/// Builds A_rst, or std::nullopt when the triple vanishes by the multiplicity
/// rule. Throws std::out_of_range for indices >= m.
std::optional<ExtendedMatrix> build_extended(const ReducedConfiguration & config, Triple triple);

/// prod_i (multiplicities[i])!
int128 factorial_normalization(std::span<const int> multiplicities);

/// permanent / normalization, throwing InexactDivision on a remainder.
std::int64_t exact_quotient(int128 permanent, int128 normalization);

/// Triple intersection numbers of one configuration. Extended matrices of
/// different triples differ only in row multiplicities, so one expansion
/// cache serves all of them. Not thread-safe; use one instance per worker.
class IntersectionCalculator
{
public:
  explicit IntersectionCalculator(const ReducedConfiguration & config);

  std::int64_t operator()(Triple triple);
  IntersectionTensor tensor();

  std::size_t cache_size() const { return engine_.cache_size(); }

private:
  ReducedConfiguration config_;
  RowMultisetPermanent<int128> engine_;
};

std::int64_t triple_intersection(const ReducedConfiguration & config, Triple triple);

/// d_rst for all r <= s <= t; dimension m.
IntersectionTensor intersection_tensor(const ReducedConfiguration & config);

}  // namespace cicy

#endif  // CICY_INTERSECTION_HPP_
