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

#include "cicy/intersection.hpp"

#include <string>

namespace cicy
{
namespace
{
void check_triple(Index m, Triple triple)
{
  for (Index idx : {triple.r, triple.s, triple.t}) {
    if (idx < 0 || idx >= m) {
      throw std::out_of_range(
        "triple index " + std::to_string(idx + 1) + " outside 1.." + std::to_string(m));
    }
  }
}

int128 factorial(int n)
{
  int128 out = 1;
  for (int i = 2; i <= n; ++i) {
    out = checked_mul(out, int128{i});
  }
  return out;
}
}  // namespace

std::vector<int> triple_multiplicity(Index num_factors, Triple triple)
{
  check_triple(num_factors, triple);
  std::vector<int> mult(static_cast<std::size_t>(num_factors), 0);
  for (Index idx : {triple.r, triple.s, triple.t}) {
    ++mult[static_cast<std::size_t>(idx)];
  }
  return mult;
}

std::optional<std::vector<int>> extended_multiplicities(
  const ReducedConfiguration & config, Triple triple)
{
  std::vector<int> mu = triple_multiplicity(config.num_factors(), triple);
  for (Index i = 0; i < config.num_factors(); ++i) {
    auto & value = mu[static_cast<std::size_t>(i)];
    value = config.ambient_dims()(i) - value;
    if (value < 0) {
      return std::nullopt;
    }
  }
  return mu;
}

std::optional<ExtendedMatrix> build_extended(const ReducedConfiguration & config, Triple triple)
{
  auto mu = extended_multiplicities(config, triple);
  if (!mu) {
    return std::nullopt;
  }
  std::vector<Index> rows;
  for (Index i = 0; i < config.num_factors(); ++i) {
    rows.insert(rows.end(), static_cast<std::size_t>((*mu)[static_cast<std::size_t>(i)]), i);
  }
  ExtendedMatrix out;
  out.matrix = config.degrees()(rows, Eigen::all).cast<std::int64_t>();
  out.row_multiplicities = std::move(*mu);
  return out;
}

int128 factorial_normalization(std::span<const int> multiplicities)
{
  int128 out = 1;
  for (int mu : multiplicities) {
    out = checked_mul(out, factorial(mu));
  }
  return out;
}

std::int64_t exact_quotient(int128 permanent, int128 normalization)
{
  if (normalization == 0 || permanent % normalization != 0) {
    throw InexactDivision(
      "permanent " + to_string(permanent) + " is not divisible by " + to_string(normalization));
  }
  return narrow<std::int64_t>(permanent / normalization);
}

IntersectionCalculator::IntersectionCalculator(const ReducedConfiguration & config)
: config_(config),
  engine_(
    config.degrees().cast<std::int64_t>(),
    std::vector<int>(config.ambient_dims().begin(), config.ambient_dims().end()))
{
}

std::int64_t IntersectionCalculator::operator()(Triple triple)
{
  const auto mu = extended_multiplicities(config_, triple);
  if (!mu) {
    return 0;
  }
  return exact_quotient(engine_(*mu), factorial_normalization(*mu));
}

IntersectionTensor IntersectionCalculator::tensor()
{
  const Index m = config_.num_factors();
  IntersectionTensor out(m);
  for (Index r = 0; r < m; ++r) {
    for (Index s = r; s < m; ++s) {
      for (Index t = s; t < m; ++t) {
        out(r, s, t) = (*this)(Triple{r, s, t});
      }
    }
  }
  return out;
}

std::int64_t triple_intersection(const ReducedConfiguration & config, Triple triple)
{
  return IntersectionCalculator(config)(triple);
}

IntersectionTensor intersection_tensor(const ReducedConfiguration & config)
{
  return IntersectionCalculator(config).tensor();
}

}  // namespace cicy
