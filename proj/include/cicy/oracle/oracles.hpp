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

#ifndef CICY_ORACLE_ORACLES_HPP_
#define CICY_ORACLE_ORACLES_HPP_

#include "cicy/chern.hpp"
#include "cicy/config.hpp"
#include "cicy/intersection.hpp"
#include "cicy/oracle/polynomial.hpp"

namespace cicy::oracle
{
/// d_rst as the coefficient of prod_i x_i^{n_i} in
/// x_r x_s x_t prod_j (sum_i q_i^j x_i), expanded in the cohomology ring of
/// the ambient space (x_i^{n_i + 1} = 0).
std::int64_t triple_intersection_oracle(const ReducedConfiguration & config, Triple triple);

IntersectionTensor intersection_tensor_oracle(const ReducedConfiguration & config);

/// Total Chern class prod_i (1 + x_i)^{n_i + 1} prod_j (1 + L_j)^{-1},
/// L_j = sum_i q_i^j x_i, expanded to total degree 3, with the coefficient
/// tensors read off in the same scaled conventions as the closed forms.
struct ChernSeries
{
  TruncatedPolynomial series;
  /// Coefficient of x_r (c1).
  IntVector c1;
  /// Monomial coefficient of x_r x_s for r != s, twice that of x_r^2.
  IntMatrix c2_doubled;
  /// Three times the symmetric coefficient: monomial coefficient divided by
  /// the number of orderings of (r, s, t), times three.
  SymmetricTensor3<std::int64_t> c3_tripled;
};

ChernSeries chern_series_oracle(const ReducedConfiguration & config);

}  // namespace cicy::oracle

#endif  // CICY_ORACLE_ORACLES_HPP_
