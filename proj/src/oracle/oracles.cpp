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

#include "cicy/oracle/oracles.hpp"

#include <string>

namespace cicy::oracle
{
namespace
{
std::vector<std::int64_t> column(const ReducedConfiguration & config, Index j)
{
  std::vector<std::int64_t> out;
  for (Index i = 0; i < config.num_factors(); ++i) {
    out.push_back(config.degrees()(i, j));
  }
  return out;
}
}  // namespace

std::int64_t triple_intersection_oracle(const ReducedConfiguration & config, Triple triple)
{
  const Index m = config.num_factors();
  for (Index idx : {triple.r, triple.s, triple.t}) {
    if (idx < 0 || idx >= m) {
      throw std::out_of_range("triple index outside the configuration");
    }
  }
  const std::vector<int> caps(config.ambient_dims().begin(), config.ambient_dims().end());

  TruncatedPolynomial::Exponents start(static_cast<std::size_t>(m), 0);
  ++start[static_cast<std::size_t>(triple.r)];
  ++start[static_cast<std::size_t>(triple.s)];
  ++start[static_cast<std::size_t>(triple.t)];
  auto product = TruncatedPolynomial::monomial(caps, -1, start);

  for (Index j = 0; j < config.num_polynomials(); ++j) {
    const auto coefficients = column(config, j);
    product *= TruncatedPolynomial::linear(caps, -1, coefficients);
  }
  return narrow<std::int64_t>(product.coefficient(caps));
}

IntersectionTensor intersection_tensor_oracle(const ReducedConfiguration & config)
{
  const Index m = config.num_factors();
  IntersectionTensor out(m);
  for (Index r = 0; r < m; ++r) {
    for (Index s = r; s < m; ++s) {
      for (Index t = s; t < m; ++t) {
        out(r, s, t) = triple_intersection_oracle(config, Triple{r, s, t});
      }
    }
  }
  return out;
}

ChernSeries chern_series_oracle(const ReducedConfiguration & config)
{
  constexpr int kDegree = 3;
  const Index m = config.num_factors();
  const std::vector<int> caps(static_cast<std::size_t>(m), -1);
  const auto one = TruncatedPolynomial::constant(caps, kDegree, 1);

  TruncatedPolynomial total = one;
  for (Index i = 0; i < m; ++i) {
    TruncatedPolynomial::Exponents e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(i)] = 1;
    const auto factor = one + TruncatedPolynomial::monomial(caps, kDegree, e);
    total *= factor.pow(config.ambient_dims()(i) + 1);
  }
  for (Index j = 0; j < config.num_polynomials(); ++j) {
    const auto coefficients = column(config, j);
    const auto minus_l = -TruncatedPolynomial::linear(caps, kDegree, coefficients);
    // (1 + L)^{-1} = sum_p (-L)^p, exact up to the truncation degree.
    TruncatedPolynomial inverse = one;
    TruncatedPolynomial power = one;
    for (int p = 1; p <= kDegree; ++p) {
      power *= minus_l;
      inverse += power;
    }
    total *= inverse;
  }

  ChernSeries out{total, IntVector::Zero(m), IntMatrix::Zero(m, m),
                  SymmetricTensor3<std::int64_t>(m)};
  for (const auto & [e, c] : total.terms()) {
    std::vector<Index> idx;
    for (Index i = 0; i < m; ++i) {
      idx.insert(idx.end(), static_cast<std::size_t>(e[static_cast<std::size_t>(i)]), i);
    }
    const auto coefficient = narrow<std::int64_t>(c);
    if (idx.size() == 1) {
      out.c1(idx[0]) = coefficient;
    } else if (idx.size() == 2) {
      if (idx[0] == idx[1]) {
        out.c2_doubled(idx[0], idx[0]) = 2 * coefficient;
      } else {
        out.c2_doubled(idx[0], idx[1]) = coefficient;
        out.c2_doubled(idx[1], idx[0]) = coefficient;
      }
    } else if (idx.size() == 3) {
      const std::int64_t orderings = (idx[0] == idx[2]) ? 1 : (idx[0] == idx[1] || idx[1] == idx[2]) ? 3 : 6;
      if ((3 * coefficient) % orderings != 0) {
        throw InexactDivision(
          "series coefficient " + std::to_string(coefficient) + " is not divisible by " +
          std::to_string(orderings) + "/3");
      }
      out.c3_tripled(idx[0], idx[1], idx[2]) = 3 * coefficient / orderings;
    }
  }
  return out;
}

}  // namespace cicy::oracle
